"""
데이터 접근 계층 (Repository Pattern)

폴더 구조:
    - precuspidal.py: 전첨점 자료(precuspidal.json) Repository
"""

from precusp.repositories.precuspidal import PrecuspidalRepository, get_precuspidal_repository

__all__ = ["PrecuspidalRepository", "get_precuspidal_repository"]
