"""
핵심 설정 모듈

- config.py: pydantic-settings 기반 설정
- errors.py: 예외 계층
"""

from precusp.core.config import get_settings, settings

__all__ = ["settings", "get_settings"]
