"""
pydantic 스키마

폴더 구조:
    - report.py: 검증 결과와 표 출력 행
    - precuspidal.py: 전첨점(precuspidal) 데이터 자원과 호스트별 보고
"""

from precusp.schemas.precuspidal import HostReport, PrecuspidalRecord, PrecuspidalResource
from precusp.schemas.report import (
    CheckResult,
    CheckStatus,
    CoverRow,
    EnumRow,
    PairRow,
    RhoRow,
    VerificationReport,
)

__all__ = [
    "CheckResult",
    "CheckStatus",
    "CoverRow",
    "EnumRow",
    "HostReport",
    "PairRow",
    "PrecuspidalRecord",
    "PrecuspidalResource",
    "RhoRow",
    "VerificationReport",
]
