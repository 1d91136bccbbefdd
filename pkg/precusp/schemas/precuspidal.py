from typing import Literal

from pydantic import BaseModel, Field, field_validator

SCHEMA_VERSION = 1


class PrecuspidalRecord(BaseModel):
    """
    첨점 족을 갖는 호스트 하나의 자료

    Attributes:
        host: 카르탄 유형 (예: "B6", "D9", "E8")
        series: B/C/D 무한 계열이면 문자, 예외형이면 None
        parameter: 무한 계열의 k (B/C_{k²+k}, D_{k²})
        gamma_c: Γ_c 의 𝔸 이름 (가설로 취급)
        alternatives: 함께 보고할 다른 Γ_c 가설
        family_size: 첨점 족의 크기 |c|
        ci_types: 𝒾_c 의 I' 유형 목록 (성분 유형의 목록)
        bar_extra: 𝒾̄_c - 𝒾_c 의 유형 (없으면 None)
        stated_count: 본문에 명시된 |𝒾_c| (명시되지 않았으면 None)
    """

    host: str = Field(..., examples=["E8", "B6"])
    series: Literal["B", "C", "D"] | None = None
    parameter: int | None = Field(default=None, ge=1)
    gamma_c: str
    alternatives: list[str] = Field(default_factory=list)
    family_size: int = Field(..., ge=1)
    ci_types: list[list[str]]
    bar_extra: list[str] | None = None
    stated_count: int | None = None

    @field_validator("ci_types")
    @classmethod
    def _non_empty(cls, value: list[list[str]]) -> list[list[str]]:
        if not value or any(not t for t in value):
            raise ValueError("ci_types 는 비어 있지 않은 유형 목록이어야 합니다")
        return value


class PrecuspidalResource(BaseModel):
    schema_version: int = SCHEMA_VERSION
    records: list[PrecuspidalRecord]

    @field_validator("schema_version")
    @classmethod
    def _supported(cls, value: int) -> int:
        if value != SCHEMA_VERSION:
            raise ValueError(f"지원하지 않는 schema_version: {value}")
        return value


class HostReport(BaseModel):
    """consistency_check 의 호스트별 결과"""

    host: str
    gamma_c: str
    bar_reading: str
    x_count: int
    bar_x_count: int
    ci_count: int
    bar_ci_count: int
    method: Literal["orbits", "stated"]
    family_size_ok: bool
    catalog_ok: bool
    parity_ok: bool
    anomaly_ok: bool
    passed: bool
    notes: list[str] = Field(default_factory=list)
