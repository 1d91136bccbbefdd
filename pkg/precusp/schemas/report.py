from typing import Any, Literal

from pydantic import BaseModel, Field, computed_field

CheckStatus = Literal["pass", "fail", "info"]


class CheckResult(BaseModel):
    """
    검증 하나의 결과

    Attributes:
        id: 검증 식별자 (예: "gammasets.golden_x")
        status: pass | fail | info
            - info: bar 족처럼 정리가 보장되지 않아 실패해도 종료 코드에 반영하지 않는 검사
        details: 사람이 읽는 요약 또는 오류 메시지
        data: 비교한 값 (선택)
    """

    id: str = Field(..., min_length=1, examples=["mgamma.rho_basis"])
    status: CheckStatus
    details: str = ""
    data: dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    checks: list[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "info": 0}
        for check in self.checks:
            counts[check.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


# =============================================================
# 표 출력 행
# =============================================================


class EnumRow(BaseModel):
    """enum 명령의 한 행"""

    index: int
    value: list[list[int]] | list[int] | None = None
    interval_basis: list[list[int]] | None = None
    epsilon: list[int] | None = None
    pair: dict[str, list[list[int]]] | None = None


class PairRow(BaseModel):
    """xgamma 명령의 한 행"""

    index: int
    name: str
    small_order: int
    large_order: int
    quotient: str | None = None
    small: list[list[int]] | None = None
    large: list[list[int]] | None = None


class RhoRow(BaseModel):
    pair: str
    support: list[Any]
    coefficients: list[int]


class CoverRow(BaseModel):
    """Hasse 도표의 덮개 관계 lower ⋖ upper"""

    lower: Any
    upper: Any
