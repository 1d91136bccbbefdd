"""
Q(ζ_60) 정확 산술 헬퍼

지표값은 모두 고정된 60차 원분체 K = Q(ζ_60) 의 원소(sympy ANP)로 다룹니다.
카탈로그 군과 그 중심화군의 원소 위수는 모두 60 의 약수이므로 체를 바꿀 일이 없고,
서로 다른 지표표의 값을 그대로 비교할 수 있습니다.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.polyclasses import ANP

from precusp.core.errors import BadIndex, NonIntegralCoefficient

CONDUCTOR = 60
FIELD = QQ.cyclotomic_field(CONDUCTOR)

Cyclotomic = ANP


def from_rational(value: int | Fraction) -> ANP:
    q = Fraction(value)
    return FIELD([QQ(q.numerator, q.denominator)])


ZERO = FIELD.zero
ONE = FIELD.one


@lru_cache(maxsize=1)
def _zeta_powers() -> tuple[ANP, ...]:
    zeta = FIELD([QQ(1), QQ(0)])
    powers = [ONE]
    for _ in range(CONDUCTOR - 1):
        powers.append(powers[-1] * zeta)
    return tuple(powers)


def zeta_power(k: int) -> ANP:
    """ζ_60^k"""
    return _zeta_powers()[k % CONDUCTOR]


def root_of_unity(n: int, k: int = 1) -> ANP:
    """
    ζ_n^k = ζ_60^{k·60/n}

    Raises:
        BadIndex: n 이 60 의 약수가 아닌 경우
    """
    if n <= 0 or CONDUCTOR % n:
        raise BadIndex(f"ζ_{n} 은 Q(ζ_{CONDUCTOR}) 에 없습니다")
    return zeta_power(k * (CONDUCTOR // n))


def coefficients(a: ANP) -> tuple[Fraction, ...]:
    """ζ 의 거듭제곱 기저 계수 (최고차항 먼저, 정규형)"""
    return tuple(Fraction(int(c.numerator), int(c.denominator)) for c in a.to_list())


def sort_key(a: ANP) -> tuple[int, tuple[Fraction, ...]]:
    coeffs = coefficients(a)
    return (len(coeffs), coeffs)


def to_fraction(a: ANP) -> Fraction | None:
    """유리수면 Fraction, 아니면 None"""
    coeffs = coefficients(a)
    if not coeffs:
        return Fraction(0)
    if len(coeffs) == 1:
        return coeffs[0]
    return None


def require_rational(a: ANP, context: str = "") -> Fraction:
    value = to_fraction(a)
    if value is None:
        raise NonIntegralCoefficient(f"{context}: 무리수 계수 {format_value(a)}")
    return value


def format_value(a: ANP) -> str:
    """사람이 읽는 표기: 유리수는 그대로, 그 외에는 ζ60 다항식"""
    value = to_fraction(a)
    if value is not None:
        return str(value)
    coeffs = coefficients(a)
    degree = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        power = degree - i
        base = "1" if power == 0 else ("z" if power == 1 else f"z^{power}")
        terms.append(base if c == 1 and power else f"{c}*{base}" if power else str(c))
    return " + ".join(terms)
