"""
Q(ζ_60) 헬퍼 테스트
"""

from fractions import Fraction

import pytest

from precusp.algebra.cyclotomic import (
    ONE,
    ZERO,
    format_value,
    from_rational,
    require_rational,
    root_of_unity,
    to_fraction,
    zeta_power,
)
from precusp.core.errors import BadIndex, NonIntegralCoefficient


class TestCyclotomic:
    """원분체 원소"""

    def test_rational_roundtrip(self):
        """유리수는 그대로 되돌아옴"""
        assert to_fraction(from_rational(Fraction(3, 4))) == Fraction(3, 4)
        assert to_fraction(ZERO) == 0
        assert to_fraction(ONE) == 1

    def test_zeta_order(self):
        """ζ_60^60 = 1"""
        assert zeta_power(60) == ONE
        assert zeta_power(30) == from_rational(-1)

    def test_cube_roots_sum(self):
        """1 + ω + ω² = 0"""
        total = ONE + root_of_unity(3) + root_of_unity(3, 2)
        assert total == ZERO

    def test_not_divisor(self):
        """ζ_7 은 없음"""
        with pytest.raises(BadIndex):
            root_of_unity(7)

    def test_require_rational(self):
        """무리수 값은 NonIntegralCoefficient"""
        assert require_rational(from_rational(2)) == 2
        with pytest.raises(NonIntegralCoefficient):
            require_rational(root_of_unity(3), "test")

    def test_format(self):
        """유리수 표기"""
        assert format_value(from_rational(Fraction(-1, 2))) == "-1/2"
        assert "z" in format_value(root_of_unity(4))
