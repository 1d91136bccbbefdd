"""
M(Γ), ρ, M(Γ)_0, 전단사 j 와 부분순서 테스트

실행 방법:
    uv run pytest tests/test_mgamma.py -v
"""

from fractions import Fraction

import pytest

from precusp.algebra.f2spaces import F2Vector, e
from precusp.algebra.gammasets import AKind, AObject, big_x, x_set
from precusp.algebra.inductive import enum_cf_prime, lambda_prime
from precusp.algebra.mgamma import (
    MVector,
    bijection_j,
    m_set,
    m_zero,
    partial_order,
    rank,
    rho,
    rho_table,
    ss_induce,
    tower_mismatches,
    unit_pair,
)
from precusp.core.errors import BadPair


@pytest.fixture
def s2() -> AObject:
    return AObject.parse("S2")


def _by_name(obj: AObject, name: str):
    return next(p for p in big_x(obj) if p.name == name)


class TestMSet:
    """M(Γ) 의 크기"""

    @pytest.mark.parametrize("tag, size", [("S1", 1), ("S2", 4), ("S3", 8), ("V4", 16)])
    def test_sizes(self, tag, size):
        """Σ_x |Irr Z(x)|, 벡터형은 |V_D|"""
        assert len(m_set(AObject.parse(tag))) == size

    def test_unit_pair_in_m(self, s3):
        """(1, 1) ∈ M(Γ)"""
        assert unit_pair(s3) in m_set(s3)

    def test_vector_split(self):
        """벡터형 (x, σ) 는 V^1 ⊕ V^0 분해"""
        obj = AObject(AKind.VD1, 2)
        assert {p.vector for p in m_set(obj)} == {F2Vector.zero(), e(1), e(2), e(1) + e(2)}


class TestRho:
    """ρ_(Γ'⊆Γ'')"""

    def test_full_pair_s3(self, s3):
        """ρ_(S3⊆S3): 켤레류마다 자명 지표, 계수 1"""
        vec = rho(s3, _by_name(s3, "(S3⊆S3)"))
        assert len(vec.support) == 3
        assert set(vec.coefficients.values()) == {1}
        assert all(p.sigma == 0 for p in vec.support)

    @pytest.mark.parametrize("tag", ["S2", "S3", "S2'", "S3'", "S4"])
    def test_unit_anchor(self, tag):
        """ρ_(S1⊆Γ) = (1, 1)"""
        obj = AObject.parse(tag)
        pair = next(p for p in big_x(obj) if p.small_order == 1 and p.large_order == obj.order)
        assert dict(rho(obj, pair).coefficients) == {unit_pair(obj): 1}

    def test_trivial_pair_s2(self, s2):
        """ρ_(S1⊆S1) = (1, +) + (1, -)"""
        vec = rho(s2, _by_name(s2, "(S1⊆S1)"))
        assert len(vec.support) == 2
        assert all(p.x == s2.group().identity for p in vec.support)

    def test_integrality(self, s4):
        """계수는 음이 아닌 정수"""
        for _, vec in rho_table(s4):
            assert all(c.denominator == 1 and c > 0 for c in vec.coefficients.values())

    def test_vector_indicator(self):
        """ρ_(0 ⊆ V_2^1) = 0 의 지시벡터"""
        obj = AObject(AKind.VD1, 2)
        pair = next(p for p in big_x(obj) if p.small.dim == 0 and p.large.dim == 1)
        assert [p.vector for p in rho(obj, pair).support] == [F2Vector.zero()]

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_vprime_indicator(self, d):
        """E ∈ 𝔉(V'_D) 이면 ρ_λ'(E) 는 E 의 지시벡터"""
        obj = AObject(AKind.VPRIME_D1, d)
        rhos = {(p.small, p.large): vec for p, vec in rho_table(obj)}
        for space in enum_cf_prime(d):
            pair = lambda_prime(space)
            vec = rhos[(pair.small, pair.large)]
            assert {p.vector for p in vec.support} == set(space.elements())
            assert set(vec.coefficients.values()) == {1}


class TestMZero:
    """M(Γ)_0 와 rank"""

    @pytest.mark.parametrize("tag", ["S2", "S3", "S2'", "S3'", "S4", "V4", "V'5"])
    def test_rank_equals_size(self, tag):
        """rank = |X_Γ| = |M(Γ)_0|"""
        obj = AObject.parse(tag)
        size = len(big_x(obj))
        assert rank(obj) == size
        assert len(m_zero(obj)) == size

    def test_vector_zero_part(self):
        """M(V_2^1)_0 = {0, e1, e2}"""
        obj = AObject(AKind.VD1, 2)
        assert {p.vector for p in m_zero(obj)} == {F2Vector.zero(), e(1), e(2)}


class TestBijection:
    """j 와 ≼"""

    def test_s2_bijection(self, s2):
        """(1,+) ↦ (S1⊆S2)"""
        j = bijection_j(s2)
        assert j[unit_pair(s2)].name == "(S1⊆S2)"
        assert {p.name for p in j.values()} == {p.name for p in big_x(s2)}

    @pytest.mark.parametrize("tag", ["S3", "S3'", "S4", "V6"])
    def test_bijection_is_onto(self, tag):
        """j 는 M(Γ)_0 → X_Γ 전단사"""
        obj = AObject.parse(tag)
        j = bijection_j(obj)
        assert len(j) == len(big_x(obj))
        assert len(set(j.values())) == len(j)

    def test_s2_order(self, s2):
        """(1,+) 가 유일한 최소 원소이고 덮개 관계는 두 개"""
        order = partial_order(s2)
        unit = unit_pair(s2)
        assert order.minimal == (unit,)
        assert all(order.leq(unit, p) for p in order.elements)
        assert len(order.covers()) == 2

    @pytest.mark.parametrize("tag", ["S3", "S4", "V4", "V'5"])
    def test_antisymmetric(self, tag):
        """생성된 관계가 부분순서"""
        order = partial_order(AObject.parse(tag))
        for a in order.elements:
            for b in order.elements:
                if a != b:
                    assert not (order.leq(a, b) and order.leq(b, a))


class TestInduction:
    """ss 와 탑 일관성"""

    @pytest.mark.parametrize("tag", ["S2", "S3", "V4", "V'5"])
    def test_tower(self, tag):
        """ρ(당긴 쌍) = ss(ρ_몫)"""
        assert tower_mismatches(AObject.parse(tag)) == []

    @pytest.mark.parametrize(
        "kind, d",
        [(AKind.VD1, 2), (AKind.VD1, 4), (AKind.VD1, 6), (AKind.VPRIME_D1, 3), (AKind.VPRIME_D1, 5), (AKind.VPRIME_D1, 7)],
    )
    def test_vector_rho_is_ss(self, kind, d):
        """벡터형 ρ 는 ss(1, 1) 과 같음"""
        obj = AObject(kind, d)
        for pair, vec in rho_table(obj):
            assert ss_induce(obj, pair, unit_pair(pair.quotient_tag)) == vec

    def test_wrong_ambient(self, s3, s4):
        """다른 대상의 쌍은 BadPair"""
        pair = x_set(s3)[0]
        with pytest.raises(BadPair):
            ss_induce(s4, pair, unit_pair(pair.quotient_tag))

    def test_wrong_source(self, s3):
        """source 는 몫 대상의 M 원소여야 함"""
        pair = x_set(s3)[0]
        with pytest.raises(BadPair):
            ss_induce(s3, pair, unit_pair(s3))


class TestMVector:
    """C[M(Γ)] 의 연산"""

    def test_build_drops_zero(self, s2):
        """합이 0 인 계수는 저장하지 않음"""
        unit = unit_pair(s2)
        vec = MVector.build(s2, [(unit, Fraction(1)), (unit, Fraction(-1))])
        assert vec.coefficients == {}

    def test_add_and_scale(self, s2):
        """덧셈과 스칼라배"""
        unit = MVector.build(s2, [(unit_pair(s2), Fraction(1))])
        assert (unit + unit) == unit.scale(Fraction(2))

    def test_to_list(self, s2):
        """계수는 문자열로 직렬화"""
        unit = MVector.build(s2, [(unit_pair(s2), Fraction(3))])
        assert unit.to_list()[0]["coefficient"] == "3"
