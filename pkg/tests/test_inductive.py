"""
C_j 사상과 귀납 열거 테스트

실행 방법:
    uv run pytest tests/test_inductive.py -v
"""

from math import comb

import pytest

from precusp.algebra.f2spaces import (
    F2Subspace,
    IntervalBasis,
    e,
    eta,
    interval_basis_of,
    interval_systems,
    v_d1,
    zero_v_set,
)
from precusp.algebra.inductive import (
    SubspacePair,
    cmap,
    cmap1,
    cmap_prime,
    enum_cf,
    enum_cf_prime,
    enum_occ,
    enum_occ_prime,
    epsilon_prime,
    lambda_map,
    lambda_prime,
    lift_intervals,
    pi_map,
    zero_vprime_set,
)
from precusp.core.errors import BadIndex, NotInFamily


def span(*vectors, bound):
    return F2Subspace.span(list(vectors), bound)


class TestCMaps:
    """C_j, C_j^1, C'_j"""

    def test_cmap_example(self):
        """C_1 (D=4): e_4 ↦ e_2"""
        assert cmap(4, 1).apply(e(4)) == e(2)

    def test_cmap_kernel(self):
        """ker C_j = span{e_j}"""
        for j in range(1, 5):
            assert cmap(4, j).kernel() == span(e(j), bound=4)

    def test_cmap_surjective(self):
        """C_j 는 V_{D-2} 로의 전사"""
        assert all(cmap(5, j).is_surjective() for j in range(1, 6))

    def test_cmap1_even_j_injective(self):
        """짝수 j 의 C_j^1 은 커널이 0"""
        assert cmap1(4, 2).kernel() == F2Subspace.zero(4)

    @pytest.mark.parametrize("d, j", [(1, 1), (4, 5), (4, 0)])
    def test_bad_index(self, d, j):
        """D ≥ 2, j ∈ [1, D]"""
        with pytest.raises(BadIndex):
            cmap(d, j)

    def test_prime_needs_odd(self):
        """C'_j 는 홀수 D ≥ 3"""
        with pytest.raises(BadIndex):
            cmap_prime(4, 1)


class TestEnumCf:
    """𝔉(V_D)"""

    def test_d2(self):
        """D = 2 → {0, span e1, span e2}"""
        assert set(enum_cf(2)) == {F2Subspace.zero(2), span(e(1), bound=2), span(e(2), bound=2)}

    def test_d4(self):
        """D = 4 → 10"""
        assert len(enum_cf(4)) == 10

    @pytest.mark.parametrize("d", range(0, 10))
    def test_count_matches_zero_v(self, d):
        """|𝔉(V_D)| = |⁰V_D|"""
        assert len(enum_cf(d)) == len(zero_v_set(d))

    @pytest.mark.parametrize("d", range(0, 10))
    def test_equivalence_with_interval_systems(self, d):
        """귀납 열거 = 구간 체계로 특징지은 집합"""
        assert set(enum_cf(d)) == {s.span(d) for s in interval_systems(d)}

    def test_sorted_output(self):
        """차원, 행 순으로 정렬"""
        spaces = enum_cf(6)
        assert list(spaces) == sorted(spaces, key=F2Subspace.sort_key)

    def test_negative(self):
        """D < 0 은 오류"""
        with pytest.raises(BadIndex):
            enum_cf(-2)


class TestEnumOcc:
    """occ(V_D^1)"""

    def test_d0(self):
        """D = 0 → 1개"""
        assert len(enum_occ(0)) == 1

    def test_d2(self):
        """D = 2 → (0⊆e1), (e1⊆e1), (0⊆0)"""
        zero, e1 = F2Subspace.zero(2), span(e(1), bound=2)
        assert set(enum_occ(2)) == {SubspacePair(zero, e1), SubspacePair(e1, e1), SubspacePair(zero, zero)}

    @pytest.mark.parametrize("d", range(0, 10))
    def test_count(self, d):
        """|occ(V_D^1)| = |𝔉(V_D)|"""
        assert len(enum_occ(d)) == len(enum_cf(d))

    @pytest.mark.parametrize("d", [1, 3, 5, 7])
    def test_eta_in_large(self, d):
        """D 홀수: η_D ∈ ℒ'"""
        assert all(eta(d) in pair.large for pair in enum_occ(d))


class TestPi:
    """Π_D(E) = (E^1 ⊆ (E^0)^!)"""

    def test_d2_values(self):
        """D = 2 의 세 원소"""
        zero, e1 = F2Subspace.zero(2), span(e(1), bound=2)
        assert pi_map(zero) == SubspacePair(zero, v_d1(2))
        assert pi_map(e1) == SubspacePair(e1, e1)
        assert pi_map(span(e(2), bound=2)) == SubspacePair(zero, zero)

    @pytest.mark.parametrize("d", [2, 4, 6, 8])
    def test_bijection(self, d):
        """𝔉(V_D) → occ(V_D^1) 전단사"""
        images = [pi_map(space) for space in enum_cf(d)]
        assert len(set(images)) == len(images)
        assert set(images) == set(enum_occ(d))

    def test_not_in_family(self):
        """span{e1 + e2} ∉ 𝔉(V_2)"""
        with pytest.raises(NotInFamily):
            pi_map(span(e(1) + e(2), bound=2))


class TestPrimeFamilies:
    """𝔉(V'_D), occ(V'_D^1), λ, λ', ε'"""

    @pytest.mark.parametrize("d", [1, 3, 5, 7, 9])
    def test_cf_prime_count(self, d):
        """|𝔉(V'_D)| = C(D+1, (D+1)/2) / 2"""
        assert len(enum_cf_prime(d)) == comb(d + 1, (d + 1) // 2) // 2

    def test_cf_prime_d5(self):
        """D = 5 → 10"""
        assert len(enum_cf_prime(5)) == 10

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_lambda_image(self, d):
        """λ(𝔉(V_{D-1})) = 𝔉(V'_D)"""
        assert {lambda_map(space, d) for space in enum_cf(d - 1)} == set(enum_cf_prime(d))

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_lambda_prime_bijection(self, d):
        """λ': 𝔉(V'_D) → occ(V'_D^1) 전단사"""
        pairs = [lambda_prime(space) for space in enum_cf_prime(d)]
        assert len(set(pairs)) == len(pairs)
        assert set(pairs) == set(enum_occ_prime(d))

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_epsilon_prime_bijection(self, d):
        """ε': 𝔉(V'_D) → ⁰V'_D 전단사"""
        values = [epsilon_prime(space) for space in enum_cf_prime(d)]
        assert len(set(values)) == len(values)
        assert set(values) == set(zero_vprime_set(d))

    def test_zero_vprime_d3(self):
        """|⁰V'_3| = 3"""
        assert len(zero_vprime_set(3)) == 3

    def test_lambda_even(self):
        """λ 는 홀수 D 에서만"""
        with pytest.raises(BadIndex):
            lambda_map(F2Subspace.zero(3), 4)


class TestIntervalTransport:
    """C_j^{-1} 을 따라 구간 체계 들어 올리기"""

    def test_lift_example(self):
        """{[1,1]}, j = 2 → {[1,3], [2,2]}"""
        assert lift_intervals(IntervalBasis(((1, 1),)), 2) == IntervalBasis(((1, 3), (2, 2)))

    def test_lift_shift(self):
        """j = 1 이면 모든 구간이 2 만큼 이동"""
        assert lift_intervals(IntervalBasis(((1, 1),)), 1) == IntervalBasis(((1, 1), (3, 3)))

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 7])
    def test_transport(self, d):
        """interval_basis_of(C_j^{-1}(E')) = lift(E' 의 체계)"""
        for j in range(1, d + 1):
            m = cmap(d, j)
            for sub in enum_cf(d - 2):
                assert interval_basis_of(m.preimage(sub)) == lift_intervals(interval_basis_of(sub), j)
