"""
F2 공간, u/ξ/Θ 불변량, 구간 기저 테스트

실행 방법:
    uv run pytest tests/test_f2spaces.py -v
"""

from math import comb

import pytest

from precusp.algebra.f2spaces import (
    V_SPACE,
    Z_SPACE,
    F2Subspace,
    F2Vector,
    IntervalBasis,
    annihilator,
    e,
    e_interval,
    epsilon,
    eta,
    g,
    gap_decompose,
    interval_basis_of,
    interval_systems,
    is_interval_system,
    is_isotropic,
    project,
    symplectic,
    theta,
    u_invariant,
    u_tilde,
    v_d,
    v_d1,
    vprime_space,
    xi,
    xi_inverse,
    z_double_prime,
    z_prime_sets,
    zero_v_set,
)
from precusp.core.errors import AmbientMismatch, BadIndex, NotIntervalFamily, NotInZeroV


class TestVectors:
    """F2Vector 생성과 연산"""

    def test_repeated_indices_cancel(self):
        """중복 인덱스는 상쇄"""
        assert F2Vector.of([1, 2, 2]) == e(1)

    def test_v_has_no_index_zero(self):
        """V 에는 e_0 이 없음"""
        with pytest.raises(BadIndex):
            e(0)

    def test_z_has_index_zero(self):
        """Z 에는 g_0 이 있음"""
        assert g(0).support == (0,)
        assert g(0).ambient == Z_SPACE

    def test_str(self):
        """문자열 표기"""
        assert str(e_interval(1, 3)) == "e1+e2+e3"
        assert str(F2Vector.zero()) == "0"

    def test_ambient_mismatch(self):
        """다른 공간의 벡터는 더할 수 없음"""
        with pytest.raises(AmbientMismatch):
            e(1) + g(1)

    def test_eta(self):
        """η_D = e_1 + e_3 + ... + e_D"""
        assert eta(5) == F2Vector.of([1, 3, 5])

    def test_project_kills_eta(self):
        """V'_3 에서 e_3 ≡ e_1"""
        assert project(e(3), 3) == F2Vector.of([1], vprime_space(3))
        assert not project(eta(3), 3)


class TestInvariants:
    """u, ũ, ξ, Θ"""

    def test_gap_decompose(self):
        """간격 ≥ 2 인 구간으로 분해"""
        assert gap_decompose(F2Vector.of([1, 2, 4])) == [(1, 2), (4, 4)]

    def test_u_values(self):
        """a + b 가 홀수인 구간만 기여"""
        assert u_invariant(e(1)) == 0
        assert u_invariant(e(1) + e(2)) == -1
        assert u_invariant(e(2) + e(3)) == 1
        assert u_invariant(F2Vector.zero()) == 0

    def test_xi_example(self):
        """ξ(e_1 + e_2) = g_0 + g_2"""
        assert xi(e(1) + e(2)) == g(0) + g(2)
        assert u_tilde(g(0) + g(2)) == 2

    def test_u_xi_identity(self):
        """ũ(ξ(x)) = -2·u(x), V_8 전체"""
        for x in v_d(8).elements():
            assert u_tilde(xi(x)) == -2 * u_invariant(x)

    def test_xi_inverse(self):
        """ξ⁻¹ ∘ ξ = id"""
        for x in v_d(6).elements():
            assert xi_inverse(xi(x)) == x

    def test_u_tilde_rejects_v(self):
        """ũ 는 Z 벡터에만"""
        with pytest.raises(AmbientMismatch):
            u_tilde(e(1))

    def test_xi_rejects_z(self):
        """ξ 는 V 벡터에만"""
        with pytest.raises(AmbientMismatch):
            xi(g(1))


class TestZeroV:
    """⁰V_D"""

    def test_d0(self):
        """D = 0 → {0}"""
        assert zero_v_set(0) == (F2Vector.zero(),)

    def test_d2(self):
        """D = 2 → {0, e1, e2}"""
        assert set(zero_v_set(2)) == {F2Vector.zero(), e(1), e(2)}

    @pytest.mark.parametrize("d", range(0, 11))
    def test_binomial_count(self, d):
        """|⁰V_D| 이항계수 공식"""
        expected = comb(d + 1, d // 2) if d % 2 == 0 else comb(d + 1, (d + 1) // 2)
        assert len(zero_v_set(d)) == expected

    def test_d5(self):
        """D = 5 → 20"""
        assert len(zero_v_set(5)) == 20

    def test_negative(self):
        """D < 0 은 오류"""
        with pytest.raises(BadIndex):
            zero_v_set(-1)


class TestTheta:
    """Θ(x) = x + η_D"""

    def test_zero(self):
        """Θ(0) = η_3"""
        assert theta(F2Vector.zero(), 3) == e(1) + e(3)

    @pytest.mark.parametrize("d", [1, 3, 5, 7])
    def test_fixed_point_free_involution(self, d):
        """⁰V_D 를 보존하는 고정점 없는 involution"""
        zero = set(zero_v_set(d))
        for x in zero:
            y = theta(x, d)
            assert y != x
            assert y in zero
            assert theta(y, d) == x

    def test_even_d(self):
        """짝수 D 는 오류"""
        with pytest.raises(BadIndex):
            theta(F2Vector.zero(), 4)

    def test_outside_zero_v(self):
        """u(x) ≠ 0 이면 NotInZeroV"""
        with pytest.raises(NotInZeroV):
            theta(e(1) + e(2), 3)


class TestZPrime:
    """짝/홀 개수가 같은 부분집합과 H ↦ H''"""

    @pytest.mark.parametrize("d", range(0, 9))
    def test_xi_image(self, d):
        """ξ(⁰V_D) = Z'_D"""
        assert {xi(x) for x in zero_v_set(d)} == set(z_prime_sets(d))

    @pytest.mark.parametrize("d", range(0, 9))
    def test_double_prime_bijection(self, d):
        """H'' 의 크기는 [0,D] 의 짝수 개수, 단사"""
        evens = d // 2 + 1
        images = [z_double_prime(z, d) for z in z_prime_sets(d)]
        assert len(set(images)) == len(images)
        assert all(len(z.support) == evens for z in images)


class TestSymplectic:
    """(e_i, e_j) = [|i - j| = 1]"""

    def test_values(self):
        """인접 인덱스만 1"""
        assert symplectic(e(1), e(2)) == 1
        assert symplectic(e(1), e(3)) == 0
        assert symplectic(e(2), e(2)) == 0

    def test_z_rejected(self):
        """Z 위에는 형식이 없음"""
        with pytest.raises(AmbientMismatch):
            symplectic(g(1), g(2))

    def test_annihilator(self):
        """V_3^1 안에서 e_2 의 소멸자는 e_1 + e_3"""
        sub = F2Subspace.span([e(2)], 3)
        assert annihilator(sub, v_d1(3)) == F2Subspace.span([e(1) + e(3)], 3)

    def test_isotropic(self):
        """span{e1, e2} 는 등방이 아님"""
        assert is_isotropic(F2Subspace.span([e(1), e(3)], 3))
        assert not is_isotropic(F2Subspace.span([e(1), e(2)], 2))


class TestIntervalBasis:
    """구간 체계와 ε"""

    def test_example(self):
        """span{e_[1,3], e_2} → {[1,3], [2,2]}, ε = e1+e2+e3"""
        space = F2Subspace.span([e_interval(1, 3), e(2)], 3)
        assert interval_basis_of(space).intervals == ((1, 3), (2, 2))
        assert epsilon(space) == e_interval(1, 3)

    def test_zero_space(self):
        """0 의 체계는 비어 있음"""
        assert interval_basis_of(F2Subspace.zero(4)) == IntervalBasis()
        assert epsilon(F2Subspace.zero(4)) == F2Vector.zero()

    def test_not_family(self):
        """span{e1 + e2} 는 구간 기저가 없음"""
        with pytest.raises(NotIntervalFamily):
            interval_basis_of(F2Subspace.span([e(1) + e(2)], 2))

    def test_z_rejected(self):
        """Z 부분공간은 거부"""
        with pytest.raises(AmbientMismatch):
            interval_basis_of(F2Subspace.span([g(1)], 2, Z_SPACE))

    def test_is_interval_system(self):
        """패리티, 내포, 비교차 조건"""
        assert is_interval_system([(1, 3), (2, 2)])
        assert not is_interval_system([(1, 3)])
        assert not is_interval_system([(1, 1), (2, 2)])
        assert not is_interval_system([(1, 2)])
        assert is_interval_system([(1, 1), (3, 3)])

    def test_systems_d2(self):
        """D = 2: {}, {[1,1]}, {[2,2]}"""
        spans = {s.span(2) for s in interval_systems(2)}
        assert spans == {F2Subspace.zero(2), F2Subspace.span([e(1)], 2), F2Subspace.span([e(2)], 2)}

    @pytest.mark.parametrize("d", range(0, 9))
    def test_epsilon_bijection(self, d):
        """ε: 구간 체계의 span → ⁰V_D 전단사, ε(E) ∈ E"""
        spaces = [s.span(d) for s in interval_systems(d)]
        images = [epsilon(space) for space in spaces]
        assert set(images) == set(zero_v_set(d))
        assert len(set(images)) == len(images)
        assert all(x in space for x, space in zip(images, spaces))

    def test_multiplicity(self):
        """f_j = j 를 포함하는 구간 수"""
        basis = IntervalBasis(((1, 3), (2, 2)))
        assert [basis.multiplicity(j) for j in (1, 2, 3, 4)] == [1, 2, 1, 0]

    def test_ambient_default(self):
        """구간 벡터는 V 위에 있음"""
        assert e_interval(2, 4).ambient == V_SPACE
