"""
F2 선형대수와 구간 부분공간

공간 V (기저 e_1, e_2, ...), Z (기저 g_0, g_1, ...), V'_D = V_D / F·η_D 위의
벡터와 부분공간을 다룹니다. 벡터는 정수 비트마스크로 저장합니다
(비트 i ↔ e_i 또는 g_i).

부분공간은 기약 행사다리꼴(RREF)로 정규화합니다:
    - 각 행의 pivot = 가장 낮은 켜진 비트
    - pivot은 오름차순, 각 pivot 열은 다른 행에서 0
따라서 같은 부분공간은 항상 같은 rows 튜플을 가지며, 동등성 비교가 구조적입니다.

사용법:
    from precusp.algebra.f2spaces import e, F2Subspace, interval_basis_of, epsilon

    E = F2Subspace.span([e(1) + e(2) + e(3), e(2)], bound=3)
    interval_basis_of(E).intervals  # ((1, 3), (2, 2))
    epsilon(E)                      # e1+e2+e3
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from itertools import combinations

from loguru import logger

from precusp.core.config import settings
from precusp.core.errors import AmbientMismatch, BadIndex, NotIntervalFamily, NotInZeroV

Interval = tuple[int, int]


# =============================================================
# 공간 태그
# =============================================================


class SpaceKind(StrEnum):
    V = "V"
    Z = "Z"
    VPRIME = "V'"


@dataclass(frozen=True, order=True)
class Space:
    """
    벡터가 속한 공간 태그

    Attributes:
        kind: V | Z | V'
        bound: V'_D 의 D (홀수). V, Z 에서는 None
    """

    kind: SpaceKind
    bound: int | None = None

    @property
    def min_index(self) -> int:
        return 0 if self.kind is SpaceKind.Z else 1

    def __str__(self) -> str:
        return f"V'{self.bound}" if self.kind is SpaceKind.VPRIME else self.kind.value


V_SPACE = Space(SpaceKind.V)
Z_SPACE = Space(SpaceKind.Z)


def vprime_space(d: int) -> Space:
    """V'_D 태그를 만듭니다. D는 양의 홀수여야 합니다."""
    if d < 1 or d % 2 == 0:
        raise BadIndex(f"V'_D 는 홀수 D ≥ 1 에서만 정의됩니다: D={d}")
    return Space(SpaceKind.VPRIME, d)


def eta_bits(d: int) -> int:
    """η_D = e_1 + e_3 + ... + e_D 의 비트마스크"""
    return sum(1 << i for i in range(1, d + 1, 2))


def _canonical_bits(bits: int, ambient: Space) -> int:
    if ambient.kind is SpaceKind.VPRIME:
        d = ambient.bound
        assert d is not None
        if bits >> d & 1:
            bits ^= eta_bits(d)
    return bits


def _lowbit(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _indices(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


# =============================================================
# 벡터
# =============================================================


@dataclass(frozen=True, order=True)
class F2Vector:
    """
    F2 벡터 (비트마스크 표현)

    V'_D 벡터는 η_D 를 더해 인덱스 D를 포함하지 않는 대표원으로 저장됩니다.
    생성은 보통 F2Vector.of() 또는 e(), g() 헬퍼를 사용합니다.

    Attributes:
        ambient: 공간 태그
        bits: 지지 집합 비트마스크
    """

    ambient: Space
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise BadIndex("음수 비트마스크")
        if self.bits.bit_length() - 1 > settings.bound_cap:
            raise BadIndex(f"인덱스 상한 {settings.bound_cap} 초과: {self.support}")
        if self.ambient.min_index == 1 and self.bits & 1:
            raise BadIndex(f"{self.ambient} 에는 인덱스 0이 없습니다")
        if self.ambient.kind is SpaceKind.VPRIME:
            d = self.ambient.bound
            assert d is not None
            if self.bits >> d:
                raise BadIndex(f"{self.ambient} 대표원은 인덱스 {d} 이상을 포함할 수 없습니다")

    @classmethod
    def of(cls, indices: Iterable[int], ambient: Space = V_SPACE) -> F2Vector:
        """인덱스 목록으로 벡터를 만듭니다 (중복 인덱스는 상쇄됨)."""
        bits = 0
        for i in indices:
            if i < ambient.min_index:
                raise BadIndex(f"{ambient} 인덱스 범위 밖: {i}")
            if ambient.kind is SpaceKind.VPRIME and i > (ambient.bound or 0):
                raise BadIndex(f"{ambient} 인덱스 범위 밖: {i}")
            bits ^= 1 << i
        return cls(ambient, _canonical_bits(bits, ambient))

    @classmethod
    def zero(cls, ambient: Space = V_SPACE) -> F2Vector:
        return cls(ambient, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return _indices(self.bits)

    @property
    def max_index(self) -> int:
        return self.bits.bit_length() - 1

    def __add__(self, other: F2Vector) -> F2Vector:
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} + {other.ambient}")
        return F2Vector(self.ambient, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def to_list(self) -> list[int]:
        return list(self.support)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        letter = "g" if self.ambient.kind is SpaceKind.Z else "e"
        return "+".join(f"{letter}{i}" for i in self.support)


def e(i: int, ambient: Space = V_SPACE) -> F2Vector:
    return F2Vector.of([i], ambient)


def g(i: int) -> F2Vector:
    return F2Vector.of([i], Z_SPACE)


def e_interval(a: int, b: int, ambient: Space = V_SPACE) -> F2Vector:
    """e_[a,b] = e_a + e_{a+1} + ... + e_b"""
    return F2Vector.of(range(a, b + 1), ambient)


def eta(d: int) -> F2Vector:
    return F2Vector(V_SPACE, eta_bits(d))


def project(x: F2Vector, d: int) -> F2Vector:
    """π: V_D → V'_D (정규 대표원으로)"""
    if x.ambient != V_SPACE:
        raise AmbientMismatch(f"π 는 V 벡터에만 적용됩니다: {x.ambient}")
    if x.max_index > d:
        raise BadIndex(f"{x} 는 V_{d} 에 속하지 않습니다")
    space = vprime_space(d)
    return F2Vector(space, _canonical_bits(x.bits, space))


def lift(x: F2Vector) -> F2Vector:
    """V'_D 벡터의 정규 대표원을 V 벡터로 되돌립니다."""
    return F2Vector(V_SPACE, x.bits)


# =============================================================
# 비트마스크 소거 헬퍼
# =============================================================


def _reduce_rows(vectors: Iterable[int]) -> tuple[int, ...]:
    """비트마스크 목록을 RREF 행 튜플로 정규화합니다 (pivot = 최하위 비트)."""
    pivots: dict[int, int] = {}
    for v in vectors:
        for p, row in pivots.items():
            if v >> p & 1:
                v ^= row
        if not v:
            continue
        p = _lowbit(v)
        for q in list(pivots):
            if pivots[q] >> p & 1:
                pivots[q] ^= v
        pivots[p] = v
    return tuple(pivots[p] for p in sorted(pivots))


def kernel_combos(images: Sequence[int]) -> list[int]:
    """
    Σ_{i∈S} images[i] = 0 을 만족하는 첨자 집합 S (비트마스크)의 기저를 반환합니다.
    """
    basis: dict[int, tuple[int, int]] = {}
    kernel = []
    for idx, v in enumerate(images):
        combo = 1 << idx
        while v:
            p = _lowbit(v)
            if p not in basis:
                basis[p] = (v, combo)
                break
            bv, bc = basis[p]
            v ^= bv
            combo ^= bc
        else:
            kernel.append(combo)
    return kernel


def solve_combo(sources: Sequence[int], target: int) -> int | None:
    """target 을 sources 의 합으로 나타내는 첨자 마스크, 불가능하면 None"""
    basis: dict[int, tuple[int, int]] = {}
    for idx, v in enumerate(sources):
        combo = 1 << idx
        while v:
            p = _lowbit(v)
            if p not in basis:
                basis[p] = (v, combo)
                break
            bv, bc = basis[p]
            v ^= bv
            combo ^= bc
    combo = 0
    while target:
        p = _lowbit(target)
        if p not in basis:
            return None
        bv, bc = basis[p]
        target ^= bv
        combo ^= bc
    return combo


def combine(vectors: Sequence[int], mask: int) -> int:
    out = 0
    for idx in _indices(mask):
        out ^= vectors[idx]
    return out


# =============================================================
# 부분공간
# =============================================================


@dataclass(frozen=True)
class F2Subspace:
    """
    정규 RREF 기저를 가진 부분공간

    Attributes:
        ambient: 공간 태그
        bound: 주변 공간의 D (V_D, V'_D 등)
        rows: RREF 행 비트마스크
    """

    ambient: Space
    bound: int
    rows: tuple[int, ...] = ()

    @classmethod
    def span(
        cls,
        vectors: Iterable[F2Vector | int],
        bound: int,
        ambient: Space = V_SPACE,
    ) -> F2Subspace:
        bits = []
        for v in vectors:
            if isinstance(v, F2Vector):
                if v.ambient != ambient:
                    raise AmbientMismatch(f"{v.ambient} 벡터를 {ambient} 부분공간에 넣을 수 없습니다")
                v = v.bits
            if v.bit_length() - 1 > bound:
                raise BadIndex(f"지지 집합이 bound {bound} 를 넘습니다: {_indices(v)}")
            bits.append(v)
        return cls(ambient, bound, _reduce_rows(bits))

    @classmethod
    def zero(cls, bound: int, ambient: Space = V_SPACE) -> F2Subspace:
        return cls(ambient, bound, ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_lowbit(r) for r in self.rows)

    @property
    def basis(self) -> tuple[F2Vector, ...]:
        return tuple(F2Vector(self.ambient, r) for r in self.rows)

    def normal_form(self, bits: int) -> int:
        """bits 를 이 부분공간으로 환원한 나머지 (선형 사영)"""
        for row in self.rows:
            if bits >> _lowbit(row) & 1:
                bits ^= row
        return bits

    def __contains__(self, v: F2Vector | int) -> bool:
        if isinstance(v, F2Vector):
            if v.ambient != self.ambient:
                raise AmbientMismatch(f"{v.ambient} ∉ {self.ambient}")
            v = v.bits
        return self.normal_form(v) == 0

    def issubspace(self, other: F2Subspace) -> bool:
        return all(r in other for r in self.rows)

    def __add__(self, other: F2Subspace) -> F2Subspace:
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} + {other.ambient}")
        return F2Subspace(self.ambient, max(self.bound, other.bound), _reduce_rows(self.rows + other.rows))

    def intersection(self, other: F2Subspace) -> F2Subspace:
        """Zassenhaus 방식 대신 결합 관계의 커널로 교집합을 구합니다."""
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} ∩ {other.ambient}")
        images = list(self.rows) + list(other.rows)
        vectors = []
        for combo in kernel_combos(images):
            vectors.append(combine(self.rows, combo & ((1 << self.dim) - 1)))
        return F2Subspace(self.ambient, self.bound, _reduce_rows(vectors))

    def elements(self) -> Iterator[F2Vector]:
        """모든 원소를 비트 순서대로 나열합니다 (2^dim 개)."""
        values = sorted(combine(self.rows, mask) for mask in range(1 << self.dim))
        for bits in values:
            yield F2Vector(self.ambient, bits)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.dim, self.rows)

    def to_list(self) -> list[list[int]]:
        return [list(_indices(r)) for r in self.rows]

    def __str__(self) -> str:
        if not self.rows:
            return "0"
        return "<" + ", ".join(str(v) for v in self.basis) + ">"


def coordinate_subspace(indices: Iterable[int], bound: int, ambient: Space = V_SPACE) -> F2Subspace:
    return F2Subspace(ambient, bound, tuple(1 << i for i in sorted(set(indices))))


def v_d(d: int) -> F2Subspace:
    """V_D = span{e_1..e_D}"""
    return coordinate_subspace(range(1, d + 1), d)


def v_d0(d: int) -> F2Subspace:
    """V_D^0 (짝수 인덱스)"""
    return coordinate_subspace(range(2, d + 1, 2), d)


def v_d1(d: int) -> F2Subspace:
    """V_D^1 (홀수 인덱스)"""
    return coordinate_subspace(range(1, d + 1, 2), d)


def vprime_d(d: int) -> F2Subspace:
    return coordinate_subspace(range(1, d), d, vprime_space(d))


def vprime_d0(d: int) -> F2Subspace:
    return coordinate_subspace(range(2, d, 2), d, vprime_space(d))


def vprime_d1(d: int) -> F2Subspace:
    # π(e_D) = e_1 + e_3 + ... + e_{D-2} 이므로 대표원은 D-2 이하의 홀수 좌표
    return coordinate_subspace(range(1, d - 1, 2), d, vprime_space(d))


# =============================================================
# 심플렉틱 형식
# =============================================================


def symplectic(x: F2Vector, y: F2Vector) -> int:
    """
    (e_i, e_j) = 1  (|i - j| = 1),  0 (그 외)

    V'_D 에서는 η_D 가 V_D 위 형식의 근기(radical)에 속하므로
    정규 대표원 위에서 같은 공식을 쓰면 유도된 형식이 됩니다.
    """
    if x.ambient != y.ambient or x.ambient.kind is SpaceKind.Z:
        raise AmbientMismatch(f"({x.ambient}, {y.ambient})")
    return form_bits(x.bits, y.bits)


def form_bits(x: int, y: int) -> int:
    return ((x & (y << 1)).bit_count() + (x & (y >> 1)).bit_count()) & 1


def annihilator(sub: F2Subspace, within: F2Subspace) -> F2Subspace:
    """{x ∈ within : (x, sub) = 0}"""
    if sub.ambient != within.ambient:
        raise AmbientMismatch(f"{sub.ambient} vs {within.ambient}")
    images = []
    for w in within.rows:
        images.append(sum(form_bits(w, s) << k for k, s in enumerate(sub.rows)))
    vectors = [combine(within.rows, combo) for combo in kernel_combos(images)]
    return F2Subspace(within.ambient, within.bound, _reduce_rows(vectors))


def is_isotropic(sub: F2Subspace) -> bool:
    return all(form_bits(a, b) == 0 for a, b in combinations(sub.rows, 2))


# =============================================================
# 스칼라 불변량 u, ũ, ξ, Θ
# =============================================================


def gap_decompose(x: F2Vector) -> list[Interval]:
    """
    x = e_[a1,b1] + e_[a2,b2] + ... (a_{s+1} - b_s ≥ 2) 로 분해합니다.

    Example:
        >>> gap_decompose(F2Vector.of([1, 2, 4]))
        [(1, 2), (4, 4)]
    """
    out: list[Interval] = []
    for i in x.support:
        if out and out[-1][1] == i - 1:
            out[-1] = (out[-1][0], i)
        else:
            out.append((i, i))
    return out


def u_invariant(x: F2Vector) -> int:
    """a + b 가 홀수인 구간마다 (-1)^a 를 더합니다."""
    return sum((-1) ** a for a, b in gap_decompose(x) if (a + b) % 2)


def u_tilde(z: F2Vector) -> int:
    """짝수 인덱스 개수 - 홀수 인덱스 개수"""
    if z.ambient != Z_SPACE:
        raise AmbientMismatch(f"ũ 는 Z 벡터에만 정의됩니다: {z.ambient}")
    even = sum(1 for i in z.support if i % 2 == 0)
    return even - (len(z.support) - even)


def xi(x: F2Vector) -> F2Vector:
    """
    ξ(e_i) = g_{i-1} + g_i 의 선형 확장 (V → Z̄ 동형사상)

    구간 하나에 대해 ξ(e_[a,b]) = g_{a-1} + g_b 이므로
    ũ(ξ(x)) = -2·u(x) 가 성립합니다.
    """
    if x.ambient != V_SPACE:
        raise AmbientMismatch(f"ξ 는 V 벡터에만 정의됩니다: {x.ambient}")
    return F2Vector(Z_SPACE, x.bits ^ (x.bits >> 1))


def xi_inverse(z: F2Vector) -> F2Vector:
    """Z̄ (좌표합 0) 벡터를 ξ 의 역상으로 되돌립니다."""
    if z.ambient != Z_SPACE or z.bits.bit_count() % 2:
        raise AmbientMismatch(f"{z} 는 Z̄ 에 속하지 않습니다")
    bits, running = 0, 0
    for j in range(z.bits.bit_length()):
        running ^= z.bits >> j & 1
        bits |= running << (j + 1)
    return F2Vector(V_SPACE, bits)


@lru_cache(maxsize=None)
def zero_v_set(d: int) -> tuple[F2Vector, ...]:
    """⁰V_D = {x ∈ V_D : u(x) = 0}, 비트 순서로 정렬"""
    if d < 0:
        raise BadIndex(f"D ≥ 0 이어야 합니다: {d}")
    out = []
    for mask in range(1 << d):
        x = F2Vector(V_SPACE, mask << 1)
        if u_invariant(x) == 0:
            out.append(x)
    logger.debug(f"🧮 ⁰V_{d}: {len(out)}개")
    return tuple(out)


def theta(x: F2Vector, d: int) -> F2Vector:
    """Θ(x) = x + η_D (D 홀수, x ∈ ⁰V_D)"""
    if d % 2 == 0 or d < 1:
        raise BadIndex(f"Θ 는 홀수 D 에서만 정의됩니다: D={d}")
    if x.ambient != V_SPACE or x.max_index > d:
        raise BadIndex(f"{x} 는 V_{d} 에 속하지 않습니다")
    if u_invariant(x) != 0:
        raise NotInZeroV(f"u({x}) = {u_invariant(x)} ≠ 0")
    return x + eta(d)


def z_prime_sets(d: int) -> tuple[F2Vector, ...]:
    """H ⊆ [0, D] 중 짝수 원소 수와 홀수 원소 수가 같은 것 (= ⁰Z̄_D)"""
    out = []
    for mask in range(1 << (d + 1)):
        z = F2Vector(Z_SPACE, mask)
        if u_tilde(z) == 0:
            out.append(z)
    return tuple(out)


def z_double_prime(z: F2Vector, d: int) -> F2Vector:
    """H ↦ ([0,D]^0 - H^0) ∪ H^1, 크기가 [0,D] 의 짝수 개수인 집합으로 가는 전단사"""
    evens = sum(1 << i for i in range(0, d + 1, 2))
    return F2Vector(Z_SPACE, (evens & ~z.bits) | (z.bits & ~evens))


# =============================================================
# 구간 기저
# =============================================================


@dataclass(frozen=True)
class IntervalBasis:
    """
    𝔉(V) 원소의 구간 체계 {[a_k, b_k]} (사전식 정렬)
    """

    intervals: tuple[Interval, ...] = ()

    def vectors(self) -> list[F2Vector]:
        return [e_interval(a, b) for a, b in self.intervals]

    def span(self, bound: int) -> F2Subspace:
        return F2Subspace.span(self.vectors(), bound)

    def multiplicity(self, j: int) -> int:
        """f_j = j 를 포함하는 구간의 개수"""
        return sum(1 for a, b in self.intervals if a <= j <= b)

    def to_list(self) -> list[list[int]]:
        return [[a, b] for a, b in self.intervals]


def _separated_or_nested(p: Interval, q: Interval) -> bool:
    (a, b), (c, d) = p, q
    if b + 2 <= c or d + 2 <= a:
        return True
    return (a < c and d < b) or (c < a and b < d)


def is_interval_system(intervals: Iterable[Interval]) -> bool:
    """조건 (i) 패리티, (ii) 내포, (iii) 비교차 를 직접 확인합니다."""
    items = list(intervals)
    if len(set(items)) != len(items):
        return False
    for a, b in items:
        if a < 1 or a > b or (b - a) % 2:
            return False
    for p, q in combinations(items, 2):
        if not _separated_or_nested(p, q):
            return False
    for a, b in items:
        for c in range(a + 1, b, 2):
            if not any(a < a2 <= c <= b2 < b for a2, b2 in items):
                return False
    return True


@lru_cache(maxsize=None)
def _forests(lo: int, hi: int) -> tuple[tuple[Interval, ...], ...]:
    # [lo, hi] 안의 임의의 체계 (최상위 구간 사이 간격 ≥ 2)
    if lo > hi:
        return ((),)
    out = list(_forests(lo + 1, hi))
    for b in range(lo, hi + 1, 2):
        for inner in _covered(lo + 1, b - 1, (lo + 1) % 2):
            for rest in _forests(b + 2, hi):
                out.append(((lo, b), *inner, *rest))
    return tuple(out)


@lru_cache(maxsize=None)
def _covered(lo: int, hi: int, parity: int) -> tuple[tuple[Interval, ...], ...]:
    # [lo, hi] 안의 체계 중 최상위 구간이 parity 위치를 모두 덮는 것
    if lo > hi:
        return ((),)
    out: list[tuple[Interval, ...]] = []
    if lo % 2 != parity:
        out.extend(_covered(lo + 1, hi, parity))
    for b in range(lo, hi + 1, 2):
        if b + 1 <= hi and (b + 1) % 2 == parity:
            continue
        for inner in _covered(lo + 1, b - 1, (lo + 1) % 2):
            for rest in _covered(b + 2, hi, parity):
                out.append(((lo, b), *inner, *rest))
    return tuple(out)


@lru_cache(maxsize=None)
def interval_systems(d: int) -> tuple[IntervalBasis, ...]:
    """끝점이 D 이하인 모든 구간 체계 (조건 (i)-(iii))"""
    return tuple(IntervalBasis(tuple(sorted(s))) for s in _forests(1, d))


def interval_basis_of(space: F2Subspace) -> IntervalBasis:
    """
    부분공간의 구간 기저를 찾습니다 (𝔉(V) 소속 판정 겸용).

    1. 부분공간에 속하는 패리티 조건 구간 e_[a,b] 를 모두 모읍니다.
    2. 그 개수가 차원과 같고 조건 (i)-(iii)을 만족하면 그대로 인증서로 사용합니다.
    3. 아니면 후보 구간의 dim 개 부분집합을 전수 탐색합니다.

    Args:
        space: V 의 부분공간

    Returns:
        IntervalBasis: 유일한 구간 체계

    Raises:
        NotIntervalFamily: 구간 체계가 존재하지 않는 경우
    """
    if space.ambient != V_SPACE:
        raise AmbientMismatch(f"구간 기저는 V 부분공간에만 정의됩니다: {space.ambient}")
    if space.dim == 0:
        return IntervalBasis()

    top = max(r.bit_length() - 1 for r in space.rows)
    candidates = [
        (a, b)
        for a in range(1, top + 1)
        for b in range(a, top + 1, 2)
        if e_interval(a, b).bits in space
    ]

    if len(candidates) == space.dim and is_interval_system(candidates):
        if F2Subspace.span([e_interval(a, b) for a, b in candidates], space.bound).dim == space.dim:
            return IntervalBasis(tuple(sorted(candidates)))

    logger.debug(f"구간 인증서 실패, 전수 탐색으로 전환: {space} (후보 {len(candidates)}개)")
    for combo in combinations(candidates, space.dim):
        if not is_interval_system(combo):
            continue
        if F2Subspace.span([e_interval(a, b) for a, b in combo], space.bound) == space:
            return IntervalBasis(tuple(sorted(combo)))

    raise NotIntervalFamily(f"{space} 는 구간 기저를 갖지 않습니다")


def epsilon(space: F2Subspace) -> F2Vector:
    """
    ε(E) = Σ_j T(f_j(E)) e_j,  T(f) = f(f+1)/2 mod 2

    Raises:
        NotIntervalFamily: E ∉ 𝔉(V)
    """
    basis = interval_basis_of(space)
    bits = 0
    for j in range(1, space.bound + 1):
        f = basis.multiplicity(j)
        if (f * (f + 1) // 2) % 2:
            bits |= 1 << j
    return F2Vector(V_SPACE, bits)


def clear_caches() -> None:
    for fn in (zero_v_set, interval_systems, _forests, _covered):
        fn.cache_clear()
