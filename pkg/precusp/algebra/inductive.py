"""
귀납적 구성: C_j 사상과 𝔉(V_D), occ(V_D^1), 𝔉(V'_D), occ(V'_D^1)

각 족은 D-2 단계의 족을 C_j (또는 C_j^1, C'_j, C'_j^1) 로 당겨서(preimage) 만듭니다.
열거 결과는 D 별로 lru_cache 에 한 번만 기록되며, 정렬된 튜플로 반환됩니다.

사용법:
    from precusp.algebra.inductive import enum_cf, pi_map

    len(enum_cf(4))       # 10
    pi_map(enum_cf(2)[1]) # (E^1 ⊆ (E^0)^!)
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from loguru import logger

from precusp.algebra.f2spaces import (
    V_SPACE,
    F2Subspace,
    F2Vector,
    IntervalBasis,
    Space,
    annihilator,
    combine,
    e_interval,
    epsilon,
    kernel_combos,
    project,
    solve_combo,
    v_d,
    v_d0,
    v_d1,
    vprime_d,
    vprime_d0,
    vprime_d1,
    vprime_space,
    zero_v_set,
)
from precusp.core.errors import AmbientMismatch, BadIndex, NotInFamily, PrecuspError


# =============================================================
# 선형사상
# =============================================================


@dataclass(frozen=True)
class LinearMap:
    """
    정의역 기저 행 → 공역 벡터 대응으로 주어진 F2 선형사상

    Attributes:
        domain: 정의역 부분공간
        codomain: 공역 부분공간 (V_{D-2}, V_{D-2}^1, V'_{D-2}, ...)
        sources: 정의역의 일차독립 생성 벡터 (비트마스크)
        images: sources 각각의 상
        label: 로그/출력용 이름
    """

    domain: F2Subspace
    codomain: F2Subspace
    sources: tuple[int, ...]
    images: tuple[int, ...]
    label: str = ""

    @classmethod
    def build(
        cls,
        sources: Sequence[int],
        images: Sequence[int],
        ambient: Space,
        bound: int,
        codomain: F2Subspace,
        label: str = "",
    ) -> LinearMap:
        """
        생성 벡터와 상으로 사상을 만듭니다.

        sources 가 일차종속이어도 되지만, 종속 관계가 상에서도 성립해야 합니다
        (π 로 내린 사상처럼 정의역이 줄어드는 경우).

        Raises:
            PrecuspError: 상 대응이 선형적으로 모순인 경우
        """
        for combo in kernel_combos(sources):
            if combine(images, combo):
                raise PrecuspError(f"{label}: 상 대응이 선형적으로 일관되지 않습니다")
        kept_sources: list[int] = []
        kept_images: list[int] = []
        for s, im in zip(sources, images, strict=True):
            if solve_combo(kept_sources, s) is None:
                kept_sources.append(s)
                kept_images.append(im)
        domain = F2Subspace.span(kept_sources, bound, ambient)
        return cls(domain, codomain, tuple(kept_sources), tuple(kept_images), label)

    def apply(self, v: F2Vector) -> F2Vector:
        if v.ambient != self.domain.ambient:
            raise AmbientMismatch(f"{self.label}: {v.ambient} 벡터")
        combo = solve_combo(self.sources, v.bits)
        if combo is None:
            raise BadIndex(f"{self.label}: {v} 는 정의역 밖입니다")
        return F2Vector(self.codomain.ambient, combine(self.images, combo))

    def preimage(self, target: F2Subspace) -> F2Subspace:
        """C^{-1}(target): 공역 나머지(normal form)의 커널을 풉니다."""
        if target.ambient != self.codomain.ambient:
            raise AmbientMismatch(f"{self.label}: {target.ambient} 부분공간")
        residues = [target.normal_form(im) for im in self.images]
        vectors = [combine(self.sources, c) for c in kernel_combos(residues)]
        return F2Subspace.span(vectors, self.domain.bound, self.domain.ambient)

    def kernel(self) -> F2Subspace:
        return self.preimage(F2Subspace.zero(self.codomain.bound, self.codomain.ambient))

    def image(self) -> F2Subspace:
        return F2Subspace.span(self.images, self.codomain.bound, self.codomain.ambient)

    def is_surjective(self) -> bool:
        return self.image() == self.codomain


@dataclass(frozen=True)
class SubspacePair:
    """(ℒ ⊆ ℒ') 부분공간 쌍"""

    small: F2Subspace
    large: F2Subspace

    def __post_init__(self) -> None:
        if not self.small.issubspace(self.large):
            raise BadIndex(f"{self.small} ⊄ {self.large}")

    @property
    def ambient(self) -> Space:
        return self.large.ambient

    def sort_key(self) -> tuple:
        return (self.large.sort_key(), self.small.sort_key())

    def to_list(self) -> dict[str, list[list[int]]]:
        return {"small": self.small.to_list(), "large": self.large.to_list()}

    def __str__(self) -> str:
        return f"({self.small} ⊆ {self.large})"


# =============================================================
# C_j 사상들
# =============================================================


def _check_index(d: int, j: int, *, odd: bool = False) -> None:
    if d < 2 or not 1 <= j <= d:
        raise BadIndex(f"C_j 는 D ≥ 2, j ∈ [1, D] 에서 정의됩니다: D={d}, j={j}")
    if odd and (d < 3 or d % 2 == 0):
        raise BadIndex(f"C'_j 는 홀수 D ≥ 3 에서 정의됩니다: D={d}")


def _star(d: int, j: int) -> list[int]:
    if j == 1:
        return [1 << i for i in range(3, d + 1)]
    if j == d:
        return [1 << i for i in range(1, d - 1)]
    return (
        [1 << i for i in range(1, j - 1)]
        + [e_interval(j - 1, j + 1).bits]
        + [1 << i for i in range(j + 2, d + 1)]
    )


def _star1(d: int, j: int) -> list[int]:
    d_minus = d if d % 2 else d - 1
    if j % 2:
        return [1 << i for i in range(1, d_minus + 1, 2) if i != j]
    if j == d:
        return [1 << i for i in range(1, d_minus - 1, 2)]
    return (
        [1 << i for i in range(1, j - 2, 2)]
        + [(1 << (j - 1)) | (1 << (j + 1))]
        + [1 << i for i in range(j + 3, d_minus + 1, 2)]
    )


@lru_cache(maxsize=None)
def cmap(d: int, j: int) -> LinearMap:
    """
    C_j: U_{D,j} → V_{D-2}

    e_j ↦ 0, (*) 목록의 k 번째 벡터 ↦ e_{k+1}

    Example:
        >>> m = cmap(4, 1)
        >>> m.apply(e(4))
        e2
    """
    _check_index(d, j)
    star = _star(d, j)
    sources = [1 << j, *star]
    images = [0, *(1 << (k + 1) for k in range(len(star)))]
    return LinearMap.build(sources, images, V_SPACE, d, v_d(d - 2), f"C_{j}(D={d})")


@lru_cache(maxsize=None)
def cmap1(d: int, j: int) -> LinearMap:
    """C_j^1: U_{D,j}^1 → V_{D-2}^1 (j 의 패리티로 정의역 기저가 갈림)"""
    _check_index(d, j)
    star = _star1(d, j)
    images = [1 << (2 * k + 1) for k in range(len(star))]
    if j % 2:
        sources, images = [1 << j, *star], [0, *images]
    else:
        sources = star
    return LinearMap.build(sources, images, V_SPACE, d, v_d1(d - 2), f"C^1_{j}(D={d})")


def _descend(base: LinearMap, d: int, codomain: F2Subspace, label: str) -> LinearMap:
    space = vprime_space(d)
    sources = [project(F2Vector(V_SPACE, s), d).bits for s in base.sources]
    images = [project(F2Vector(V_SPACE, im), d - 2).bits for im in base.images]
    return LinearMap.build(sources, images, space, d, codomain, label)


@lru_cache(maxsize=None)
def cmap_prime(d: int, j: int) -> LinearMap:
    """C'_j: U'_{D,j} → V'_{D-2} (C_j(η_D) = η_{D-2} 이므로 잘 정의됨)"""
    _check_index(d, j, odd=True)
    return _descend(cmap(d, j), d, vprime_d(d - 2), f"C'_{j}(D={d})")


@lru_cache(maxsize=None)
def cmap_prime1(d: int, j: int) -> LinearMap:
    _check_index(d, j, odd=True)
    return _descend(cmap1(d, j), d, vprime_d1(d - 2), f"C'^1_{j}(D={d})")


# =============================================================
# 열거
# =============================================================


def _sorted_spaces(spaces: set[F2Subspace]) -> tuple[F2Subspace, ...]:
    return tuple(sorted(spaces, key=F2Subspace.sort_key))


def _sorted_pairs(pairs: set[SubspacePair]) -> tuple[SubspacePair, ...]:
    return tuple(sorted(pairs, key=SubspacePair.sort_key))


@lru_cache(maxsize=None)
def enum_cf(d: int) -> tuple[F2Subspace, ...]:
    """𝔉(V_D): {0} ∪ {C_j^{-1}(E') : j ∈ [1,D], E' ∈ 𝔉(V_{D-2})}"""
    if d < 0:
        raise BadIndex(f"D ≥ 0 이어야 합니다: {d}")
    if d <= 1:
        return _sorted_spaces({F2Subspace.zero(d), v_d(d)})
    found = {F2Subspace.zero(d)}
    for j in range(1, d + 1):
        m = cmap(d, j)
        found.update(m.preimage(sub) for sub in enum_cf(d - 2))
    logger.debug(f"🧮 𝔉(V_{d}): {len(found)}개")
    return _sorted_spaces(found)


@lru_cache(maxsize=None)
def enum_occ(d: int) -> tuple[SubspacePair, ...]:
    """occ(V_D^1)"""
    if d < 0:
        raise BadIndex(f"D ≥ 0 이어야 합니다: {d}")
    full = v_d1(d)
    zero = F2Subspace.zero(d)
    if d == 0:
        return (SubspacePair(zero, zero),)
    if d == 1:
        return _sorted_pairs({SubspacePair(full, full), SubspacePair(zero, full)})
    found = {SubspacePair(zero, full)}
    for j in range(1, d + 1):
        m = cmap1(d, j)
        for pair in enum_occ(d - 2):
            found.add(SubspacePair(m.preimage(pair.small), m.preimage(pair.large)))
    logger.debug(f"🧮 occ(V_{d}^1): {len(found)}개")
    return _sorted_pairs(found)


@lru_cache(maxsize=None)
def enum_cf_prime(d: int) -> tuple[F2Subspace, ...]:
    """𝔉(V'_D), j ∈ [1, D-1]"""
    space = vprime_space(d)
    zero = F2Subspace.zero(d, space)
    if d == 1:
        return (zero,)
    found = {zero}
    for j in range(1, d):
        m = cmap_prime(d, j)
        found.update(m.preimage(sub) for sub in enum_cf_prime(d - 2))
    return _sorted_spaces(found)


@lru_cache(maxsize=None)
def enum_occ_prime(d: int) -> tuple[SubspacePair, ...]:
    """occ(V'_D^1), j ∈ [1, D-1]"""
    space = vprime_space(d)
    zero = F2Subspace.zero(d, space)
    full = vprime_d1(d)
    if d == 1:
        return (SubspacePair(zero, full),)
    found = {SubspacePair(zero, full)}
    for j in range(1, d):
        m = cmap_prime1(d, j)
        for pair in enum_occ_prime(d - 2):
            found.add(SubspacePair(m.preimage(pair.small), m.preimage(pair.large)))
    return _sorted_pairs(found)


def lift_intervals(basis: IntervalBasis, j: int) -> IntervalBasis:
    """
    E' ∈ 𝔉(V_{D-2}) 의 구간 체계로부터 C_j^{-1}(E') 의 구간 체계를 만듭니다.

    [j, j] 를 더하고, 각 [a, b] 는 b < j-1 이면 그대로, a > j-1 이면 +2 이동,
    a ≤ j-1 ≤ b 이면 [a, b+2] 로 늘립니다.
    """
    lifted = [(j, j)]
    for a, b in basis.intervals:
        if b < j - 1:
            lifted.append((a, b))
        elif a > j - 1:
            lifted.append((a + 2, b + 2))
        else:
            lifted.append((a, b + 2))
    return IntervalBasis(tuple(sorted(lifted)))


def clear_caches() -> None:
    """열거 memo 를 비웁니다 (변이 테스트용)."""
    for fn in (cmap, cmap1, cmap_prime, cmap_prime1, enum_cf, enum_occ, enum_cf_prime, enum_occ_prime):
        fn.cache_clear()


# =============================================================
# 전단사 Π_D, λ, λ', ε'
# =============================================================


def pi_map(space: F2Subspace) -> SubspacePair:
    """
    Π_D(E) = (E^1 ⊆ (E^0)^!)

    Raises:
        NotInFamily: E ∉ 𝔉(V_D)
    """
    d = space.bound
    if space.ambient != V_SPACE or space not in set(enum_cf(d)):
        raise NotInFamily(f"{space} ∉ 𝔉(V_{d})")
    e0 = space.intersection(v_d0(d))
    e1 = space.intersection(v_d1(d))
    return SubspacePair(e1, annihilator(e0, v_d1(d)))


def lambda_map(space: F2Subspace, d: int) -> F2Subspace:
    """λ(E) = π(E) ⊆ V'_D,  E ∈ 𝔉(V_{D-1})"""
    if d % 2 == 0:
        raise BadIndex(f"λ 는 홀수 D 에서 정의됩니다: D={d}")
    if space.ambient != V_SPACE or space.bound != d - 1 or space not in set(enum_cf(d - 1)):
        raise NotInFamily(f"{space} ∉ 𝔉(V_{d - 1})")
    # V_{D-1} ∩ ker π = 0 이고 대표원이 그대로 유지되므로 RREF 행도 같다
    return F2Subspace(vprime_space(d), d, space.rows)


def _unlambda(space: F2Subspace) -> F2Subspace:
    d = space.bound
    if space.ambient != vprime_space(d):
        raise AmbientMismatch(f"{space.ambient} 는 V'_D 가 아닙니다")
    source = F2Subspace(V_SPACE, d - 1, space.rows)
    if source not in set(enum_cf(d - 1)):
        raise NotInFamily(f"{space} 는 λ 의 상이 아닙니다")
    return source


def lambda_prime(space: F2Subspace) -> SubspacePair:
    """λ'(𝓔) = (𝓔^1 ⊆ (𝓔^0)^!), 유도된 형식 (,)' 사용"""
    _unlambda(space)
    d = space.bound
    e0 = space.intersection(vprime_d0(d))
    e1 = space.intersection(vprime_d1(d))
    return SubspacePair(e1, annihilator(e0, vprime_d1(d)))


def epsilon_prime(space: F2Subspace) -> F2Vector:
    """ε'(π(E)) = π(ε_{D-1}(E))"""
    source = _unlambda(space)
    return project(epsilon(source), space.bound)


def zero_vprime_set(d: int) -> tuple[F2Vector, ...]:
    """⁰V'_D = π(⁰V_D)"""
    return tuple(sorted({project(x, d) for x in zero_v_set(d)}))
