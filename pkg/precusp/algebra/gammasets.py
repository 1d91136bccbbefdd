"""
𝔸 의 대상과 색인 집합 x_Γ, x̄_Γ, X_Γ, X̄_Γ

벡터형 대상(V_D^1, V'_D^1)은 F2 부분공간 쌍으로, 대칭형 대상(S_n, S'_2, S'_3)은
S5 안의 문자 그대로의 부분군 쌍으로 저장합니다. X_Γ 는 Γ-켤레 아래에서
중복을 제거하며, 대표 쌍은 처음 만난 문자 그대로의 쌍입니다.

사용법:
    from precusp.algebra.gammasets import AObject, big_x

    s4 = AObject.parse("S4")
    [p.name for p in big_x(s4)]   # 11개, 표시 순서
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache
from math import factorial

from loguru import logger

from precusp.algebra.f2spaces import (
    V_SPACE,
    F2Subspace,
    e,
    project,
    v_d1,
    vprime_d1,
    vprime_space,
)
from precusp.algebra.groups import (
    CATALOG_ORDER,
    Homomorphism,
    PermGroup,
    catalog_name,
    conjugate_set,
    identify_aobject,
    is_aproduct,
    is_normal,
    make_standard,
    quotient,
    quotient_map,
)
from precusp.algebra.inductive import LinearMap, cmap1, cmap_prime1
from precusp.core.config import BarReading, settings
from precusp.core.errors import BadPair, NotNormal, TrivialGroup, UnknownTag


# =============================================================
# 𝔸 의 대상
# =============================================================


class AKind(StrEnum):
    VD1 = "VD1"
    VPRIME_D1 = "VPRIME_D1"
    SYM = "SYM"
    SYM_PRIME = "SYM_PRIME"


@dataclass(frozen=True, order=True)
class AObject:
    """
    𝔸 의 대상

    V_0^1 = V'_1^1 = S1, V_2^1 = V'_3^1 = S2 는 같은 tag 를 갖지만
    실현(부분공간 / 치환군)은 kind 를 따릅니다.

    Attributes:
        kind: VD1 | VPRIME_D1 | SYM | SYM_PRIME
        param: D 또는 n
    """

    kind: AKind
    param: int

    def __post_init__(self) -> None:
        ok = {
            AKind.VD1: self.param >= 0 and self.param % 2 == 0,
            AKind.VPRIME_D1: self.param >= 1 and self.param % 2 == 1,
            AKind.SYM: 1 <= self.param <= 5,
            AKind.SYM_PRIME: self.param in (2, 3),
        }[self.kind]
        if not ok:
            raise UnknownTag(f"{self.kind}({self.param}) 는 𝔸 에 없습니다")

    @classmethod
    def parse(cls, tag: str) -> AObject:
        """
        "S1".."S5", "S2'", "S3'", "V{D}" (D 짝수), "V'{D}" (D 홀수)

        Raises:
            UnknownTag: 형식이 맞지 않는 경우
        """
        text = tag.strip()
        try:
            if text.startswith("V'"):
                return cls(AKind.VPRIME_D1, int(text[2:]))
            if text.startswith("V"):
                return cls(AKind.VD1, int(text[1:]))
            if text.startswith("S") and text.endswith("'"):
                return cls(AKind.SYM_PRIME, int(text[1:-1]))
            if text.startswith("S"):
                return cls(AKind.SYM, int(text[1:]))
        except ValueError as exc:
            raise UnknownTag(f"알 수 없는 𝔸 이름: {tag}") from exc
        raise UnknownTag(f"알 수 없는 𝔸 이름: {tag}")

    @property
    def is_vector(self) -> bool:
        return self.kind in (AKind.VD1, AKind.VPRIME_D1)

    @property
    def rank(self) -> int:
        """벡터형의 F2 차원"""
        if self.kind is AKind.VD1:
            return self.param // 2
        if self.kind is AKind.VPRIME_D1:
            return (self.param - 1) // 2
        raise TypeError("대칭형 대상에는 F2 차원이 없습니다")

    @property
    def order(self) -> int:
        return 2**self.rank if self.is_vector else factorial(self.param)

    @property
    def tag(self) -> str:
        if self.is_vector and self.rank == 0:
            return "S1"
        if self.is_vector and (self.kind, self.param) in ((AKind.VD1, 2), (AKind.VPRIME_D1, 3)):
            return "S2"
        match self.kind:
            case AKind.VD1:
                return f"V{self.param}"
            case AKind.VPRIME_D1:
                return f"V'{self.param}"
            case AKind.SYM:
                return f"S{self.param}"
            case _:
                return f"S{self.param}'"

    @property
    def anomalous(self) -> bool:
        """S'2, S'3, S4, S5"""
        return self.kind is AKind.SYM_PRIME or (self.kind is AKind.SYM and self.param >= 4)

    def group(self) -> PermGroup:
        if self.is_vector:
            raise TypeError(f"{self.tag} 는 벡터형입니다")
        return make_standard(f"S{self.param}")

    def full(self) -> F2Subspace | PermGroup:
        """Γ 자신의 실현"""
        if self.kind is AKind.VD1:
            return v_d1(self.param)
        if self.kind is AKind.VPRIME_D1:
            return vprime_d1(self.param)
        return self.group()

    def trivial(self) -> F2Subspace | PermGroup:
        if self.kind is AKind.VD1:
            return F2Subspace.zero(self.param)
        if self.kind is AKind.VPRIME_D1:
            return F2Subspace.zero(self.param, vprime_space(self.param))
        return make_standard("S1")

    def __str__(self) -> str:
        return self.tag


Member = F2Subspace | PermGroup


@dataclass(frozen=True)
class SubgroupPair:
    """
    (Γ' ⊆ Γ''), Γ' ⊴ Γ''

    동등성은 (ambient, small, large) 로만 판정합니다.

    Attributes:
        ambient: 𝔸 대상 Γ
        small: Γ'
        large: Γ''
        quotient_tag: Γ''/Γ' 의 𝔸 대상 (x_Γ 원소에서만)
        quotient_map: Γ'' → 표준 몫 대상 (C_j^1 / C'_j^1 또는 군 준동형)
    """

    ambient: AObject
    small: Member
    large: Member
    quotient_tag: AObject | None = field(default=None, compare=False)
    quotient_map: LinearMap | Homomorphism | None = field(default=None, compare=False, repr=False)

    @property
    def small_order(self) -> int:
        return 2**self.small.dim if isinstance(self.small, F2Subspace) else self.small.order

    @property
    def large_order(self) -> int:
        return 2**self.large.dim if isinstance(self.large, F2Subspace) else self.large.order

    @property
    def quotient_order(self) -> int:
        return self.large_order // self.small_order

    @property
    def name(self) -> str:
        if self.ambient.is_vector:
            return f"({self.small} ⊆ {self.large})"
        small, large = pair_name(self)
        return f"({small}⊆{large})"

    def to_list(self) -> dict:
        out: dict = {"name": self.name, "orders": [self.small_order, self.large_order]}
        if self.ambient.is_vector:
            assert isinstance(self.small, F2Subspace) and isinstance(self.large, F2Subspace)
            out["small"] = self.small.to_list()
            out["large"] = self.large.to_list()
        if self.quotient_tag is not None:
            out["quotient"] = self.quotient_tag.tag
        return out


# =============================================================
# x_Γ 표
# =============================================================

# (Γ', Γ'', 몫): 카탈로그 이름
X_TABLES: dict[str, list[tuple[str, str, str]]] = {
    "S2": [("S1", "S1", "S1"), ("S2", "S2", "S1")],
    "S3": [("S1", "S2", "S2"), ("S3", "S3", "S1")],
    "S2'": [("S2", "S2", "S1")],
    "S3'": [("S2", "S2", "S1"), ("S3", "S3", "S1")],
    "S4": [("S2S2", "D8", "S2"), ("S2", "S2S2", "S2"), ("S3", "S3", "S1"), ("S4", "S4", "S1")],
    "S5": [
        ("S2~", "S3S2", "S3"),
        ("S3", "S3S2", "S2"),
        ("S2S2", "D8", "S2"),
        ("S4", "S4", "S1"),
        ("S5", "S5", "S1"),
    ],
}

# 목록 순서 그대로의 X_Γ 이름
GOLDEN_X: dict[str, list[str]] = {
    "S1": ["(S1⊆S1)"],
    "S2": ["(S2⊆S2)", "(S1⊆S2)", "(S1⊆S1)"],
    "S3": ["(S3⊆S3)", "(S1⊆S3)", "(S2⊆S2)", "(S1⊆S2)", "(S1⊆S1)"],
    "S2'": ["(S2⊆S2)", "(S1⊆S2)"],
    "S3'": ["(S3⊆S3)", "(S1⊆S3)", "(S2⊆S2)", "(S1⊆S2)"],
    "S4": [
        "(S4⊆S4)", "(S1⊆S4)", "(D8⊆D8)", "(S2S2⊆D8)",
        "(S2S2⊆S2S2)", "(S2⊆S2S2)", "(S1⊆S2S2)",
        "(S3⊆S3)", "(S1⊆S3)", "(S2⊆S2)", "(S1⊆S2)",
    ],
    "S5": [
        "(S5⊆S5)", "(S1⊆S5)", "(S3S2⊆S3S2)",
        "(S3⊆S3S2)", "(S2~⊆S3S2)", "(S1⊆S3S2)",
        "(S4⊆S4)", "(S1⊆S4)", "(D8⊆D8)",
        "(S2S2⊆D8)",
        "(S2S2⊆S2S2)", "(S2⊆S2S2)", "(S1⊆S2S2)",
        "(S3⊆S3)", "(S1⊆S3)", "(S2⊆S2)", "(S1⊆S2)",
    ],
}  # fmt: skip


def _symmetric_pairs(obj: AObject) -> list[SubgroupPair]:
    table = X_TABLES.get(obj.tag)
    if table is None:
        raise UnknownTag(f"{obj.tag} 의 x 표가 없습니다")
    pairs = []
    for small_tag, large_tag, quotient_tag in table:
        small, large = make_standard(small_tag), make_standard(large_tag)
        if not large.issubgroup(obj.group()):
            raise BadPair(f"{large_tag} ⊄ {obj.tag}")
        try:
            q = quotient(large, small)
        except NotNormal as exc:
            raise BadPair(f"({small_tag}⊆{large_tag}) 는 𝒵 의 원소가 아닙니다") from exc
        iso = identify_aobject(q, quotient_tag)
        pairs.append(
            SubgroupPair(obj, small, large, AObject.parse(quotient_tag), quotient_map(q, iso))
        )
    return pairs


def _vector_pairs(obj: AObject, upper: int) -> list[SubgroupPair]:
    d = obj.param
    pairs = []
    for j in range(1, upper + 1):
        if obj.kind is AKind.VD1:
            m = cmap1(d, j)
            small = F2Subspace.span([e(j)] if j % 2 else [], d)
            quot = AObject(AKind.VD1, d - 2)
        else:
            m = cmap_prime1(d, j)
            small = F2Subspace.span([project(e(j), d)] if j % 2 else [], d, vprime_space(d))
            quot = AObject(AKind.VPRIME_D1, d - 2)
        pairs.append(SubgroupPair(obj, small, m.domain, quot, m))
    return pairs


@lru_cache(maxsize=None)
def x_set(obj: AObject) -> tuple[SubgroupPair, ...]:
    """
    x_Γ

    Raises:
        TrivialGroup: |Γ| = 1
    """
    if obj.order == 1:
        raise TrivialGroup(f"x_Γ 는 |Γ| > 1 에서만 정의됩니다: {obj.tag}")
    match obj.kind:
        case AKind.VD1:
            return tuple(_vector_pairs(obj, obj.param))
        case AKind.VPRIME_D1:
            return tuple(_vector_pairs(obj, obj.param - 1))
        case _:
            return tuple(_symmetric_pairs(obj))


def bar_x_set(obj: AObject, reading: BarReading | None = None) -> tuple[SubgroupPair, ...]:
    """
    x̄_Γ: V'_D^1 (D ≥ 3) 에서만 j = D 가 추가됩니다.

    V'_3^1 은 S2 와 같은 대상이므로 reading="s2" 이면 x_Γ 를 그대로 씁니다.
    """
    reading = reading or settings.bar_reading
    if obj.kind is AKind.VPRIME_D1 and obj.param >= 3:
        if obj.param == 3 and reading == "s2":
            return x_set(obj)
        return tuple(_vector_pairs(obj, obj.param))
    return x_set(obj)


# =============================================================
# 당김과 켤레 중복 제거
# =============================================================


def pull_back(pair: SubgroupPair, inner: SubgroupPair, twist: Homomorphism | None = None) -> SubgroupPair:
    """몫 대상의 쌍 inner 를 Γ'' → Γ''/Γ' 로 당깁니다."""
    qmap = pair.quotient_map
    if isinstance(qmap, LinearMap):
        assert isinstance(inner.small, F2Subspace) and isinstance(inner.large, F2Subspace)
        return SubgroupPair(pair.ambient, qmap.preimage(inner.small), qmap.preimage(inner.large))
    if qmap is None:
        raise BadPair(f"{pair.name} 에 몫 사상이 없습니다")
    if twist is not None:
        qmap = qmap.compose(twist)
    assert isinstance(inner.small, PermGroup) and isinstance(inner.large, PermGroup)
    small = qmap.preimage(inner.small.elements)
    large = qmap.preimage(inner.large.elements)
    return SubgroupPair(pair.ambient, _labelled(small), _labelled(large))


def _labelled(elements: frozenset) -> PermGroup:
    group = PermGroup(elements)
    return PermGroup(elements, group.degree, catalog_name(group) or "")


def pairs_conjugate(ambient: PermGroup, p: SubgroupPair, q: SubgroupPair) -> bool:
    """(Γ'_1 ⊆ Γ''_1) 와 (Γ'_2 ⊆ Γ''_2) 가 동시에 켤레인지"""
    if not isinstance(p.large, PermGroup) or not isinstance(q.large, PermGroup):
        return p == q
    assert isinstance(p.small, PermGroup) and isinstance(q.small, PermGroup)
    if p.large.order != q.large.order or p.small.order != q.small.order:
        return False
    return any(
        conjugate_set(h, p.large.elements) == q.large.elements
        and conjugate_set(h, p.small.elements) == q.small.elements
        for h in ambient.elements
    )


def dedup(obj: AObject, pairs: Iterable[SubgroupPair]) -> list[SubgroupPair]:
    """Γ-켤레 아래 중복 제거 (벡터형은 아벨이므로 집합 동등)"""
    kept: list[SubgroupPair] = []
    seen: set[SubgroupPair] = set()
    ambient = None if obj.is_vector else obj.group()
    for p in pairs:
        if p in seen:
            continue
        if ambient is not None and any(pairs_conjugate(ambient, p, k) for k in kept):
            continue
        seen.add(p)
        kept.append(p)
    return kept


# =============================================================
# 이름과 표시 순서
# =============================================================


@lru_cache(maxsize=None)
def _named_candidates(ambient_tag: str) -> tuple[tuple[str, str], ...]:
    ambient = make_standard(ambient_tag)
    sizes = {t: make_standard(t).order for t in CATALOG_ORDER}
    out = []
    for large in CATALOG_ORDER:
        big = make_standard(large)
        if not big.issubgroup(ambient):
            continue
        smalls = sorted(
            (t for t in CATALOG_ORDER if t != large),
            key=lambda t: (-sizes[t], CATALOG_ORDER.index(t)),
        )
        for small in [large, *smalls]:
            if is_normal(make_standard(small), big):
                out.append((small, large))
    return tuple(out)


def _candidate_index(pair: SubgroupPair) -> int:
    assert isinstance(pair.small, PermGroup) and isinstance(pair.large, PermGroup)
    ambient = pair.ambient.group()
    candidates = _named_candidates(f"S{pair.ambient.param}")
    for i, (small, large) in enumerate(candidates):
        named = SubgroupPair(pair.ambient, make_standard(small), make_standard(large))
        if pairs_conjugate(ambient, pair, named):
            return i
    raise BadPair(f"카탈로그 이름으로 표현되지 않는 쌍: |Γ'|={pair.small.order}, |Γ''|={pair.large.order}")


def pair_name(pair: SubgroupPair) -> tuple[str, str]:
    return _named_candidates(f"S{pair.ambient.param}")[_candidate_index(pair)]


def display_order(obj: AObject, pairs: Sequence[SubgroupPair]) -> list[SubgroupPair]:
    if obj.is_vector:
        return sorted(pairs, key=lambda p: (p.large.sort_key(), p.small.sort_key()))  # type: ignore[union-attr]
    return sorted(pairs, key=_candidate_index)


# =============================================================
# X_Γ, X̄_Γ
# =============================================================


def base_pair(obj: AObject) -> SubgroupPair:
    """|Γ| = 1 일 때의 (Γ ⊆ Γ)"""
    return SubgroupPair(obj, obj.trivial(), obj.trivial())


def _adjoined(obj: AObject, zero: Sequence[SubgroupPair]) -> list[SubgroupPair]:
    trivial = obj.trivial()
    if not obj.anomalous:
        return [SubgroupPair(obj, trivial, obj.full())]
    q_star = q_sets_from(zero)[1]
    return [SubgroupPair(obj, trivial, g1) for g1 in q_star]


def q_sets_from(zero: Sequence[SubgroupPair]) -> tuple[list[Member], list[Member]]:
    q = [p.large for p in zero if p.small == p.large]
    q_star = [g for g in q if not isinstance(g, PermGroup) or is_aproduct(g)]
    return q, q_star


def _x_zero(
    obj: AObject,
    bar: bool,
    reading: BarReading,
    twist: Mapping[int, Homomorphism] | None = None,
) -> list[SubgroupPair]:
    pairs = bar_x_set(obj, reading) if bar else x_set(obj)
    found = []
    for idx, pair in enumerate(pairs):
        assert pair.quotient_tag is not None
        inner_set = _big_x(pair.quotient_tag, bar, reading)
        alpha = twist.get(idx) if twist else None
        found.extend(pull_back(pair, inner, alpha) for inner in inner_set)
    return dedup(obj, found)


@lru_cache(maxsize=None)
def _big_x(obj: AObject, bar: bool, reading: BarReading) -> tuple[SubgroupPair, ...]:
    if obj.order == 1:
        return (base_pair(obj),)
    if bar and obj.anomalous:
        extra = SubgroupPair(obj, obj.trivial(), obj.trivial())
        return (*_big_x(obj, False, reading), extra)
    zero = _x_zero(obj, bar, reading)
    result = display_order(obj, dedup(obj, [*zero, *_adjoined(obj, zero)]))
    logger.debug(f"🔁 {'X̄' if bar else 'X'}_{obj.tag}: {len(result)}개")
    return tuple(result)


def big_x(obj: AObject) -> tuple[SubgroupPair, ...]:
    """X_Γ (표시 순서)"""
    return _big_x(obj, False, settings.bar_reading)


def bar_big_x(obj: AObject, reading: BarReading | None = None) -> tuple[SubgroupPair, ...]:
    """X̄_Γ (비정상 대상에서는 X_Γ ⊔ {(S1⊆S1)})"""
    return _big_x(obj, True, reading or settings.bar_reading)


def x_zero(obj: AObject, *, bar: bool = False, reading: BarReading | None = None) -> list[SubgroupPair]:
    """(X_Γ)_0: x_Γ 를 통해 당긴 쌍들"""
    if obj.order == 1:
        return []
    return _x_zero(obj, bar, reading or settings.bar_reading)


def q_sets(obj: AObject) -> tuple[list[Member], list[Member]]:
    """(Q(Γ), Q_*(Γ))"""
    return q_sets_from(x_zero(obj))


def big_x_twisted(obj: AObject, twist: Mapping[int, Homomorphism]) -> tuple[SubgroupPair, ...]:
    """
    x_Γ 의 idx 번째 몫 동형사상 뒤에 자기동형 twist[idx] 를 합성해 다시 계산합니다.
    """
    zero = _x_zero(obj, False, settings.bar_reading, twist)
    return tuple(display_order(obj, dedup(obj, [*zero, *_adjoined(obj, zero)])))


def clear_caches() -> None:
    for fn in (x_set, _big_x, _named_candidates):
        fn.cache_clear()


__all__ = [
    "AKind",
    "AObject",
    "GOLDEN_X",
    "SubgroupPair",
    "V_SPACE",
    "X_TABLES",
    "bar_big_x",
    "bar_x_set",
    "big_x",
    "big_x_twisted",
    "clear_caches",
    "dedup",
    "display_order",
    "pair_name",
    "pull_back",
    "q_sets",
    "x_set",
    "x_zero",
]
