"""
M(Γ), ρ_(Γ'⊆Γ''), M(Γ)_0, 전단사 j 와 부분순서

M(Γ) 의 원소 (x, σ) 는 Γ-불변인 교환쌍 함수와 동일시합니다:
    f_(x,σ)(y, g) = σ(k g k⁻¹)   (k y k⁻¹ = x 인 k 가 있을 때), 아니면 0
ss 는 몫의 함수를 Γ'' 를 거쳐 당긴 뒤 Γ 전체의 켤레로 모으는 유도이고,
계수는 중심화군 평균으로 되돌립니다:
    c(x, σ) = (1/|Z(x)|) Σ_{g ∈ Z(x)} f(x, g) σ(g⁻¹)

벡터형 대상은 M(Γ) = Γ × Γ^ = V^1 ⊕ V^0 (형식 (,) 로 쌍대 동일시) 로 바로 계산합니다.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import networkx as nx
from loguru import logger
from sympy import QQ, ZZ
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix

from precusp.algebra.cyclotomic import ZERO, Cyclotomic, from_rational, require_rational
from precusp.algebra.f2spaces import (
    F2Subspace,
    F2Vector,
    annihilator,
    eta_bits,
    form_bits,
    v_d,
    v_d0,
    vprime_d,
    vprime_d0,
)
from precusp.algebra.gammasets import AKind, AObject, SubgroupPair, bar_big_x, big_x, pull_back, x_set
from precusp.algebra.groups import (
    Homomorphism,
    PermGroup,
    centralizer,
    char_table,
    conjugate,
    element_key,
    format_element,
    identify_aobject,
    quotient,
    quotient_map,
)
from precusp.algebra.inductive import LinearMap
from precusp.core.config import BarReading, settings
from precusp.core.errors import (
    BadPair,
    NoBijection,
    NonIntegralCoefficient,
    NotAntisymmetric,
    NotNormal,
    NotUnique,
)


# =============================================================
# M(Γ) 의 원소와 벡터
# =============================================================


@dataclass(frozen=True)
class MPair:
    """
    (x, σ)

    대칭형: x 는 켤레류의 최소 대표원, σ 는 char_table(Z_Γ(x)) 의 행 번호.
    벡터형: x ∈ V^1, σ ∈ V^0 (x + σ 가 M(Γ) = V_D 의 원소).
    """

    ambient: AObject
    x: Permutation | F2Vector
    sigma: int | F2Vector

    @property
    def vector(self) -> F2Vector:
        if not isinstance(self.x, F2Vector) or not isinstance(self.sigma, F2Vector):
            raise TypeError("벡터형 M(Γ) 원소가 아닙니다")
        return self.x + self.sigma

    def sort_key(self) -> tuple:
        if isinstance(self.x, F2Vector):
            return (self.vector.bits,)
        assert isinstance(self.sigma, int)
        return (element_key(self.x), self.sigma)

    @property
    def label(self) -> str:
        if isinstance(self.x, F2Vector):
            return str(self.vector)
        return f"({format_element(self.x)}, χ{self.sigma})"

    def to_list(self) -> list | str:
        if isinstance(self.x, F2Vector):
            return self.vector.to_list()
        return self.label

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class MVector:
    """C[M(Γ)] 의 원소 (0 계수는 저장하지 않음)"""

    ambient: AObject
    coefficients: Mapping[MPair, Fraction] = field(default_factory=dict)

    @classmethod
    def build(cls, ambient: AObject, items: Iterable[tuple[MPair, Fraction]]) -> MVector:
        total: dict[MPair, Fraction] = {}
        for pair, c in items:
            total[pair] = total.get(pair, Fraction(0)) + c
        return cls(ambient, {p: c for p, c in total.items() if c})

    def __getitem__(self, pair: MPair) -> Fraction:
        return self.coefficients.get(pair, Fraction(0))

    def __add__(self, other: MVector) -> MVector:
        return MVector.build(self.ambient, [*self.coefficients.items(), *other.coefficients.items()])

    def scale(self, c: Fraction) -> MVector:
        return MVector.build(self.ambient, [(p, c * v) for p, v in self.coefficients.items()])

    @property
    def support(self) -> tuple[MPair, ...]:
        return tuple(sorted(self.coefficients, key=MPair.sort_key))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MVector):
            return NotImplemented
        return self.ambient == other.ambient and dict(self.coefficients) == dict(other.coefficients)

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.coefficients.items())))

    def to_list(self) -> list[dict]:
        return [{"pair": p.to_list(), "coefficient": str(self[p])} for p in self.support]


# =============================================================
# M(Γ)
# =============================================================


def _full_space(obj: AObject) -> F2Subspace:
    return v_d(obj.param) if obj.kind is AKind.VD1 else vprime_d(obj.param)


def _zero_part(obj: AObject) -> F2Subspace:
    return v_d0(obj.param) if obj.kind is AKind.VD1 else vprime_d0(obj.param)


def _split(obj: AObject, v: F2Vector) -> MPair:
    odd = eta_bits(max(obj.param, 1))
    return MPair(obj, F2Vector(v.ambient, v.bits & odd), F2Vector(v.ambient, v.bits & ~odd))


def _centralizer(gamma: PermGroup, x: Permutation) -> PermGroup:
    z = centralizer(gamma, x)
    return PermGroup(z.elements, z.degree)


@lru_cache(maxsize=None)
def m_set(obj: AObject) -> tuple[MPair, ...]:
    """Γ-켤레류마다 하나씩의 (x, σ)"""
    if obj.is_vector:
        return tuple(sorted((_split(obj, v) for v in _full_space(obj).elements()), key=MPair.sort_key))
    gamma = obj.group()
    out = []
    for x in gamma.representatives:
        table = char_table(_centralizer(gamma, x))
        out.extend(MPair(obj, x, i) for i in range(len(table.characters)))
    return tuple(out)


def unit_pair(obj: AObject) -> MPair:
    """(1, 1)"""
    if obj.is_vector:
        zero = F2Vector.zero(_full_space(obj).ambient)
        return MPair(obj, zero, zero)
    return MPair(obj, obj.group().identity, 0)


# =============================================================
# ss 유도
# =============================================================


def _induction_weight(order: int) -> Fraction:
    """당긴 함수에 곱하는 정규화 (1/|Γ''|)"""
    return Fraction(1, order)


def _coefficients(obj: AObject, fn: Callable[[Permutation, Permutation], Cyclotomic]) -> MVector:
    """
    Γ-불변 교환쌍 함수 → C[M(Γ)]

    f(x, ·) 는 Z(x) 의 류함수이므로 Z(x) 의 켤레류 대표원에서만 계산합니다.
    """
    gamma = obj.group()
    items = []
    for x in gamma.representatives:
        z = _centralizer(gamma, x)
        table = char_table(z)
        inv = table.inverse_classes()
        values = [from_rational(len(c)) * fn(x, g) for c, g in zip(z.conjugacy_classes, z.representatives)]
        for i, row in enumerate(table.characters):
            total = ZERO
            for t, value in enumerate(values):
                total = total + value * row[inv[t]]
            pair = MPair(obj, x, i)
            c = require_rational(total, f"c{pair.label}") / z.order
            items.append((pair, c))
    return MVector.build(obj, items)


def _unit_function(obj: AObject, small: PermGroup, large: PermGroup) -> Callable[[Permutation, Permutation], Cyclotomic]:
    gamma = obj.group()
    weight = _induction_weight(large.order)
    cache: dict[Permutation, list[Permutation]] = {}

    def fn(x: Permutation, g: Permutation) -> Cyclotomic:
        hs = cache.get(x)
        if hs is None:
            hs = cache[x] = [h for h in gamma.elements if conjugate(h, x) in small.elements]
        count = sum(1 for h in hs if conjugate(h, g) in large.elements)
        return from_rational(weight * count)

    return fn


def _source_function(qgroup: PermGroup, source: MPair) -> Callable[[Permutation, Permutation], Cyclotomic]:
    """몫 대상 위의 f_(x̄,σ̄)"""
    assert isinstance(source.x, Permutation) and isinstance(source.sigma, int)
    xbar, sigma = source.x, source.sigma
    table = char_table(_centralizer(qgroup, xbar))
    transporter: dict[Permutation, Permutation] = {}
    for k in qgroup.sorted_elements:
        transporter.setdefault(conjugate(~k, xbar), k)

    def fbar(y: Permutation, g: Permutation) -> Cyclotomic:
        k = transporter.get(y)
        if k is None:
            return ZERO
        return table.value(sigma, conjugate(k, g))

    return fbar


def _symmetric_map(pair: SubgroupPair) -> Homomorphism:
    if isinstance(pair.quotient_map, Homomorphism):
        return pair.quotient_map
    if pair.quotient_tag is None:
        raise BadPair(f"{pair.name}: 몫 대상이 주어지지 않았습니다")
    assert isinstance(pair.small, PermGroup) and isinstance(pair.large, PermGroup)
    try:
        q = quotient(pair.large, pair.small)
    except NotNormal as exc:
        raise BadPair(f"{pair.name} 는 𝒵_Γ 의 원소가 아닙니다") from exc
    return quotient_map(q, identify_aobject(q, f"S{pair.quotient_tag.param}"))


def _ss_symmetric(obj: AObject, pair: SubgroupPair, source: MPair) -> MVector:
    assert isinstance(pair.small, PermGroup) and isinstance(pair.large, PermGroup)
    if source == unit_pair(source.ambient):
        return _coefficients(obj, _unit_function(obj, pair.small, pair.large))
    phi = _symmetric_map(pair)
    fbar = _source_function(phi.target, source)
    gamma = obj.group()
    large = pair.large.elements
    weight = from_rational(_induction_weight(pair.large.order))

    def fn(x: Permutation, g: Permutation) -> Cyclotomic:
        total = ZERO
        for h in gamma.elements:
            y, k = conjugate(h, x), conjugate(h, g)
            if y in large and k in large:
                total = total + fbar(phi(y), phi(k))
        return weight * total

    return _coefficients(obj, fn)


def _ss_vector(obj: AObject, pair: SubgroupPair, source: MPair) -> MVector:
    """
    아벨 경우의 ss: 지지집합은 φ⁻¹(x̄) × {σ : σ|Γ'' = σ̄∘φ}, 계수 1
    """
    qmap = pair.quotient_map
    if not isinstance(qmap, LinearMap):
        raise BadPair(f"{pair.name}: 몫 사상이 없습니다")
    assert isinstance(source.x, F2Vector) and isinstance(source.sigma, F2Vector)
    large = pair.large
    assert isinstance(large, F2Subspace)
    xs = [x for x in large.elements() if qmap.apply(x) == source.x]
    targets = [form_bits(source.sigma.bits, qmap.apply(F2Vector(large.ambient, b)).bits) for b in large.rows]
    sigmas = [
        s for s in _zero_part(obj).elements()
        if all(form_bits(s.bits, b) == t for b, t in zip(large.rows, targets))
    ]  # fmt: skip
    return MVector.build(obj, ((MPair(obj, x, s), Fraction(1)) for x in xs for s in sigmas))


def ss_induce(obj: AObject, pair: SubgroupPair, source: MPair) -> MVector:
    """
    ss_{Γ',Γ''}: C[M(Γ''/Γ')] → C[M(Γ)] 의 기저 원소 하나에 대한 값

    Raises:
        BadPair: 쌍이 𝒵_Γ 에 없거나 source 가 몫 대상의 원소가 아닌 경우
    """
    if pair.ambient != obj:
        raise BadPair(f"{pair.name} 의 대상은 {pair.ambient} 입니다 ({obj} 가 아님)")
    if pair.quotient_tag is not None and source.ambient != pair.quotient_tag:
        raise BadPair(f"source 는 M({pair.quotient_tag}) 의 원소여야 합니다: {source.ambient}")
    if obj.is_vector:
        return _ss_vector(obj, pair, source)
    return _ss_symmetric(obj, pair, source)


def induce_vector(obj: AObject, pair: SubgroupPair, vector: MVector) -> MVector:
    """ss 를 선형으로 확장"""
    total = MVector(obj)
    for source, c in vector.coefficients.items():
        total = total + ss_induce(obj, pair, source).scale(c)
    return total


# =============================================================
# ρ, M(Γ)_0
# =============================================================


def _rho_vector(obj: AObject, pair: SubgroupPair) -> MVector:
    assert isinstance(pair.small, F2Subspace) and isinstance(pair.large, F2Subspace)
    support = pair.small + annihilator(pair.large, _zero_part(obj))
    return MVector.build(obj, ((_split(obj, v), Fraction(1)) for v in support.elements()))


def rho(obj: AObject, pair: SubgroupPair) -> MVector:
    """
    ρ_(Γ'⊆Γ'') = ss_{Γ',Γ''}(1, 1)

    Raises:
        NonIntegralCoefficient: 음수이거나 정수가 아닌 계수
    """
    if obj.is_vector:
        return _rho_vector(obj, pair)
    assert isinstance(pair.small, PermGroup) and isinstance(pair.large, PermGroup)
    result = _coefficients(obj, _unit_function(obj, pair.small, pair.large))
    for p, c in result.coefficients.items():
        if c.denominator != 1 or c < 0:
            raise NonIntegralCoefficient(f"ρ{pair.name} 의 {p.label} 계수 {c}")
    return result


def _pairs(obj: AObject, bar: bool, reading: BarReading | None) -> tuple[SubgroupPair, ...]:
    return bar_big_x(obj, reading) if bar else big_x(obj)


@lru_cache(maxsize=None)
def _rho_table(obj: AObject, bar: bool, reading: BarReading) -> tuple[tuple[SubgroupPair, MVector], ...]:
    pairs = _pairs(obj, bar, reading)
    logger.debug(f"🧮 ρ 계산: {obj.tag} ({len(pairs)}쌍, bar={bar})")
    return tuple((p, rho(obj, p)) for p in pairs)


def rho_table(
    obj: AObject, *, bar: bool = False, reading: BarReading | None = None
) -> tuple[tuple[SubgroupPair, MVector], ...]:
    """X_Γ (또는 X̄_Γ) 의 모든 ρ (표시 순서)"""
    return _rho_table(obj, bar, reading or settings.bar_reading)


def m_zero(obj: AObject, *, bar: bool = False, reading: BarReading | None = None) -> tuple[MPair, ...]:
    """ρ 지지집합의 합집합"""
    found: set[MPair] = set()
    for _, vec in rho_table(obj, bar=bar, reading=reading):
        found.update(vec.coefficients)
    return tuple(sorted(found, key=MPair.sort_key))


def rank(obj: AObject, *, bar: bool = False, reading: BarReading | None = None) -> int:
    """ρ 족의 유리수 위 계수"""
    basis = m_zero(obj, bar=bar, reading=reading)
    rows = [[int(vec[p]) for p in basis] for _, vec in rho_table(obj, bar=bar, reading=reading)]
    if not rows or not basis:
        return 0
    return DomainMatrix.from_list(rows, ZZ).convert_to(QQ).rank()


# =============================================================
# 전단사 j 와 부분순서
# =============================================================


def bijection_j(
    obj: AObject, *, bar: bool = False, reading: BarReading | None = None
) -> dict[MPair, SubgroupPair]:
    """
    (x, σ) ↦ ρ_j(x,σ) 에서 계수 1 로 나타나는 유일한 쌍

    계수 1 인 접속으로 이분 그래프를 만들고 완전 매칭을 찾습니다.
    완전 매칭이 유일한 것은 (매칭 간선 M → X, 나머지 X → M) 방향 그래프에
    교대 순환이 없는 것과 같습니다.

    Raises:
        NoBijection: 완전 매칭이 없는 경우
        NotUnique: 완전 매칭이 둘 이상인 경우
    """
    table = rho_table(obj, bar=bar, reading=reading)
    basis = m_zero(obj, bar=bar, reading=reading)
    if len(basis) != len(table):
        raise NoBijection(f"{obj.tag}: |M_0| = {len(basis)}, |X| = {len(table)}")
    graph = nx.Graph()
    m_nodes = [("m", i) for i in range(len(basis))]
    graph.add_nodes_from(m_nodes, bipartite=0)
    graph.add_nodes_from((("x", k) for k in range(len(table))), bipartite=1)
    for k, (_, vec) in enumerate(table):
        for i, p in enumerate(basis):
            if vec[p] == 1:
                graph.add_edge(("m", i), ("x", k))
    matching = nx.bipartite.maximum_matching(graph, top_nodes=m_nodes)
    if any(node not in matching for node in m_nodes):
        raise NoBijection(f"{obj.tag}: 계수 1 접속의 완전 매칭이 없습니다")

    oriented = nx.DiGraph()
    oriented.add_nodes_from(graph.nodes)
    for a, b in graph.edges:
        m, x = (a, b) if a[0] == "m" else (b, a)
        if matching[m] == x:
            oriented.add_edge(m, x)
        else:
            oriented.add_edge(x, m)
    if not nx.is_directed_acyclic_graph(oriented):
        raise NotUnique(f"{obj.tag}: 계수 1 전단사가 유일하지 않습니다")
    return {basis[i]: table[matching[("m", i)][1]][0] for i in range(len(basis))}


@dataclass(frozen=True, eq=False)
class PartialOrder:
    """M(Γ)_0 위의 관계; closure 는 반사 간선을 뺀 추이적 폐포"""

    elements: tuple[MPair, ...]
    closure: nx.DiGraph
    hasse: nx.DiGraph

    def leq(self, a: MPair, b: MPair) -> bool:
        return a == b or self.closure.has_edge(a, b)

    @property
    def minimal(self) -> tuple[MPair, ...]:
        return tuple(p for p in self.elements if self.closure.in_degree(p) == 0)

    def covers(self) -> list[tuple[MPair, MPair]]:
        return sorted(self.hasse.edges, key=lambda e: (e[0].sort_key(), e[1].sort_key()))


def partial_order(obj: AObject, *, bar: bool = False, reading: BarReading | None = None) -> PartialOrder:
    """
    (x,σ) ≼ (x',σ')  ⇔  (x,σ) ∈ supp ρ_j(x',σ') 의 추이적 폐포

    Raises:
        NotAntisymmetric: 서로 다른 두 원소가 서로의 아래에 있는 경우
    """
    j = bijection_j(obj, bar=bar, reading=reading)
    rhos = dict(rho_table(obj, bar=bar, reading=reading))
    graph = nx.DiGraph()
    graph.add_nodes_from(j)
    for upper, pair in j.items():
        for lower in rhos[pair].coefficients:
            if lower != upper:
                graph.add_edge(lower, upper)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise NotAntisymmetric(f"{obj.tag}: {cycle[0][0].label} ≼ {cycle[0][1].label} ≼ ... 순환")
    closure = nx.transitive_closure_dag(graph)
    hasse = nx.transitive_reduction(graph)
    return PartialOrder(tuple(sorted(j, key=MPair.sort_key)), closure, hasse)


# =============================================================
# 2단 탑 일관성
# =============================================================


def tower_mismatches(obj: AObject) -> list[str]:
    """
    x_Γ 의 쌍 p 와 몫의 q ∈ X 에 대해 ρ(당긴 쌍) = ss_p(ρ_Q(q)) 인지 확인합니다.
    어긋나는 (p, q) 이름 목록을 돌려줍니다.
    """
    bad = []
    for pair in x_set(obj):
        assert pair.quotient_tag is not None
        for inner in big_x(pair.quotient_tag):
            direct = rho(obj, pull_back(pair, inner))
            stepped = induce_vector(obj, pair, rho(pair.quotient_tag, inner))
            if direct != stepped:
                bad.append(f"{pair.name} / {inner.name}")
    return bad


def clear_caches() -> None:
    for fn in (m_set, _rho_table):
        fn.cache_clear()
