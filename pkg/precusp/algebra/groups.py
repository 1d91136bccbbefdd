"""
유한군 엔진

𝔸 의 대칭형 대상(S_n, Δ8, S2S2, S̃2, S3S2)과 그 부분몫을 다룹니다.
원소는 sympy Permutation 으로 표현하고 원소 집합을 통째로 캐시합니다
(최대 위수 120 이므로 전수 계산이 정확하고 충분히 빠릅니다).

지표표는 Dixon 방식으로 계산합니다:
    1. 유한체 GF(p) (p ≡ 1 mod 60) 위에서 류 곱셈 행렬의 공통 고유공간 분해
    2. χ(1) 정규화 (직교관계에서 제곱근)
    3. 고유값 중복도로 Q(ζ_60) 값으로 들어올림

사용법:
    from precusp.algebra.groups import make_standard, char_table

    s4 = make_standard("S4")
    table = char_table(s4)
    table.degrees  # (1, 1, 2, 3, 3)
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from math import lcm

from loguru import logger
from sympy import GF, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.polys.matrices import DomainMatrix

from precusp.algebra.cyclotomic import (
    CONDUCTOR,
    ONE,
    ZERO,
    Cyclotomic,
    from_rational,
    root_of_unity,
    sort_key,
    to_fraction,
)
from precusp.core.config import settings
from precusp.core.errors import NotIsomorphic, NotNormal, PrecuspError, SizeCap, UnknownTag

DEGREE = 5


# =============================================================
# 원소 헬퍼
# =============================================================


def identity(degree: int = DEGREE) -> Permutation:
    return Permutation(list(range(degree)))


def perm(*cycles: Sequence[int], degree: int = DEGREE) -> Permutation:
    """
    1-based 순환 표기로 치환을 만듭니다.

    Example:
        >>> perm((1, 2), (3, 4))   # 1↔2, 3↔4
    """
    if not cycles:
        return identity(degree)
    return Permutation([[i - 1 for i in c] for c in cycles], size=degree)


def element_key(g: Permutation) -> tuple[int, ...]:
    """원소의 전순서 키 (항등원이 최소)"""
    return tuple(g.array_form)


def conjugate(h: Permutation, y: Permutation) -> Permutation:
    return h * y * ~h


def conjugate_set(h: Permutation, elements: Iterable[Permutation]) -> frozenset[Permutation]:
    return frozenset(conjugate(h, y) for y in elements)


def format_element(g: Permutation) -> str:
    """1-based 순환 표기 문자열 ("1" 은 항등원)"""
    cycles = [c for c in g.cyclic_form]
    if not cycles:
        return "1"
    return "".join("(" + "".join(str(i + 1) for i in c) + ")" for c in cycles)


# =============================================================
# 군
# =============================================================


@dataclass(frozen=True)
class PermGroup:
    """
    원소 집합이 캐시된 치환군

    Attributes:
        elements: 전체 원소 (합성과 역원에 닫혀 있음)
        degree: 치환의 크기
        label: 카탈로그 이름 (비교에 쓰이지 않음)
    """

    elements: frozenset[Permutation]
    degree: int = DEGREE
    label: str = field(default="", compare=False)

    @classmethod
    def generated(cls, generators: Iterable[Permutation], degree: int = DEGREE, label: str = "") -> PermGroup:
        gens = list(generators)
        if not gens:
            return cls(frozenset({identity(degree)}), degree, label)
        return cls(frozenset(PermutationGroup(gens).generate()), degree, label)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return identity(self.degree)

    @cached_property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.elements, key=element_key))

    @cached_property
    def exponent(self) -> int:
        return lcm(*(int(g.order()) for g in self.elements))

    @cached_property
    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.elements for b in self.elements)

    @cached_property
    def conjugacy_classes(self) -> tuple[frozenset[Permutation], ...]:
        """대표원(최소 원소) 순으로 정렬된 켤레류; 항등류가 맨 앞"""
        remaining = set(self.elements)
        classes = []
        for g in self.sorted_elements:
            if g not in remaining:
                continue
            cls_ = conjugate_set_in(self, g)
            remaining -= cls_
            classes.append(cls_)
        return tuple(classes)

    @cached_property
    def representatives(self) -> tuple[Permutation, ...]:
        return tuple(min(c, key=element_key) for c in self.conjugacy_classes)

    @cached_property
    def class_index(self) -> dict[Permutation, int]:
        return {g: i for i, c in enumerate(self.conjugacy_classes) for g in c}

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def issubgroup(self, other: PermGroup) -> bool:
        return self.elements <= other.elements

    def __str__(self) -> str:
        return self.label or f"<order {self.order}>"


@dataclass(frozen=True)
class Subgroup(PermGroup):
    """부모 군을 기억하는 부분군"""

    parent: PermGroup | None = field(default=None, compare=False)


def conjugate_set_in(group: PermGroup, g: Permutation) -> frozenset[Permutation]:
    return frozenset(conjugate(h, g) for h in group.elements)


def subgroup(parent: PermGroup, elements: Iterable[Permutation], label: str = "") -> Subgroup:
    """
    원소 집합으로 부분군을 만듭니다.

    Raises:
        PrecuspError: 닫혀 있지 않거나 부모에 속하지 않는 경우
    """
    elems = frozenset(elements)
    if not elems <= parent.elements:
        raise PrecuspError(f"{label or '부분집합'} ⊄ {parent}")
    if parent.identity not in elems or any(a * b not in elems for a in elems for b in elems):
        raise PrecuspError(f"{label or '부분집합'} 은 부분군이 아닙니다")
    return Subgroup(elems, parent.degree, label, parent)


def centralizer(group: PermGroup, x: Permutation) -> Subgroup:
    """Z_G(x)"""
    return Subgroup(frozenset(h for h in group.elements if h * x == x * h), group.degree, "", group)


def conjugacy_classes(group: PermGroup) -> tuple[frozenset[Permutation], ...]:
    return group.conjugacy_classes


def is_normal(small: PermGroup, large: PermGroup) -> bool:
    """small ⊴ large"""
    if not small.issubgroup(large):
        return False
    return all(conjugate(h, y) in small.elements for h in large.elements for y in small.elements)


def normal_subgroups(group: PermGroup) -> tuple[PermGroup, ...]:
    """켤레류의 합집합 중 부분군인 것을 모두 찾습니다 (위수 순)."""
    classes = group.conjugacy_classes
    found: dict[frozenset[Permutation], PermGroup] = {}
    for mask in range(1 << (len(classes) - 1)):
        elems = set(classes[0])
        for i in range(1, len(classes)):
            if mask >> (i - 1) & 1:
                elems |= classes[i]
        if group.order % len(elems):
            continue
        frozen = frozenset(elems)
        if all(a * b in frozen for a in frozen for b in frozen):
            found[frozen] = PermGroup(frozen, group.degree)
    return tuple(sorted(found.values(), key=lambda h: (h.order, [element_key(g) for g in h.sorted_elements])))


# =============================================================
# 몫군
# =============================================================


@dataclass(frozen=True)
class QuotientGroup:
    """
    numerator / kernel

    잉여류는 최소 대표원 순으로 정렬되어 있고 section[i] 는 i 번째 잉여류의 대표원입니다.
    as_permgroup() 은 잉여류 위의 오른쪽 곱 작용으로 얻는 치환군 실현입니다.
    """

    numerator: PermGroup
    kernel: PermGroup
    cosets: tuple[frozenset[Permutation], ...]
    section: tuple[Permutation, ...]

    @cached_property
    def _coset_of(self) -> dict[Permutation, int]:
        return {g: i for i, c in enumerate(self.cosets) for g in c}

    @property
    def order(self) -> int:
        return len(self.cosets)

    def coset_index(self, g: Permutation) -> int:
        return self._coset_of[g]

    def project(self, g: Permutation) -> Permutation:
        """numerator → 잉여류 치환"""
        return Permutation([self._coset_of[s * g] for s in self.section])

    @cached_property
    def realization(self) -> PermGroup:
        return PermGroup(frozenset(self.project(g) for g in self.section), len(self.cosets))

    def as_permgroup(self) -> PermGroup:
        return self.realization


def quotient(large: PermGroup, small: PermGroup) -> QuotientGroup:
    """
    Raises:
        NotNormal: small 이 large 의 정규부분군이 아닌 경우
    """
    if not is_normal(small, large):
        raise NotNormal(f"{small} 은 {large} 에서 정규가 아닙니다")
    cosets: dict[frozenset[Permutation], Permutation] = {}
    for g in large.sorted_elements:
        coset = frozenset(k * g for k in small.elements)
        if coset not in cosets:
            cosets[coset] = g
    ordered = sorted(cosets.items(), key=lambda kv: element_key(kv[1]))
    result = QuotientGroup(large, small, tuple(c for c, _ in ordered), tuple(r for _, r in ordered))
    assert result.order * small.order == large.order
    return result


# =============================================================
# 준동형사상과 동형 판정
# =============================================================


@dataclass(frozen=True)
class Homomorphism:
    """
    원소 대응표로 주어진 군 준동형사상

    Attributes:
        source: 정의역
        target: 공역
        mapping: source 의 모든 원소 → target 원소
    """

    source: PermGroup
    target: PermGroup
    mapping: Mapping[Permutation, Permutation] = field(compare=False, hash=False)

    def __call__(self, g: Permutation) -> Permutation:
        return self.mapping[g]

    def image(self, elements: Iterable[Permutation]) -> frozenset[Permutation]:
        return frozenset(self.mapping[g] for g in elements)

    def preimage(self, elements: Iterable[Permutation]) -> frozenset[Permutation]:
        wanted = frozenset(elements)
        return frozenset(g for g, im in self.mapping.items() if im in wanted)

    def kernel(self) -> frozenset[Permutation]:
        return self.preimage([self.target.identity])

    def is_homomorphism(self) -> bool:
        return all(
            self.mapping[a * b] == self.mapping[a] * self.mapping[b]
            for a in self.source.elements
            for b in self.source.elements
        )

    def is_bijective(self) -> bool:
        return len(set(self.mapping.values())) == self.source.order == self.target.order

    def compose(self, after: Homomorphism) -> Homomorphism:
        """after ∘ self"""
        return Homomorphism(self.source, after.target, {g: after(im) for g, im in self.mapping.items()})


def generating_set(group: PermGroup) -> tuple[Permutation, ...]:
    """위수가 큰 원소부터 탐욕적으로 고른 생성원 집합"""
    gens: list[Permutation] = []
    span = frozenset({group.identity})
    for g in sorted(group.elements, key=lambda h: (-int(h.order()), element_key(h))):
        if g in span:
            continue
        gens.append(g)
        span = PermGroup.generated(gens, group.degree).elements
        if len(span) == group.order:
            break
    return tuple(gens)


def _extend(
    source: PermGroup,
    gens: Sequence[Permutation],
    images: Sequence[Permutation],
    target: PermGroup,
) -> dict[Permutation, Permutation] | None:
    # 케일리 그래프 BFS; 모든 변이 일관되면 준동형
    mapping = {source.identity: target.identity}
    frontier = [source.identity]
    while frontier:
        nxt = []
        for a in frontier:
            fa = mapping[a]
            for s, t in zip(gens, images, strict=True):
                b, fb = a * s, fa * t
                seen = mapping.get(b)
                if seen is None:
                    mapping[b] = fb
                    nxt.append(b)
                elif seen != fb:
                    return None
        frontier = nxt
    return mapping


def isomorphisms(source: PermGroup, target: PermGroup) -> Iterator[Homomorphism]:
    """생성원 상 탐색: 같은 위수의 원소 조합마다 케일리 그래프로 확장해 봅니다."""
    if source.order != target.order:
        return
    if source.order == 1:
        yield Homomorphism(source, target, {source.identity: target.identity})
        return
    gens = generating_set(source)
    by_order: dict[int, list[Permutation]] = {}
    for t in target.sorted_elements:
        by_order.setdefault(int(t.order()), []).append(t)
    for images in product(*(by_order.get(int(g.order()), []) for g in gens)):
        mapping = _extend(source, gens, images, target)
        if mapping is None:
            continue
        hom = Homomorphism(source, target, mapping)
        if hom.is_bijective():
            yield hom


def find_isomorphism(source: PermGroup, target: PermGroup) -> Homomorphism | None:
    return next(isomorphisms(source, target), None)


def automorphisms(group: PermGroup) -> tuple[Homomorphism, ...]:
    return tuple(isomorphisms(group, group))


def identify_aobject(group: PermGroup | QuotientGroup, hint: str) -> Homomorphism:
    """
    group (또는 몫군의 잉여류 실현) → 카탈로그 표준 대상의 명시적 동형사상

    Raises:
        NotIsomorphic: 생성원 대응이 하나도 없는 경우 (x 표 오류 신호)
    """
    source = group.as_permgroup() if isinstance(group, QuotientGroup) else group
    target = make_standard(hint)
    iso = find_isomorphism(source, target)
    if iso is None:
        raise NotIsomorphic(f"위수 {source.order} 군이 {hint} 와 동형이 아닙니다")
    return iso


def quotient_map(q: QuotientGroup, iso: Homomorphism) -> Homomorphism:
    """numerator → 표준 대상 전사사상 (iso ∘ project)"""
    return Homomorphism(q.numerator, iso.target, {g: iso(q.project(g)) for g in q.numerator.elements})


# =============================================================
# 𝔸 카탈로그
# =============================================================

CATALOG_ORDER: tuple[str, ...] = ("S5", "S3S2", "S4", "D8", "S2S2", "S3", "S2", "S2~", "S1")


@lru_cache(maxsize=None)
def make_standard(tag: str) -> PermGroup:
    """
    S5 안의 표준 부분군 (S1 ⊂ S2 ⊂ ... ⊂ S5 사슬)

    Raises:
        UnknownTag: 카탈로그에 없는 이름
    """
    match tag:
        case "S1":
            group = PermGroup.generated([])
        case "S2":
            group = PermGroup.generated([perm((1, 2))])
        case "S3":
            group = PermGroup.generated([perm((1, 2)), perm((1, 2, 3))])
        case "S4":
            group = PermGroup.generated([perm((1, 2)), perm((1, 2, 3, 4))])
        case "S5":
            group = PermGroup.generated([perm((1, 2)), perm((1, 2, 3, 4, 5))])
        case "D8":
            group = centralizer(make_standard("S4"), perm((1, 2), (3, 4)))
        case "S2S2":
            group = PermGroup.generated([perm((1, 2)), perm((3, 4))])
        case "S2~":
            group = PermGroup.generated([perm((4, 5))])
        case "S3S2":
            group = centralizer(make_standard("S5"), perm((4, 5)))
        case _:
            raise UnknownTag(f"알 수 없는 군 이름: {tag}")
    return PermGroup(group.elements, DEGREE, tag)


def catalog_name(group: PermGroup) -> str | None:
    """원소 집합이 카탈로그 군과 정확히 같으면 그 이름"""
    for tag in CATALOG_ORDER:
        if make_standard(tag).elements == group.elements:
            return tag
    return None


def are_conjugate(ambient: PermGroup, a: frozenset[Permutation], b: frozenset[Permutation]) -> bool:
    if len(a) != len(b):
        return False
    return any(conjugate_set(h, a) == b for h in ambient.elements)


# =============================================================
# 𝔸 곱 판정
# =============================================================

_SYMMETRIC_BY_ORDER = {6: "S3", 24: "S4", 120: "S5"}


def _is_elementary_abelian_2(group: PermGroup) -> bool:
    return all(g * g == group.identity for g in group.elements)


@lru_cache(maxsize=None)
def is_aproduct(group: PermGroup) -> bool:
    """
    group 이 𝔸 대상들의 직접곱과 동형인지 판정합니다.

    𝔸 의 추상형: 자명군, 기본 아벨 2-군 (V_D^1, V'_D^1), S3, S4, S5.
    직접 인자 분해는 정규부분군 쌍 (N, K), N ∩ K = 1, |N||K| = |G| 를 탐색합니다.
    """
    if group.order == 1 or _is_elementary_abelian_2(group):
        return True
    tag = _SYMMETRIC_BY_ORDER.get(group.order)
    if tag is not None and find_isomorphism(group, make_standard(tag)) is not None:
        return True
    normals = [n for n in normal_subgroups(group) if 1 < n.order < group.order]
    for n in normals:
        for k in normals:
            if n.order * k.order != group.order or n.elements & k.elements != {group.identity}:
                continue
            if is_aproduct(n) and is_aproduct(k):
                logger.debug(f"🧩 직접곱 분해: |N|={n.order}, |K|={k.order}")
                return True
    return False


# =============================================================
# 지표표 (Dixon)
# =============================================================


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """
    정확한 지표표

    Attributes:
        group: 대상 군
        classes: 켤레류 (group.conjugacy_classes 와 같은 순서)
        characters: 행 = 기약지표, 열 = 켤레류, 값은 Q(ζ_60) 원소
    """

    group: PermGroup
    classes: tuple[frozenset[Permutation], ...]
    characters: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(_degree(row) for row in self.characters)

    def value(self, index: int, g: Permutation) -> Cyclotomic:
        return self.characters[index][self.group.class_index[g]]

    def inverse_classes(self) -> list[int]:
        return [self.group.class_index[~r] for r in self.group.representatives]

    def inner(self, i: int, j: int) -> Cyclotomic:
        """Σ_g χ_i(g) χ_j(g⁻¹)"""
        inv = self.inverse_classes()
        total = ZERO
        for k, cls_ in enumerate(self.classes):
            total = total + _scalar(len(cls_)) * self.characters[i][k] * self.characters[j][inv[k]]
        return total

    def column_inner(self, k: int, m: int) -> Cyclotomic:
        """Σ_χ χ(g_k) χ(g_m⁻¹)"""
        inv = self.inverse_classes()
        total = ZERO
        for row in self.characters:
            total = total + row[k] * row[inv[m]]
        return total


def _scalar(n: int) -> Cyclotomic:
    return from_rational(n)


def _degree(row: Sequence[Cyclotomic]) -> int:
    value = to_fraction(row[0])
    assert value is not None
    return int(value)


def _dixon_prime(order: int) -> int:
    """p ≡ 1 (mod 60), p > 2|G|"""
    p = max(2 * order, 1000)
    while True:
        p = nextprime(p)
        if p % CONDUCTOR == 1:
            return int(p)


def _class_matrix(group: PermGroup, r: int) -> list[list[int]]:
    # m[s][t] = #{g ∈ C_r : g·z_t ∈ C_s}
    n = len(group.conjugacy_classes)
    reps = group.representatives
    m = [[0] * n for _ in range(n)]
    for g in group.conjugacy_classes[r]:
        for t in range(n):
            m[group.class_index[g * reps[t]]][t] += 1
    return m


def _eigenspaces(a: DomainMatrix) -> list[DomainMatrix]:
    a = a.transpose()
    fp = a.domain
    charpoly = Poly(a.charpoly(), Symbol("x"), domain=fp)
    spaces = []
    for z in charpoly.ground_roots():
        shifted = a - a.diag([fp(z)] * a.shape[0], fp)
        basis, _ = shifted.nullspace().rref()
        spaces.append(basis)
    return spaces


def _refine(spaces: list[DomainMatrix], matrix: list[list[int]], fp) -> list[DomainMatrix]:
    refined = []
    dm = DomainMatrix.from_list(matrix, fp)
    for space in spaces:
        if space.shape[0] <= 1:
            refined.append(space)
            continue
        _, pivots = space.rref()
        restricted = dm.extract(range(space.shape[1]), pivots)
        for sub in _eigenspaces(space * restricted):
            refined.append(sub * space)
    return refined


def _common_eigenvectors(group: PermGroup, p: int) -> list[list[int]]:
    fp = GF(p)
    n = len(group.conjugacy_classes)
    spaces = _eigenspaces(DomainMatrix.from_list(_class_matrix(group, 0 if n == 1 else 1), fp))
    for r in range(2, n):
        if len(spaces) == n:
            break
        spaces = _refine(spaces, _class_matrix(group, r), fp)
    if len(spaces) != n:
        raise PrecuspError(f"공통 고유공간 분해 실패: {len(spaces)}개 ≠ 류 {n}개")
    stacked = DomainMatrix.vstack(*spaces)
    return [[int(v) % p for v in row] for row in stacked.to_list()]


def _normalize(group: PermGroup, rows: list[list[int]], p: int) -> list[list[int]]:
    sizes = [len(c) for c in group.conjugacy_classes]
    inv = [group.class_index[~r] for r in group.representatives]
    out = []
    for row in rows:
        scale = pow(row[0], -1, p)
        row = [v * scale % p for v in row]
        dot = sum(sizes[k] * row[k] * row[inv[k]] for k in range(len(row))) % p
        degree_sq = group.order * pow(dot, -1, p) % p
        root = sqrt_mod(degree_sq, p)
        if root is None:
            raise PrecuspError(f"GF({p}) 에서 χ(1)² = {degree_sq} 의 제곱근이 없습니다")
        degree = min(int(root), p - int(root))
        out.append([v * degree % p for v in row])
    return out


def _lift(group: PermGroup, rows: list[list[int]], p: int) -> list[list[Cyclotomic]]:
    # χ(g) = Σ_k m_k ζ_o^k,  m_k = (1/o) Σ_l χ(g^l) ω^{-kl}
    x60 = pow(int(primitive_root(p)), (p - 1) // CONDUCTOR, p)
    lifted: list[list[Cyclotomic]] = [[] for _ in rows]
    for g in group.representatives:
        o = int(g.order())
        omega = pow(x60, CONDUCTOR // o, p)
        powers_cls = []
        h = group.identity
        for _ in range(o):
            powers_cls.append(group.class_index[h])
            h = h * g
        inv_o = pow(o, -1, p)
        for i, row in enumerate(rows):
            value = ZERO
            for k in range(o):
                m = sum(row[powers_cls[l]] * pow(omega, (-k * l) % o, p) for l in range(o)) * inv_o % p
                if m > row[0]:
                    raise PrecuspError(f"고유값 중복도 {m} > χ(1) = {row[0]} (p={p})")
                if m:
                    value = value + _scalar(m) * root_of_unity(o, k)
            lifted[i].append(value)
    return lifted


@lru_cache(maxsize=None)
def _char_table(group: PermGroup) -> CharacterTable:
    classes = group.conjugacy_classes
    if len(classes) == 1:
        return CharacterTable(group, classes, ((ONE,),))
    p = _dixon_prime(group.order)
    logger.debug(f"🎲 지표표 계산: |G|={group.order}, 류 {len(classes)}개, p={p}")
    rows = _normalize(group, _common_eigenvectors(group, p), p)
    lifted = _lift(group, rows, p)
    lifted.sort(key=lambda row: [sort_key(v) for v in row])
    lifted.sort(key=_degree)
    for i, row in enumerate(lifted):
        if all(v == ONE for v in row):
            lifted.insert(0, lifted.pop(i))
            break
    return CharacterTable(group, classes, tuple(tuple(row) for row in lifted))


def char_table(group: PermGroup) -> CharacterTable:
    """
    Raises:
        SizeCap: |G| 가 상한을 넘거나 지수가 60 의 약수가 아닌 경우
    """
    if group.order > settings.char_table_order_cap:
        raise SizeCap(f"|G| = {group.order} > {settings.char_table_order_cap}")
    if CONDUCTOR % group.exponent:
        raise SizeCap(f"지수 {group.exponent} 가 {CONDUCTOR} 의 약수가 아닙니다")
    return _char_table(group)
