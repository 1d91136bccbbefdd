"""
카르탄 다이어그램, 근계, 부분집합 유형 분류, 포물형 궤도 오라클

노드 번호는 Bourbaki 규약을 따릅니다.
    B_n: α_n 이 짧은 근,  C_n: α_n 이 긴 근
    E_n: 1-3-4-5-...-n 사슬 + 2-4
    F_4: α_1, α_2 긴 근, 2 ⇒ 3
    G_2: α_1 짧은 근
"""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import networkx as nx
from loguru import logger

from precusp.core.config import settings
from precusp.core.errors import RankCap, UnknownHost

Root = tuple[int, ...]

# 분류된 근의 개수
ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

_TYPE_RE = re.compile(r"^(~?)([A-G])(\d+)$")


def parse_type(text: str) -> tuple[str, int]:
    """'B12' → ('B', 12)"""
    match = _TYPE_RE.match(text.strip())
    if match is None or match.group(1):
        raise UnknownHost(f"알 수 없는 유형: {text}")
    letter, rank = match.group(2), int(match.group(3))
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[letter]
    if not valid:
        raise UnknownHost(f"{text} 는 분류된 다이어그램이 아닙니다")
    return letter, rank


def _bonds(letter: str, n: int) -> tuple[dict[int, int], list[tuple[int, int, int]]]:
    """(노드별 근 길이², (i, j, 결합수) 목록)"""
    lengths = {i: 2 for i in range(1, n + 1)}
    chain = [(i, i + 1, 1) for i in range(1, n)]
    match letter:
        case "A":
            edges = chain
        case "B":
            edges = chain[:-1] + [(n - 1, n, 2)]
            lengths[n] = 1
        case "C":
            edges = chain[:-1] + [(n - 1, n, 2)]
            lengths = {i: 1 for i in range(1, n)} | {n: 2}
        case "D":
            edges = chain[:-1] + [(n - 2, n, 1)]
        case "E":
            edges = [(1, 3, 1), (2, 4, 1)] + [(i, i + 1, 1) for i in range(3, n)]
        case "F":
            edges = [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
            lengths = {1: 2, 2: 2, 3: 1, 4: 1}
        case "G":
            edges = [(1, 2, 3)]
            lengths = {1: 1, 2: 3}
        case _:
            raise UnknownHost(letter)
    return lengths, edges


@dataclass(frozen=True)
class CartanDiagram:
    """
    기약 카르탄 다이어그램

    Attributes:
        letter: A..G
        rank: |I|
    """

    letter: str
    rank: int

    @classmethod
    def parse(cls, text: str) -> CartanDiagram:
        return cls(*parse_type(text))

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @cached_property
    def lengths(self) -> dict[int, int]:
        return _bonds(self.letter, self.rank)[0]

    @cached_property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(_bonds(self.letter, self.rank)[1])

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes)
        for i, j, m in self.edges:
            graph.add_edge(i, j, bond=m)
        return graph

    @cached_property
    def gram(self) -> list[list[Fraction]]:
        """(α_i, α_j): 결합수 m 이면 -m·min(|α_i|², |α_j|²)/2"""
        n = self.rank
        out = [[Fraction(0)] * n for _ in range(n)]
        for i in self.nodes:
            out[i - 1][i - 1] = Fraction(self.lengths[i])
        for i, j, m in self.edges:
            value = Fraction(-m * min(self.lengths[i], self.lengths[j]), 2)
            out[i - 1][j - 1] = out[j - 1][i - 1] = value
        return out

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """A_ij = 2(α_i, α_j)/(α_i, α_i)"""
        g = self.gram
        return tuple(
            tuple(int(2 * g[i][j] / g[i][i]) for j in range(self.rank)) for i in range(self.rank)
        )

    def is_short(self, node: int) -> bool:
        return self.lengths[node] < max(self.lengths.values())

    def reflect(self, i: int, root: Root) -> Root:
        """s_i(β) = β - ⟨α_i^∨, β⟩ α_i  (단순근 좌표)"""
        pairing = sum(self.cartan_matrix[i - 1][k] * c for k, c in enumerate(root))
        out = list(root)
        out[i - 1] -= pairing
        return tuple(out)

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i - 1) for k in range(self.rank))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """단순근들의 W-궤도 (BFS)"""
        seen = {self.simple_root(i) for i in self.nodes}
        queue = deque(seen)
        while queue:
            beta = queue.popleft()
            for i in self.nodes:
                image = self.reflect(i, beta)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return tuple(sorted(seen))

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.roots)}

    @cached_property
    def reflection_perms(self) -> tuple[tuple[int, ...], ...]:
        """s_i 를 근 번호 위의 치환으로"""
        index = self.root_index
        return tuple(tuple(index[self.reflect(i, r)] for r in self.roots) for i in self.nodes)

    def __str__(self) -> str:
        return self.name


# =============================================================
# 부분집합 유형
# =============================================================


def _component_type(diagram: CartanDiagram, nodes: frozenset[int]) -> str:
    sub = diagram.graph.subgraph(nodes)
    n = len(nodes)
    bonds = {d["bond"] for _, _, d in sub.edges(data=True)}
    short_marked = diagram.letter in ("F", "G")

    # B/C 호스트에서 α_n 을 포함한 성분은 호스트 문자를 따릅니다 (B1, B2 포함)
    if diagram.letter in ("B", "C") and diagram.rank in nodes:
        return f"{diagram.letter}{n}"
    if 3 in bonds:
        return "G2"
    if 2 in bonds:
        if n == 2:
            return "B2"
        if n == 4 and all(sub.degree(v) <= 2 for v in nodes):
            ends = [v for v in nodes if sub.degree(v) == 1]
            double = next((i, j) for i, j, d in sub.edges(data=True) if d["bond"] == 2)
            if not set(double) & set(ends):
                return "F4"
        end = next(
            v for i, j, d in sub.edges(data=True) if d["bond"] == 2 for v in (i, j) if sub.degree(v) == 1
        )
        return f"B{n}" if diagram.is_short(end) else f"C{n}"
    branch = [v for v in nodes if sub.degree(v) == 3]
    if not branch:
        prefix = "~" if short_marked and all(diagram.is_short(v) for v in nodes) else ""
        return f"{prefix}A{n}"
    center = branch[0]
    arms = sorted(
        len(nx.node_connected_component(sub.subgraph(nodes - {center}), nbr)) for nbr in sub.neighbors(center)
    )
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    return f"E{n}"


def _type_key(t: str) -> tuple[int, str]:
    match = _TYPE_RE.match(t)
    assert match is not None
    return (-int(match.group(3)), match.group(2) + match.group(1))


def subset_type(diagram: CartanDiagram, subset: Iterable[int]) -> tuple[str, ...]:
    """
    I' 의 연결성분마다 기약 유형 (랭크 내림차순)

    예: D4 의 세 잎 → ('A1', 'A1', 'A1')
    """
    nodes = frozenset(subset)
    if not nodes <= set(diagram.nodes):
        raise UnknownHost(f"{sorted(nodes)} ⊄ {diagram}")
    components = nx.connected_components(diagram.graph.subgraph(nodes))
    return tuple(sorted((_component_type(diagram, frozenset(c)) for c in components), key=_type_key))


def format_type(types: Sequence[str]) -> str:
    return "".join(types) if types else "∅"


def type_rank(t: str) -> int:
    match = _TYPE_RE.match(t)
    if match is None:
        raise UnknownHost(f"알 수 없는 성분 유형: {t}")
    return int(match.group(3))


def canonical_types(types: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(types, key=_type_key))


def realize(diagram: CartanDiagram, types: Iterable[str]) -> tuple[frozenset[int], ...]:
    """유형이 types 인 I' ⊆ I 전부 (같은 크기의 부분집합만 훑음)"""
    wanted = canonical_types(types)
    size = sum(type_rank(t) for t in wanted)
    return tuple(
        frozenset(subset)
        for subset in combinations(diagram.nodes, size)
        if subset_type(diagram, subset) == wanted
    )


# =============================================================
# 궤도 오라클
# =============================================================


def _subsystem(diagram: CartanDiagram, subset: frozenset[int]) -> frozenset[int]:
    """Φ_{I'} 의 근 번호 (W_{I'} 에 의한 단순근 궤도)"""
    index = diagram.root_index
    perms = diagram.reflection_perms
    seen = {index[diagram.simple_root(i)] for i in subset}
    queue = deque(seen)
    while queue:
        k = queue.popleft()
        for i in subset:
            image = perms[i - 1][k]
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def _orbit(diagram: CartanDiagram, start: frozenset[int]) -> set[frozenset[int]]:
    perms = diagram.reflection_perms
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for perm in perms:
            image = frozenset(perm[k] for k in current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def weyl_orbit_count(diagram: CartanDiagram, subsets: Iterable[Iterable[int]], *, force: bool = False) -> int:
    """
    단순근 집합의 W-이동으로 정한 동치에서 subsets 의 궤도 수

    w Δ_{I'} = Δ_{I''} 인 w 가 있는 것은 w Φ_{I'} = Φ_{I''} 인 w 가 있는 것과 같으므로
    (W_{I''} 안에서 기저를 다시 맞출 수 있음) 근 부분계의 궤도를 비교합니다.

    Raises:
        RankCap: 랭크가 상한을 넘고 force 가 아닌 경우
    """
    if diagram.rank > settings.orbit_rank_cap and not force:
        raise RankCap(f"{diagram} 랭크 {diagram.rank} > {settings.orbit_rank_cap}")
    systems = [_subsystem(diagram, frozenset(s)) for s in subsets]
    orbits: list[set[frozenset[int]]] = []
    for system in systems:
        if any(system in orbit for orbit in orbits):
            continue
        orbit = _orbit(diagram, system)
        logger.debug(f"🔁 {diagram} 궤도 크기 {len(orbit)}")
        orbits.append(orbit)
    return len(orbits)
