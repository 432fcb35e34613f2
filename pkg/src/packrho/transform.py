"""Graph powers, the layered graph G(k), diametrical graphs and the DMP.

A level assignment gives each base vertex a level in ``1..k``.  It is the
same thing as an independent set of G(k) of size n (one node per clique
Q_v), and the same thing as a packing coloring when every level class is
a packing of the matching radius.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import DisconnectedInput, SizeLimitExceeded
from .graph import Graph, metrics

DMP_VALUE_LIMIT = 10


@dataclass(frozen=True)
class PowerGraph:
    base: Graph
    level: int
    result: Graph


def power_graph(g: Graph, level: int) -> PowerGraph:
    if level < 1:
        raise ValueError("power level must be >= 1")
    d = g.distances
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if d[u][v] <= level]
    return PowerGraph(g, level, Graph.from_edges(g.n, edges))


@dataclass(frozen=True)
class GkGraph:
    """G(k), answered implicitly from base distances.

    Node ids: ``node_of(v, i) = (i - 1) * n + v`` for levels ``i = 1..k``.
    """

    base: Graph
    k: int

    @property
    def order(self) -> int:
        return self.base.n * self.k

    def node_of(self, v: int, level: int) -> int:
        return (level - 1) * self.base.n + v

    def vertex_level(self, node: int) -> tuple[int, int]:
        level, v = divmod(node, self.base.n)
        return v, level + 1

    def adjacent(self, a: int, b: int) -> bool:
        (u, i), (v, j) = self.vertex_level(a), self.vertex_level(b)
        if u == v:
            return i != j
        return i == j and self.base.distances[u][v] <= i

    def is_independent(self, nodes: Sequence[int]) -> bool:
        nodes = list(nodes)
        return not any(
            self.adjacent(a, b) for x, a in enumerate(nodes) for b in nodes[x + 1:]
        )

    def materialize(self) -> Graph:
        nk = self.order
        edges = [(a, b) for a in range(nk) for b in range(a + 1, nk) if self.adjacent(a, b)]
        return Graph.from_edges(nk, edges)


def build_gk(g: Graph, k: int) -> GkGraph:
    if not 1 <= k <= max(g.n, 1):
        raise ValueError(f"k must lie in 1..n, got {k}")
    return GkGraph(g, k)


@dataclass(frozen=True)
class LevelAssignment:
    levels: tuple[int, ...]
    k: int

    def __post_init__(self):
        for v, lv in enumerate(self.levels):
            if not 1 <= lv <= self.k:
                raise ValueError(f"level {lv} of vertex {v} outside 1..{self.k}")

    @property
    def top_level(self) -> int:
        return max(self.levels, default=0)

    def class_of(self, level: int) -> list[int]:
        return [v for v, lv in enumerate(self.levels) if lv == level]

    def to_nodes(self, gk: GkGraph) -> list[int]:
        return sorted(gk.node_of(v, lv) for v, lv in enumerate(self.levels))

    @classmethod
    def from_nodes(cls, gk: GkGraph, nodes: Sequence[int]) -> LevelAssignment:
        levels = [0] * gk.base.n
        for node in nodes:
            v, lv = gk.vertex_level(node)
            if levels[v]:
                raise ValueError(f"two nodes of clique Q_{v}")
            levels[v] = lv
        if 0 in levels:
            raise ValueError("node set misses some clique Q_v")
        return cls(tuple(levels), gk.k)

    def is_valid(self, g: Graph) -> bool:
        """Every level-i class is an i-packing of ``g``."""
        d = g.distances
        lv = self.levels
        return all(
            d[u][v] > lv[u] for u in range(g.n) for v in range(u + 1, g.n) if lv[u] == lv[v]
        )


@dataclass(frozen=True)
class DiametricalGraph:
    base: Graph
    diam: int
    result: Graph


def diametrical_graph(g: Graph) -> DiametricalGraph:
    met = metrics(g)
    if not met.connected:
        raise DisconnectedInput("diametrical graph needs a connected graph")
    return DiametricalGraph(g, met.diam, Graph.from_edges(g.n, met.diametrical_pairs))


class Defect(NamedTuple):
    level: int
    vertex: int


def _power_tables(g: Graph, k: int) -> list[list[int]]:
    d = g.distances
    return [[]] + [d.ball_masks(i) for i in range(1, k + 1)]


def _first_defect(levels: Sequence[int], k: int, power: list[list[int]]):
    """Smallest failing level and its extendable vertices, or None."""
    n = len(levels)
    class_mask = [0] * (k + 1)
    for v, lv in enumerate(levels):
        class_mask[lv] |= 1 << v
    for i in range(1, k):
        row = power[i]
        cm = class_mask[i]
        cands = [z for z in range(n) if levels[z] > i and not row[z] & cm]
        if cands:
            return i, cands
    return None


def is_layered_maximal(g: Graph, a: LevelAssignment) -> Defect | None:
    """None iff every level-i class (i < k) is a maximal independent set of
    G^i minus the lower classes; else the smallest failing level and the
    smallest vertex that could join it."""
    hit = _first_defect(a.levels, a.k, _power_tables(g, a.k))
    if hit is None:
        return None
    i, cands = hit
    return Defect(i, cands[0])


Policy = Callable[[Sequence[tuple[int, int]]], tuple[int, int]]


def lowest_level_first(candidates: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Default DMP tie-break: smallest current level, then smallest vertex."""
    return min(candidates, key=lambda c: (c[1], c[0]))


def dmp_run(
    g: Graph, a: LevelAssignment, policy: Policy = lowest_level_first
) -> tuple[LevelAssignment, int]:
    """Dense maximization procedure.

    Repeatedly find the smallest level i whose class is not maximal and move
    one extendable vertex (chosen by ``policy`` from ``(vertex, level)``
    pairs) down to level i.  Returns the fixed point and its top level.
    """
    power = _power_tables(g, a.k)
    levels = list(a.levels)
    while True:
        hit = _first_defect(levels, a.k, power)
        if hit is None:
            break
        i, cands = hit
        z, _ = policy([(z, levels[z]) for z in cands])
        levels[z] = i
    out = LevelAssignment(tuple(levels), a.k)
    return out, out.top_level


def dmp_value(g: Graph, a: LevelAssignment, limit: int = DMP_VALUE_LIMIT, memo: dict | None = None) -> int:
    """Largest top level reachable over every tie-break of the exchange loop.

    ``memo`` may be shared across calls on the same graph and k.
    """
    if g.n > limit:
        raise SizeLimitExceeded(g.n, limit, "dmp_value")
    power = _power_tables(g, a.k)
    if memo is None:
        memo = {}
    return _dmp_explore(tuple(a.levels), a.k, power, memo)


def _dmp_explore(levels: tuple[int, ...], k: int, power, memo: dict) -> int:
    got = memo.get(levels)
    if got is not None:
        return got
    hit = _first_defect(levels, k, power)
    if hit is None:
        best = max(levels, default=0)
    else:
        i, cands = hit
        best = 0
        for z in cands:
            nxt = levels[:z] + (i,) + levels[z + 1:]
            best = max(best, _dmp_explore(nxt, k, power, memo))
    memo[levels] = best
    return best


def dmp_best_run(g: Graph, a: LevelAssignment, limit: int = DMP_VALUE_LIMIT, memo: dict | None = None) -> LevelAssignment:
    """A DMP fixed point of ``a`` whose top level equals :func:`dmp_value`."""
    if memo is None:
        memo = {}
    target = dmp_value(g, a, limit, memo)
    power = _power_tables(g, a.k)
    levels = tuple(a.levels)
    while True:
        hit = _first_defect(levels, a.k, power)
        if hit is None:
            return LevelAssignment(levels, a.k)
        i, cands = hit
        for z in cands:
            nxt = levels[:z] + (i,) + levels[z + 1:]
            if _dmp_explore(nxt, a.k, power, memo) == target:
                levels = nxt
                break
