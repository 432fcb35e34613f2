"""Greedy packing coloring and coloring checkers.

Colors are 1-based everywhere in this module's public surface.  Internally
the availability table stores one bit per color, bit ``c - 1`` for color
``c``; :func:`_bit` is the only place that offset is applied.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import NotAPackingColoring, UncoloredVertex
from .graph import DistanceMatrix, Graph, bfs_distances, component_vertex_sets


def _bit(color: int) -> int:
    return 1 << (color - 1)


@dataclass(frozen=True)
class PackingColoring:
    colors: tuple[int, ...]

    def __post_init__(self):
        for v, c in enumerate(self.colors):
            if not isinstance(c, int) or c < 1:
                raise UncoloredVertex(v)

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]


@dataclass(frozen=True)
class LayeredPartition:
    """Color classes V_1..V_k; ``layers[i - 1]`` holds the vertices of color i."""

    layers: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.layers)

    @property
    def n(self) -> int:
        return sum(len(layer) for layer in self.layers)


class Violation(NamedTuple):
    u: int
    v: int
    color: int


class Witness(NamedTuple):
    vertex: int
    missing_color: int


def _check_order(n: int, order: Sequence[int]) -> None:
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertex ids")


def greedy_color(g: Graph, order: Sequence[int]) -> PackingColoring:
    """Run the greedy packing coloring on ``g`` visiting vertices in ``order``.

    Each vertex takes the smallest color still available to it; after a
    vertex gets color i, color i is withdrawn from every uncolored vertex
    within distance i (BFS cut off at depth i).

    When i is at least ``d(v, r) + ecc(r)`` for the component's root ``r``
    the ball covers the whole component, so the color is withdrawn
    component-wide without running the BFS.
    """
    n = g.n
    _check_order(n, order)
    adj = g.adjacency

    comp_of = [0] * n
    root_dist = [0] * n
    comp_ecc = []
    for cid, verts in enumerate(component_vertex_sets(g)):
        dist = bfs_distances(g, verts[0])
        for v in verts:
            comp_of[v] = cid
            root_dist[v] = dist[v]
        comp_ecc.append(max(dist[v] for v in verts))
    comp_blocked = [0] * len(comp_ecc)

    blocked = [0] * n
    colors = [0] * n
    seen = [0] * n
    stamp = 0
    for v in order:
        cid = comp_of[v]
        b = blocked[v] | comp_blocked[cid]
        color = (~b & (b + 1)).bit_length()
        colors[v] = color
        bit = _bit(color)
        if color >= root_dist[v] + comp_ecc[cid]:
            comp_blocked[cid] |= bit
            continue
        stamp += 1
        seen[v] = stamp
        frontier = [v]
        for _ in range(color):
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if seen[w] != stamp:
                        seen[w] = stamp
                        nxt.append(w)
                        if not colors[w]:
                            blocked[w] |= bit
            if not nxt:
                break
            frontier = nxt
    return PackingColoring(tuple(colors))


class GreedyStep(NamedTuple):
    vertex: int
    color: int
    # availability[u][c - 1] == 1 iff color c is still available to u;
    # None for colored vertices (their rows are frozen and dropped)
    availability: tuple[tuple[int, ...] | None, ...]


def greedy_steps(g: Graph, order: Sequence[int]) -> Iterator[GreedyStep]:
    """Step-by-step greedy run with the full n-slot availability table.

    Slower reference for :func:`greedy_color`; yields the table after
    each vertex is colored.
    """
    n = g.n
    _check_order(n, order)
    d = g.distances
    avail = [[1] * n for _ in range(n)]
    colored = [False] * n
    for v in order:
        color = avail[v].index(1) + 1
        colored[v] = True
        for u in range(n):
            if not colored[u] and d[v][u] <= color:
                avail[u][color - 1] = 0
        yield GreedyStep(
            v, color, tuple(None if colored[u] else tuple(avail[u]) for u in range(n))
        )


def _colors_of(c) -> Sequence[int]:
    colors = c.colors if isinstance(c, PackingColoring) else c
    for v, col in enumerate(colors):
        if col is None or col < 1:
            raise UncoloredVertex(v)
    return colors


def verify_packing_coloring(
    g: Graph, c: PackingColoring | Sequence[int], d: DistanceMatrix | None = None
) -> Violation | None:
    """Return None if ``c`` is a packing coloring, else the first bad pair.

    Pairs are scanned in lexicographic (u, v) order with u < v.
    """
    colors = _colors_of(c)
    if len(colors) != g.n:
        raise UncoloredVertex(min(len(colors), g.n))
    if d is None:
        d = g.distances
    for u in range(g.n):
        cu = colors[u]
        row = d[u]
        for v in range(u + 1, g.n):
            if colors[v] == cu and row[v] <= cu:
                return Violation(u, v, cu)
    return None


def verify_greedy_packing_coloring(
    g: Graph, c: PackingColoring | Sequence[int], d: DistanceMatrix | None = None
) -> Witness | None:
    """Return None if ``c`` could be produced by the greedy algorithm.

    That holds iff ``c`` is a packing coloring and every vertex of color i
    sees, for each j < i, some vertex of color j within distance j.
    Otherwise returns the first (vertex, missing color) counterexample.
    Raises NotAPackingColoring if ``c`` is not a packing coloring at all.
    """
    if d is None:
        d = g.distances
    violation = verify_packing_coloring(g, c, d)
    if violation is not None:
        raise NotAPackingColoring(violation)
    colors = _colors_of(c)
    for v in range(g.n):
        row = d[v]
        seen = set()
        for u in range(g.n):
            cu = colors[u]
            if u != v and cu < colors[v] and row[u] <= cu:
                seen.add(cu)
        for j in range(1, colors[v]):
            if j not in seen:
                return Witness(v, j)
    return None


def to_layers(c: PackingColoring | Sequence[int]) -> LayeredPartition:
    colors = _colors_of(c)
    k = max(colors, default=0)
    layers: list[set[int]] = [set() for _ in range(k)]
    for v, col in enumerate(colors):
        layers[col - 1].add(v)
    return LayeredPartition(tuple(frozenset(layer) for layer in layers))


def from_layers(lp: LayeredPartition) -> PackingColoring:
    colors = [0] * lp.n
    for i, layer in enumerate(lp.layers, start=1):
        for v in layer:
            if colors[v]:
                raise ValueError(f"vertex {v} appears in two layers")
            colors[v] = i
    return PackingColoring(tuple(colors))
