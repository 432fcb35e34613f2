"""Simple undirected graphs, hop distances and independence primitives.

Vertices are ``0..n-1``.  Vertex sets are plain ``int`` bitmasks (bit ``v``
set iff ``v`` is a member); helpers here convert to and from sorted lists.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import SizeLimitExceeded

UNREACHABLE = math.inf
"""Distance between vertices in different components.

Compares greater than every finite distance, so ``dist > t`` holds for
unreachable pairs and such pairs never conflict in a packing.
"""

DEFAULT_EXHAUSTIVE_LIMIT = 32


def exhaustive_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get("PACKRHO_EXHAUSTIVE_LIMIT", DEFAULT_EXHAUSTIVE_LIMIT))


def check_limit(n: int, limit: int | None, what: str = "exhaustive search") -> None:
    lim = exhaustive_limit(limit)
    if n > lim:
        raise SizeLimitExceeded(n, lim, what)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_list(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adjacency`` holds sorted neighbor tuples; ``adjacency_bits`` is derived
    from it and describes the same edge set.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    adjacency_bits: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {v} must be sorted and distinct")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "adjacency_bits", tuple(to_mask(nb) for nb in self.adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency_bits[u] >> v & 1)

    @cached_property
    def distances(self) -> DistanceMatrix:
        # Lazily computed once; the value itself is immutable.
        return all_pairs_distances(self)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabeled in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            ((index[u], index[v]) for u in keep for v in self.adjacency[u] if v in index and u < v),
        )

    def complement(self) -> Graph:
        return Graph.from_edges(
            self.n,
            ((u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)),
        )


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def join(g: Graph, h: Graph) -> Graph:
    """``g`` on ``0..|g|-1`` and ``h`` shifted after it, plus every g-h edge."""
    edges = list(g.edges)
    edges.extend((u + g.n, v + g.n) for u, v in h.edges)
    edges.extend((u, g.n + w) for u in range(g.n) for w in range(h.n))
    return Graph.from_edges(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# distances

@dataclass(frozen=True)
class DistanceMatrix:
    dist: tuple[tuple[float, ...], ...]

    def __getitem__(self, u: int) -> tuple[float, ...]:
        return self.dist[u]

    def __len__(self) -> int:
        return len(self.dist)

    def ball_masks(self, radius: int) -> list[int]:
        """Per vertex, the bitmask of *other* vertices within ``radius``.

        This is the adjacency of the graph power G^radius.
        """
        out = []
        for u, row in enumerate(self.dist):
            mask = 0
            for v, d in enumerate(row):
                if d <= radius and v != u:
                    mask |= 1 << v
            out.append(mask)
        return out


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


@dataclass(frozen=True)
class Metrics:
    ecc: tuple[float, ...]
    rad: float
    diam: float
    central: tuple[int, ...]
    diametrical_vertices: tuple[int, ...]
    diametrical_pairs: tuple[tuple[int, int], ...]
    connected: bool


def metrics(g: Graph, d: DistanceMatrix | None = None) -> Metrics:
    """Eccentricities, radius, diameter and the central/diametrical vertices.

    For a disconnected graph every eccentricity (and rad/diam) is
    UNREACHABLE, ``connected`` is False and the vertex lists are empty.
    """
    if d is None:
        d = g.distances
    ecc = tuple(max(row, default=0) for row in d.dist)
    if any(e == UNREACHABLE for e in ecc):
        return Metrics(ecc, UNREACHABLE, UNREACHABLE, (), (), (), False)
    rad = min(ecc, default=0)
    diam = max(ecc, default=0)
    central = tuple(v for v, e in enumerate(ecc) if e == rad)
    pairs = tuple(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if d[u][v] == diam
    )
    diametrical = tuple(sorted({v for p in pairs for v in p}))
    return Metrics(ecc, rad, diam, central, diametrical, pairs, True)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    adj = g.adjacency_bits
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def component_vertex_sets(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, ordered by smallest member."""
    seen = 0
    out = []
    adj = g.adjacency_bits
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(mask_to_list(comp))
    return out


def components(g: Graph) -> list[Graph]:
    return [g.induced(vs) for vs in component_vertex_sets(g)]


def has_universal_vertex(g: Graph) -> bool:
    return any(len(nb) == g.n - 1 for nb in g.adjacency)


# ---------------------------------------------------------------------------
# independent sets

def iter_maximal_independent_masks(adj_bits: Sequence[int], candidates: int) -> Iterator[int]:
    """Maximal independent sets of the subgraph induced on ``candidates``.

    Bron-Kerbosch with pivoting, run on the complement implicitly: a vertex
    ``v`` added to the current set removes its closed neighborhood from both
    the candidate and the excluded sets.  Each set is yielded exactly once.
    """
    if not candidates:
        yield 0
        return
    yield from _bk(0, candidates, 0, adj_bits)


def _bk(r: int, p: int, x: int, adj: Sequence[int]) -> Iterator[int]:
    if not p:
        if not x:
            yield r
        return
    # The pivot's closed neighborhood must meet any extension, so branching
    # on P ∩ N[u] suffices; pick the u leaving the fewest branches.
    best = -1
    best_count = 1 << 30
    for u in bits(p | x):
        c = (p & (adj[u] | 1 << u)).bit_count()
        if c < best_count:
            best, best_count = u, c
            if c <= 1:
                break
    branch = p & (adj[best] | 1 << best)
    for v in bits(branch):
        bv = 1 << v
        closed = adj[v] | bv
        yield from _bk(r | bv, p & ~closed, x & ~closed, adj)
        p &= ~bv
        x |= bv


def enumerate_maximal_independent_sets(g: Graph, limit: int | None = None) -> Iterator[frozenset[int]]:
    check_limit(g.n, limit)
    for mask in iter_maximal_independent_masks(g.adjacency_bits, (1 << g.n) - 1):
        yield frozenset(bits(mask))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(vertices)
    return all(not (g.adjacency_bits[v] & mask) for v in bits(mask))


def is_maximal_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(vertices)
    if not is_independent(g, bits(mask)):
        return False
    dominated = mask
    for v in bits(mask):
        dominated |= g.adjacency_bits[v]
    return dominated == (1 << g.n) - 1


@dataclass(frozen=True)
class IndependenceNumbers:
    alpha: int
    i: int
    alpha_set: tuple[int, ...]
    i_set: tuple[int, ...]


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def independence_numbers(g: Graph, limit: int | None = None) -> IndependenceNumbers:
    """alpha(G) and i(G) with lexicographically smallest witness sets."""
    check_limit(g.n, limit)
    best_a = best_i = None
    for mask in iter_maximal_independent_masks(g.adjacency_bits, (1 << g.n) - 1):
        size = mask.bit_count()
        key = _lex_key(mask)
        if best_a is None or size > best_a[0] or (size == best_a[0] and key < best_a[1]):
            best_a = (size, key)
        if best_i is None or size < best_i[0] or (size == best_i[0] and key < best_i[1]):
            best_i = (size, key)
    return IndependenceNumbers(best_a[0], best_i[0], best_a[1], best_i[1])


def minimum_independent_dominating_sets(g: Graph, limit: int | None = None) -> list[int]:
    """All i(G)-sets as bitmasks, in enumeration order."""
    check_limit(g.n, limit)
    sets = list(iter_maximal_independent_masks(g.adjacency_bits, (1 << g.n) - 1))
    smallest = min(s.bit_count() for s in sets)
    return [s for s in sets if s.bit_count() == smallest]


def is_well_covered(g: Graph, limit: int | None = None) -> bool:
    nums = independence_numbers(g, limit)
    return nums.alpha == nums.i


def is_t_packing(g: Graph, vertices: Iterable[int], t: int, d: DistanceMatrix | None = None) -> bool:
    """True iff all pairwise distances in ``vertices`` exceed ``t``."""
    if d is None:
        d = g.distances
    vs = sorted(set(vertices))
    return all(d[u][v] > t for k, u in enumerate(vs) for v in vs[k + 1:])


def t_packing_number(g: Graph, t: int, limit: int | None = None) -> int:
    """rho_t(G): the independence number of the power graph G^t."""
    check_limit(g.n, limit)
    power = g.distances.ball_masks(t)
    return max(m.bit_count() for m in iter_maximal_independent_masks(power, (1 << g.n) - 1))
