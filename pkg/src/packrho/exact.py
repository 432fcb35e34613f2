"""Exact Grundy packing chromatic number and packing chromatic number.

Three independent routes compute Gamma_rho:

* :func:`gamma_exact_layering` - depth-first search over chains of maximal
  independent sets A_1 of G, A_2 of G^2 - A_1, ... (the greedy coloring
  characterization via color classes), with branch-and-bound;
* :func:`gamma_oracle_orderings` - every vertex order fed to the greedy
  algorithm (identical partial colorings are merged, which does not change
  the maximum);
* :func:`gamma_via_theorem3` - DMP value maximized over all independent
  sets of size n in G(n).

Closed forms for diameter 2 and 3 live here as well.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .coloring import LayeredPartition, PackingColoring, from_layers, greedy_color, to_layers
from .errors import SearchTimeout, SizeLimitExceeded, WrongDiameter
from .graph import (
    UNREACHABLE,
    Graph,
    bits,
    check_limit,
    independence_numbers,
    iter_maximal_independent_masks,
    metrics,
    minimum_independent_dominating_sets,
)
from .transform import (
    LevelAssignment,
    _dmp_explore,
    _power_tables,
    diametrical_graph,
    dmp_best_run,
)

LAYERING_LIMIT = 10
ORDERINGS_LIMIT = 8
THEOREM3_LIMIT = 7
CHI_LIMIT = 12


@dataclass(frozen=True)
class GammaResult:
    value: int
    certificate: LayeredPartition
    method: str
    exact: bool = True

    @property
    def coloring(self) -> PackingColoring:
        return from_layers(self.certificate)


@dataclass(frozen=True)
class ChiResult:
    value: int
    certificate: PackingColoring
    method: str
    exact: bool = True


def _layers_from_masks(masks) -> LayeredPartition:
    return LayeredPartition(tuple(frozenset(bits(m)) for m in masks))


class _Clock:
    def __init__(self, budget):
        self.budget = budget
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def expired(self) -> bool:
        if self.deadline is None:
            return False
        self.ticks += 1
        if self.ticks & 255:
            return False
        return time.monotonic() > self.deadline


def _power_lookup(g: Graph):
    """power(i) -> adjacency masks of G^i, for every i >= 1."""
    d = g.distances
    finite = [x for row in d.dist for x in row if x != UNREACHABLE]
    top = max(finite, default=0)
    tables = [None] + [d.ball_masks(i) for i in range(1, max(top, 1) + 1)]

    def power(i: int):
        return tables[min(i, len(tables) - 1)]

    return power


# ---------------------------------------------------------------------------
# Gamma: layering search

def gamma_exact_layering(g: Graph, limit: int | None = None, budget: float | None = None) -> GammaResult:
    """Gamma_rho(g) by searching chains of maximal independent sets.

    Level i picks a maximal independent set of G^i restricted to the
    still-uncolored vertices; the longest chain that colors everything is
    the answer.  Subproblems are memoized on (level, uncolored set).  A
    child A is skipped when ``level + |R| - |A|`` cannot beat the best chain
    already found at that node, and the root stops once the bound
    ``n - i(G) + 1`` is reached.
    """
    lim = LAYERING_LIMIT if limit is None else limit
    if g.n > lim:
        raise SizeLimitExceeded(g.n, lim, "gamma_exact_layering")
    if g.n == 0:
        return GammaResult(0, LayeredPartition(()), "layering")
    power = _power_lookup(g)
    clock = _Clock(budget)
    memo: dict[tuple[int, int], tuple[int, int]] = {}
    full = (1 << g.n) - 1
    best_root = [0, None]

    def solve(level: int, rem: int) -> int:
        """Max number of further levels needed to color ``rem`` from ``level`` on."""
        key = (level, rem)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        if clock.expired():
            raise _Expired
        adj = power(level)
        size = rem.bit_count()
        if all((adj[v] | 1 << v) & rem == rem for v in bits(rem)):
            # G^level[rem] is complete; one vertex per level from here on.
            # Marked with a = 0.
            memo[key] = (size, 0)
            return size
        children = sorted(
            iter_maximal_independent_masks(adj, rem),
            key=lambda a: (a.bit_count(), tuple(bits(a))),
        )
        best, best_a = 0, children[0]
        for a in children:
            if 1 + size - a.bit_count() <= best:
                continue
            rest = rem & ~a
            val = 1 + (solve(level + 1, rest) if rest else 0)
            if val > best:
                best, best_a = val, a
            if level == 1:
                if best > best_root[0]:
                    best_root[:] = [best, a]
                if best >= g.n - children[0].bit_count() + 1:
                    break
        memo[key] = (best, best_a)
        return best

    try:
        value = solve(1, full)
    except _Expired:
        if best_root[1] is None:
            # no complete chain yet: any greedy run is a lower bound
            partial = to_layers(greedy_color(g, range(g.n)))
        else:
            partial = _chain_certificate(power, memo, best_root[1], full)
        raise SearchTimeout(
            budget, GammaResult(partial.k, partial, "layering", exact=False)
        ) from None
    cert = _chain_certificate(power, memo, None, full)
    assert cert.k == value
    return GammaResult(value, cert, "layering")


class _Expired(Exception):
    pass


def _chain_certificate(power, memo, first: int | None, full: int) -> LayeredPartition:
    """Rebuild the layers from the memo; ``first`` overrides the level-1 class."""
    masks = []
    rem = full
    level = 1
    while rem:
        entry = memo.get((level, rem))
        if level == 1 and first is not None:
            a = first
        elif entry is None:
            # only reachable for a timed-out partial chain: finish greedily
            adj = power(level)
            a = 0
            for v in bits(rem):
                if not adj[v] & a:
                    a |= 1 << v
        else:
            a = entry[1]
            if a == 0:
                # clique: singletons in vertex order
                masks.extend(1 << v for v in bits(rem))
                break
        masks.append(a)
        rem &= ~a
        level += 1
    return _layers_from_masks(masks)


# ---------------------------------------------------------------------------
# Gamma: ordering oracle

def gamma_oracle_orderings(g: Graph, limit: int | None = None) -> GammaResult:
    """Max color count of the greedy algorithm over all n! vertex orders.

    Orders are enumerated as a tree of prefixes.  Two prefixes that leave
    the same partial coloring have the same set of completions, so the
    subtree value is cached on the partial coloring.
    """
    lim = ORDERINGS_LIMIT if limit is None else limit
    if g.n > lim:
        raise SizeLimitExceeded(g.n, lim, "gamma_oracle_orderings")
    n = g.n
    if n == 0:
        return GammaResult(0, LayeredPartition(()), "orderings")
    d = g.distances.dist
    memo: dict[tuple[int, ...], int] = {}

    def next_color(state, v):
        row = d[v]
        blocked = 0
        for u, c in enumerate(state):
            if c and row[u] <= c:
                blocked |= 1 << c
        c = 1
        while blocked >> c & 1:
            c += 1
        return c

    def best(state) -> int:
        got = memo.get(state)
        if got is not None:
            return got
        top = 0
        done = True
        for v in range(n):
            if state[v]:
                continue
            done = False
            c = next_color(state, v)
            child = state[:v] + (c,) + state[v + 1:]
            top = max(top, best(child))
        if done:
            top = max(state)
        memo[state] = top
        return top

    start = (0,) * n
    value = best(start)
    # replay one maximizing order
    state = start
    while 0 in state:
        for v in range(n):
            if not state[v]:
                child = state[:v] + (next_color(state, v),) + state[v + 1:]
                if memo[child] == value:
                    state = child
                    break
    return GammaResult(value, to_layers(state), "orderings")


# ---------------------------------------------------------------------------
# Gamma: DMP over G(n)

def iter_packing_assignments(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All packing colorings with colors in 1..k (= size-n independent sets of G(k))."""
    n = g.n
    d = g.distances.dist
    levels = [0] * n

    def rec(v):
        if v == n:
            yield tuple(levels)
            return
        row = d[v]
        for c in range(1, k + 1):
            if all(levels[u] != c or row[u] > c for u in range(v)):
                levels[v] = c
                yield from rec(v + 1)
        levels[v] = 0

    yield from rec(0)


def gamma_via_theorem3(g: Graph, limit: int | None = None) -> GammaResult:
    """Max DMP value over every independent set of size n in G(n).

    Only k = n is searched: an assignment valid for some k < n is also one
    for k = n with the upper levels empty.
    """
    lim = THEOREM3_LIMIT if limit is None else limit
    if g.n > lim:
        raise SizeLimitExceeded(g.n, lim, "gamma_via_theorem3")
    n = g.n
    if n == 0:
        return GammaResult(0, LayeredPartition(()), "theorem3")
    power = _power_tables(g, n)
    memo: dict = {}
    best, best_levels = 0, None
    for levels in iter_packing_assignments(g, n):
        val = _dmp_explore(levels, n, power, memo)
        if val > best:
            best, best_levels = val, levels
    final = dmp_best_run(g, LevelAssignment(best_levels, n), limit=lim, memo=memo)
    return GammaResult(best, to_layers(final.levels), "theorem3")


# ---------------------------------------------------------------------------
# chi

def chi_exact(g: Graph, limit: int | None = None, budget: float | None = None) -> ChiResult:
    """chi_rho(g): the least k admitting a packing k-coloring.

    Feasibility for each k is a backtracking search over level assignments
    (size-n independent sets of G(k)); k grows from 1 until a coloring is
    found.  A greedy coloring gives the starting upper bound and is the
    partial answer on timeout.
    """
    lim = CHI_LIMIT if limit is None else limit
    if g.n > lim:
        raise SizeLimitExceeded(g.n, lim, "chi_exact")
    n = g.n
    if n == 0:
        return ChiResult(0, PackingColoring(()), "exact")
    upper = greedy_color(g, range(n))
    clock = _Clock(budget)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    power = _power_lookup(g)
    # Colors >= top all forbid exactly "same component", so they are
    # interchangeable; only the next unused one among them is tried.
    d = g.distances.dist
    top = max((x for row in d for x in row if x != UNREACHABLE), default=0)
    top = max(top, 1)

    def feasible(k: int):
        class_mask = [0] * (k + 1)
        levels = [0] * n

        def rec(idx: int, high: int) -> bool:
            if idx == n:
                return True
            if clock.expired():
                raise _Expired
            v = order[idx]
            for c in range(1, min(k, max(high, top - 1) + 1) + 1):
                if power(c)[v] & class_mask[c]:
                    continue
                class_mask[c] |= 1 << v
                levels[v] = c
                if rec(idx + 1, max(high, c)):
                    return True
                class_mask[c] &= ~(1 << v)
            levels[v] = 0
            return False

        return tuple(levels) if rec(0, 0) else None

    try:
        for k in range(1, upper.k):
            sol = feasible(k)
            if sol is not None:
                return ChiResult(k, PackingColoring(sol), "exact")
    except _Expired:
        raise SearchTimeout(budget, ChiResult(upper.k, upper, "exact", exact=False)) from None
    return ChiResult(upper.k, upper, "exact")


# ---------------------------------------------------------------------------
# bounds and closed forms

def gamma_upper_bound(g: Graph, limit: int | None = None) -> int:
    """n - i(G) + 1."""
    return g.n - independence_numbers(g, limit).i + 1


def _require_diam(g: Graph, want: int):
    met = metrics(g)
    if met.diam != want:
        raise WrongDiameter(want, met.diam)
    return met


def _coloring_from_classes(n: int, *classes: int) -> PackingColoring:
    """Give class j (a bitmask) color j+1; every other vertex its own color."""
    colors = [0] * n
    for j, mask in enumerate(classes, start=1):
        for v in bits(mask):
            colors[v] = j
    nxt = len(classes) + 1
    for v in range(n):
        if not colors[v]:
            colors[v] = nxt
            nxt += 1
    return PackingColoring(tuple(colors))


def gamma_diam2(g: Graph, limit: int | None = None) -> GammaResult:
    """Gamma_rho = n - i(G) + 1 for diameter 2.

    Certificate: an i(G)-set colored 1, every other vertex a distinct color.
    """
    _require_diam(g, 2)
    nums = independence_numbers(g, limit)
    cert = _coloring_from_classes(g.n, sum(1 << v for v in nums.i_set))
    return GammaResult(g.n - nums.i + 1, to_layers(cert), "closed-form")


def chi_diam2(g: Graph, limit: int | None = None) -> ChiResult:
    """chi_rho = n - alpha(G) + 1 for diameter 2."""
    _require_diam(g, 2)
    nums = independence_numbers(g, limit)
    cert = _coloring_from_classes(g.n, sum(1 << v for v in nums.alpha_set))
    return ChiResult(g.n - nums.alpha + 1, cert, "diam2")


def _maximal_cliques(dadj, rem: int) -> Iterator[int]:
    """Maximal cliques of the graph with adjacency ``dadj`` induced on ``rem``."""
    comp = [rem & ~dadj[v] & ~(1 << v) for v in range(len(dadj))]
    return iter_maximal_independent_masks(comp, rem)


@dataclass(frozen=True)
class DiamThreeValue:
    """m(G) or m'(G) with its witness: maximal independent set A and clique Q of D(G) - A."""

    value: int
    independent_set: tuple[int, ...]
    clique: tuple[int, ...]


def _diam3_scan(g: Graph, limit, pick_clique, better):
    _require_diam(g, 3)
    check_limit(g.n, limit)
    dadj = diametrical_graph(g).result.adjacency_bits
    full = (1 << g.n) - 1
    best = None
    for a in iter_maximal_independent_masks(g.adjacency_bits, full):
        q = pick_clique(_maximal_cliques(dadj, full & ~a))
        key = (a.bit_count() + q.bit_count(), tuple(bits(a)), tuple(bits(q)))
        if best is None or better(key, best):
            best = key
    return DiamThreeValue(best[0], best[1], best[2])


def _smallest(cliques) -> int:
    return min(cliques, key=lambda q: (q.bit_count(), tuple(bits(q))))


def _largest(cliques) -> int:
    return min(cliques, key=lambda q: (-q.bit_count(), tuple(bits(q))))


def m_value(g: Graph, limit: int | None = None) -> DiamThreeValue:
    """min over maximal independent A of |A| + (smallest maximal clique of D(G) - A)."""
    return _diam3_scan(g, limit, _smallest, lambda k, b: k < b)


def m_prime_value(g: Graph, limit: int | None = None) -> DiamThreeValue:
    """max over maximal independent A of |A| + omega(D(G) - A)."""
    return _diam3_scan(
        g, limit, _largest, lambda k, b: (-k[0], k[1], k[2]) < (-b[0], b[1], b[2])
    )


def gamma_diam3(g: Graph, limit: int | None = None) -> GammaResult:
    """Gamma_rho = n - m(G) + 2 for diameter 3; A colored 1, Q colored 2."""
    m = m_value(g, limit)
    cert = _coloring_from_classes(
        g.n, sum(1 << v for v in m.independent_set), sum(1 << v for v in m.clique)
    )
    return GammaResult(g.n - m.value + 2, to_layers(cert), "closed-form")


def chi_diam3(g: Graph, limit: int | None = None) -> ChiResult:
    """chi_rho = n - m'(G) + 2 for diameter 3."""
    m = m_prime_value(g, limit)
    cert = _coloring_from_classes(
        g.n, sum(1 << v for v in m.independent_set), sum(1 << v for v in m.clique)
    )
    return ChiResult(g.n - m.value + 2, cert, "diam3")


def singleton_shortcut(g: Graph, limit: int | None = None) -> GammaResult | None:
    """n - i(G) + 1 when some i(G)-set A leaves an isolated vertex in D(G) - A.

    Returns None when no i(G)-set does.
    """
    _require_diam(g, 3)
    dadj = diametrical_graph(g).result.adjacency_bits
    full = (1 << g.n) - 1
    for a in sorted(minimum_independent_dominating_sets(g, limit), key=lambda m: tuple(bits(m))):
        rem = full & ~a
        for v in bits(rem):
            if not dadj[v] & rem:
                cert = _coloring_from_classes(g.n, a, 1 << v)
                return GammaResult(g.n - a.bit_count() + 1, to_layers(cert), "closed-form")
    return None


# ---------------------------------------------------------------------------
# dispatch

GAMMA_METHODS = ("layering", "orderings", "theorem3", "auto")
CHI_METHODS = ("exact", "diam2", "diam3", "auto")


def gamma(g: Graph, method: str = "auto", budget: float | None = None, limit: int | None = None) -> GammaResult:
    if method == "layering":
        return gamma_exact_layering(g, limit=limit, budget=budget)
    if method == "orderings":
        return gamma_oracle_orderings(g, limit=limit)
    if method == "theorem3":
        return gamma_via_theorem3(g, limit=limit)
    if method != "auto":
        raise ValueError(f"unknown gamma method {method!r}")
    met = metrics(g)
    if met.connected and met.diam <= 1:
        return GammaResult(g.n, to_layers(tuple(range(1, g.n + 1))), "closed-form")
    if met.connected and met.diam == 2:
        return gamma_diam2(g)
    if met.connected and met.diam == 3:
        return gamma_diam3(g)
    return gamma_exact_layering(g, limit=limit, budget=budget)


def chi(g: Graph, method: str = "auto", budget: float | None = None, limit: int | None = None) -> ChiResult:
    if method == "exact":
        return chi_exact(g, limit=limit, budget=budget)
    if method == "diam2":
        return chi_diam2(g)
    if method == "diam3":
        return chi_diam3(g)
    if method != "auto":
        raise ValueError(f"unknown chi method {method!r}")
    met = metrics(g)
    if met.connected and met.diam == 2:
        return chi_diam2(g)
    if met.connected and met.diam == 3:
        return chi_diam3(g)
    return chi_exact(g, limit=limit, budget=budget)
