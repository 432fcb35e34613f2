"""Executable checks for the closed-form results on Grundy packing numbers.

Each ``check_*`` function returns a :class:`TheoremReport`.  Exhaustive
checks sweep *labeled* graphs: every subset of the ``n(n-1)/2`` possible
edges, optionally filtered by connectivity.  A failing report carries the
first counterexample as graph6 text, and :func:`recheck` re-runs the same
per-graph predicate on it in isolation.

Sweeps fan out over worker processes when more than one worker is
requested (argument, else ``PACKRHO_THREADS``, else the CPU count).  The
merged report does not depend on the worker count.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .coloring import greedy_color, verify_greedy_packing_coloring
from .errors import BadParameters
from .exact import (
    chi_diam2,
    chi_diam3,
    chi_exact,
    gamma_diam2,
    gamma_diam3,
    gamma_exact_layering,
    gamma_oracle_orderings,
    gamma_via_theorem3,
    m_value,
    singleton_shortcut,
)
from .families import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    generate,
    join,
    knn_minus_matching,
    path,
    split,
    star,
)
from .graph import (
    Graph,
    bits,
    components,
    disjoint_union,
    has_universal_vertex,
    independence_numbers,
    metrics,
    minimum_independent_dominating_sets,
)
from .io import parse_graph6, write_graph6
from .rng import make_rng, random_graph, random_order, spawn

PATH_WITNESS = (2, 1, 3, 4, 1, 2, 5, 1, 3, 2, 1, 7, 1, 4, 2, 1, 3, 6, 1, 2, 3, 1, 5, 2, 1, 4, 3, 1, 2)
SWEEP_DEFAULT = 6
SWEEP_MAX = 7


@dataclass
class TheoremReport:
    theorem_id: str
    instances: int = 0
    passed: bool = True
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    def fail(self, g: Graph, note: str | None = None) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = write_graph6(g)
            if note:
                self.details["failure"] = note

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instances": self.instances,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "details": self.details,
        }


def merge(a: TheoremReport, b: TheoremReport) -> TheoremReport:
    """Combine two partial sweep reports; ``a`` precedes ``b`` in sweep order."""
    out = TheoremReport(a.theorem_id, a.instances + b.instances, a.passed and b.passed)
    out.counterexample = a.counterexample if not a.passed else b.counterexample
    tags = Counter(a.details.get("tags", {}))
    tags.update(b.details.get("tags", {}))
    out.details = {**b.details, **a.details, "tags": dict(sorted(tags.items()))}
    return out


def worker_count(workers: int | None = None) -> int:
    if workers is None:
        env = os.environ.get("PACKRHO_THREADS")
        workers = int(env) if env else (os.cpu_count() or 1)
    return max(1, workers)


# ---------------------------------------------------------------------------
# labeled enumeration

def _connected_bits(n: int, adj: list[int]) -> bool:
    if n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def _graph_of_mask(n: int, pairs, mask: int):
    adj = [0] * n
    for k, (u, v) in enumerate(pairs):
        if mask >> k & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def labeled_graphs(n: int, connected: bool | None = True, start: int = 0, stop: int | None = None):
    """All labeled graphs on n vertices (edge-subset masks ``start..stop``).

    ``connected`` True keeps connected graphs, False keeps disconnected
    ones, None keeps everything.
    """
    pairs = list(combinations(range(n), 2))
    stop = 1 << len(pairs) if stop is None else stop
    for mask in range(start, stop):
        adj = _graph_of_mask(n, pairs, mask)
        if connected is not None and _connected_bits(n, adj) != connected:
            continue
        yield Graph(n, tuple(tuple(bits(a)) for a in adj))


def count_labeled(n: int, connected: bool | None = True) -> int:
    return sum(1 for _ in labeled_graphs(n, connected))


# ---------------------------------------------------------------------------
# cached per-graph values

@lru_cache(maxsize=None)
def gamma_value(g: Graph) -> int:
    return gamma_oracle_orderings(g, limit=SWEEP_MAX).value


@lru_cache(maxsize=None)
def chi_value(g: Graph) -> int:
    return chi_exact(g).value


@lru_cache(maxsize=None)
def _info(g: Graph):
    return metrics(g), independence_numbers(g)


# ---------------------------------------------------------------------------
# per-graph predicates: None = not applicable, else (holds, tag or None)

def pred_universal(g: Graph):
    return (gamma_value(g) == g.n) == has_universal_vertex(g), None


def n_minus_one_conditions(g: Graph, strict_z: bool = False) -> bool:
    """Evaluate conditions (i)-(iv) of the Gamma = n-1 characterization.

    With ``strict_z`` the extra vertex in (iv) must also be non-central.
    """
    met, ind = _info(g)
    if ind.i != 2 or met.diam > 4:
        return False
    d = g.distances
    isets = [tuple(bits(a)) for a in minimum_independent_dominating_sets(g)]
    if met.rad == 3:
        found = False
        for a in isets:
            for x, y in (a, a[::-1]):
                if d[x][y] != 3:
                    continue
                if any(all(d[w][z] <= 2 for z in g.adjacency[y]) for w in g.adjacency[x]):
                    found = True
        if not found:
            return False
    if met.rad == 2 and met.diam == 4:
        central = set(met.central)
        diametrical = set(met.diametrical_vertices)
        found = False
        for a in isets:
            for w in central.difference(a):
                for z in range(g.n):
                    if z == w or z in a or z in diametrical:
                        continue
                    if strict_z and z in central:
                        continue
                    found = True
        if not found:
            return False
    return True


def pred_n_minus_one(g: Graph):
    target = gamma_value(g) == g.n - 1
    tag = None
    if n_minus_one_conditions(g, strict_z=True) != target:
        tag = "strict-reading-mismatch"
    elif target:
        tag = "gamma-n-minus-1"
    return n_minus_one_conditions(g) == target, tag


def pred_radius_lemma(g: Graph):
    met, ind = _info(g)
    if ind.i != 2:
        return None
    return met.rad in (2, 3) and met.diam in (2, 3, 4, 5), f"rad{met.rad}-diam{met.diam}"


def _k1_plus_universal(g: Graph) -> bool:
    comps = components(g)
    if len(comps) != 2:
        return False
    small, big = sorted(comps, key=lambda c: c.n)
    return small.n == 1 and has_universal_vertex(big)


def pred_disconnected(g: Graph):
    return (gamma_value(g) == g.n - 1) == _k1_plus_universal(g), None


def pred_diameter(g: Graph):
    met, _ = _info(g)
    if met.diam == 2:
        ok = gamma_diam2(g).value == gamma_value(g) and chi_diam2(g).value == chi_value(g)
    elif met.diam == 3:
        ok = gamma_diam3(g).value == gamma_value(g) and chi_diam3(g).value == chi_value(g)
    else:
        return None
    return ok, f"diam{met.diam}"


def pred_well_covered(g: Graph):
    met, ind = _info(g)
    if met.diam != 2 or ind.alpha != ind.i:
        return None
    return gamma_value(g) == chi_value(g), None


def pred_agreement(g: Graph):
    oracle = gamma_value(g)
    ok = gamma_exact_layering(g).value == oracle and chi_value(g) <= oracle
    tag = None
    if g.n <= 5:
        ok = ok and gamma_via_theorem3(g).value == oracle
        tag = "with-theorem3"
    return ok, tag


PREDICATES = {
    "universal-vertex": (pred_universal, True),
    "n-minus-one": (pred_n_minus_one, True),
    "radius-lemma": (pred_radius_lemma, True),
    "n-minus-one-disconnected": (pred_disconnected, False),
    "diameter-formulas": (pred_diameter, True),
    "well-covered": (pred_well_covered, True),
    "gamma-agreement": (pred_agreement, True),
}


def recheck(theorem_id: str, graph6: str) -> bool:
    """True iff the graph still violates the named predicate."""
    pred, _ = PREDICATES[theorem_id]
    out = pred(parse_graph6(graph6))
    return out is not None and not out[0]


def _sweep_chunk(theorem_id: str, n: int, start: int, stop: int) -> TheoremReport:
    pred, connected = PREDICATES[theorem_id]
    rep = TheoremReport(theorem_id)
    tags: Counter = Counter()
    for g in labeled_graphs(n, connected, start, stop):
        out = pred(g)
        if out is None:
            continue
        ok, tag = out
        rep.instances += 1
        if tag:
            tags[tag] += 1
        if not ok:
            rep.fail(g)
    rep.details["tags"] = dict(tags)
    return rep


def sweep(theorem_id: str, n_max: int = SWEEP_DEFAULT, workers: int | None = None,
          allow_n7: bool = False) -> TheoremReport:
    if n_max > SWEEP_MAX or (n_max == SWEEP_MAX and not allow_n7):
        raise BadParameters(f"n_max={n_max} needs n_max <= 6 (7 with allow_n7)")
    jobs = []
    for n in range(1, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        step = max(1, total // 64)
        jobs.extend((theorem_id, n, s, min(s + step, total)) for s in range(0, total, step))
    w = worker_count(workers)
    if w == 1:
        parts = [_sweep_chunk(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(w) as pool:
            parts = list(pool.map(_sweep_chunk, *zip(*jobs)))
    rep = TheoremReport(theorem_id)
    for part in parts:
        rep = merge(rep, part)
    rep.details["n_max"] = n_max
    return rep


def check_prop_universal(n_max: int = SWEEP_DEFAULT, **kw) -> TheoremReport:
    return sweep("universal-vertex", n_max, **kw)


def check_thm_n_minus_1(n_max: int = SWEEP_DEFAULT, **kw) -> TheoremReport:
    """Conditions (i)-(iv) versus Gamma = n-1, the radius lemma on i(G)=2
    graphs, and the disconnected characterization."""
    main = sweep("n-minus-one", n_max, **kw)
    lemma = sweep("radius-lemma", n_max, **kw)
    disc = sweep("n-minus-one-disconnected", n_max, **kw)
    main.details["radius-lemma"] = lemma.to_dict()
    main.details["disconnected"] = disc.to_dict()
    if main.passed and not lemma.passed:
        main.passed, main.counterexample = False, lemma.counterexample
        main.details["failure"] = "radius-lemma"
    if main.passed and not disc.passed:
        main.passed, main.counterexample = False, disc.counterexample
        main.details["failure"] = "n-minus-one-disconnected"
    return main


def check_diam_formulas(n_max: int = SWEEP_DEFAULT, **kw) -> TheoremReport:
    return sweep("diameter-formulas", n_max, **kw)


def check_well_covered(n_max: int = SWEEP_DEFAULT, **kw) -> TheoremReport:
    return sweep("well-covered", n_max, **kw)


def check_gamma_agreement(n_max: int = SWEEP_DEFAULT, **kw) -> TheoremReport:
    return sweep("gamma-agreement", n_max, **kw)


# ---------------------------------------------------------------------------
# joins

def _ceil3(x: int) -> int:
    return math.ceil(x / 3)


def join_instance(bullet: str, params: tuple):
    """(graph, closed-form value) for one join bullet."""
    if bullet == "kst":
        s, t = params
        if s < 1 or t < 1:
            raise BadParameters("K_{s,t} needs s, t >= 1")
        return complete_bipartite(s, t), s + t - min(s, t) + 1
    if bullet == "k1":
        (spec,) = params
        g = generate(spec)
        return join(g, complete(1)), g.n + 1
    if bullet == "ks-empty":
        s, n = params
        if s < 1 or n < 2:
            raise BadParameters("K_s join empty(n) needs s >= 1, n >= 2")
        return join(complete(s), empty(n)), s + n
    if bullet in ("pp", "pc", "cc"):
        p, r = params
        if p < 4 or r < 4:
            raise BadParameters("path/cycle joins need p, r >= 4")
        left = cycle(p) if bullet == "cc" else path(p)
        right = path(r) if bullet == "pp" else cycle(r)
        return join(left, right), p + r - min(_ceil3(p), _ceil3(r)) + 1
    raise BadParameters(f"unknown join bullet {bullet!r}")


def default_join_grid():
    grid = [("kst", (s, t)) for s in range(1, 5) for t in range(1, 5)]
    grid += [("k1", (spec,)) for spec in ("path(3)", "cycle(5)", "empty(4)", "fig1", "knn_minus_matching(3)")]
    grid += [("ks-empty", (s, n)) for s in range(1, 4) for n in range(2, 5)]
    grid += [(b, (p, r)) for b in ("pp", "pc", "cc") for p in range(4, 8) for r in range(4, 8)]
    return grid


def check_joins(param_grid=None, oracle_max: int = 8) -> TheoremReport:
    """Join formula against i(G), i(H); the diameter-2 closed form; and the
    exact solvers on small instances."""
    rep = TheoremReport("joins")
    exact_checked = 0
    for bullet, params in param_grid or default_join_grid():
        g, formula = join_instance(bullet, params)
        rep.instances += 1
        met, ind = _info(g)
        ok = formula == g.n - ind.i + 1
        if met.diam == 2:
            ok = ok and gamma_diam2(g).value == formula
        else:
            ok = ok and met.diam == 1 and formula == g.n
        if g.n <= oracle_max:
            exact_checked += 1
            ok = ok and gamma_oracle_orderings(g, limit=oracle_max).value == formula
        elif g.n <= 10:
            exact_checked += 1
            ok = ok and gamma_exact_layering(g).value == formula
        if not ok:
            rep.fail(g, f"{bullet}{params}")
    rep.details["exact_checked"] = exact_checked
    return rep


# ---------------------------------------------------------------------------
# paths

def check_paths(k_exact_max: int = 12, k_seq: int = 29, trials: int = 100_000,
                k_random: int = 40, seed: int = 0) -> TheoremReport:
    if k_exact_max > 12 or k_seq < len(PATH_WITNESS) or not 1 <= k_random <= 60:
        raise BadParameters("need k_exact_max <= 12, k_seq >= 29, 1 <= k_random <= 60")
    rep = TheoremReport("paths")
    k0 = len(PATH_WITNESS)
    p29 = path(k0)
    rep.instances += 1
    witness_ok = verify_greedy_packing_coloring(p29, PATH_WITNESS) is None and max(PATH_WITNESS) == 7
    rep.details["witness_valid"] = witness_ok
    if not witness_ok:
        rep.fail(p29, "witness")
    # Coloring the witness vertices in color order reproduces the witness.
    prefix = sorted(range(k0), key=lambda v: PATH_WITNESS[v])
    for k in range(k0, k_seq + 1):
        rep.instances += 1
        c = greedy_color(path(k), prefix + list(range(k0, k)))
        if tuple(c.colors[:k0]) != PATH_WITNESS or c.k < 7:
            rep.fail(path(k), f"embedding in P_{k}")
    exact = {}
    for k in range(1, k_exact_max + 1):
        rep.instances += 1
        exact[k] = gamma_oracle_orderings(path(k), limit=12).value
        if exact[k] > 7:
            rep.fail(path(k), "exact value above 7")
    rep.details["exact"] = exact
    pk = path(k_random)
    rng = make_rng(seed)
    seen = 0
    for _ in range(trials):
        seen = max(seen, greedy_color(pk, random_order(k_random, rng)).k)
    rep.instances += trials
    rep.details["random"] = {"k": k_random, "trials": trials, "max_colors": seen, "seed": seed}
    if seen > 7:
        rep.fail(pk, "random order above 7")
    return rep


# ---------------------------------------------------------------------------
# gap families and named families

@dataclass(frozen=True)
class GapInstance:
    graph: Graph
    gamma: int
    chi: int
    gap: int
    exact_checked: bool


def gap_family(k: int, family: str = "star", verify_max: int = 10) -> GapInstance:
    """A graph with Gamma - chi = k from the star or K_{n,n} - M family."""
    if k < 1:
        raise BadParameters("gap_family needs k >= 1")
    if family == "star":
        g, gam, chi = star(k + 2), k + 2, 2
    elif family == "knn":
        n = k + 3
        g, gam, chi = knn_minus_matching(n), 2 * n - 2, n + 1
    else:
        raise BadParameters(f"unknown gap family {family!r}")
    checked = g.n <= verify_max
    if checked and (gamma_exact_layering(g).value != gam or chi_exact(g).value != chi):
        raise AssertionError(f"closed forms disagree with exact solvers on {family}, k={k}")
    return GapInstance(g, gam, chi, gam - chi, checked)


def check_families(split_count: int = 100, seed: int = 0) -> TheoremReport:
    rep = TheoremReport("families")
    m_values = {}
    for n in (3, 4, 5):
        g = knn_minus_matching(n)
        rep.instances += 1
        m_values[n] = m_value(g).value
        ok = gamma_diam3(g).value == 2 * n - 2 and m_values[n] == 4
        if n <= 4:
            ok = ok and gamma_exact_layering(g).value == 2 * n - 2 and chi_value(g) == n + 1
        if not ok:
            rep.fail(g, f"knn_minus_matching({n})")
    rep.details["m_knn"] = m_values
    rep.instances += 1
    if gamma_exact_layering(complete_bipartite(2, 3)).value != 4:
        rep.fail(complete_bipartite(2, 3), "K_{2,3}")
    for n in range(2, 9):
        g = star(n)
        rep.instances += 1
        if gamma_exact_layering(g).value != n or chi_value(g) != 2:
            rep.fail(g, f"star({n})")
    rng = make_rng(seed)
    found = tried = 0
    while found < split_count:
        p, r = (int(x) for x in rng.integers(2, 6, size=2))
        g = split(p, r, int(rng.integers(1 << 62)))
        tried += 1
        if _info(g)[0].diam != 3:
            continue
        found += 1
        rep.instances += 1
        want = g.max_degree + 1
        short = singleton_shortcut(g)
        if gamma_exact_layering(g).value != want or short is None or short.value != want:
            rep.fail(g, "split graph")
    rep.details["split"] = {"accepted": found, "generated": tried, "seed": seed}
    return rep


def check_gap_families(k_max: int = 8) -> TheoremReport:
    """Gap exactly k from both families; exact cross-check while small."""
    rep = TheoremReport("gap-families")
    exact_checked = 0
    for k in range(1, k_max + 1):
        for family in ("star", "knn"):
            rep.instances += 1
            try:
                inst = gap_family(k, family)
            except AssertionError as exc:
                g = star(k + 2) if family == "star" else knn_minus_matching(k + 3)
                rep.fail(g, str(exc))
                continue
            exact_checked += inst.exact_checked
            if inst.gap != k:
                rep.fail(inst.graph, f"{family} gap {inst.gap} != {k}")
    rep.details["exact_checked"] = exact_checked
    return rep


# ---------------------------------------------------------------------------
# bounds, chi <= Gamma, unions

def check_bounds(count: int = 1000, n_max: int = 16, unions: int = 200, seed: int = 0,
                 exact_max: int = 8) -> TheoremReport:
    rep = TheoremReport("bounds")
    streams = spawn(seed, 2)
    rng = streams[0]
    compared = 0
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        m = int(rng.integers(0, n * (n - 1) // 2 + 1))
        g = random_graph(n, m, int(rng.integers(1 << 62)))
        colors = greedy_color(g, random_order(n, rng)).k
        rep.instances += 1
        ok = colors <= n - independence_numbers(g).i + 1
        if n <= exact_max:
            compared += 1
            gam = gamma_exact_layering(g).value
            ok = ok and colors <= gam and chi_exact(g).value <= gam
        if not ok:
            rep.fail(g, "bound or chi <= Gamma")
    rep.details["chi_le_gamma_compared"] = compared
    rng = streams[1]
    for _ in range(unions):
        parts = []
        for _ in range(int(rng.integers(2, 4))):
            n = int(rng.integers(1, 4))
            m = int(rng.integers(0, n * (n - 1) // 2 + 1))
            parts.append(random_graph(n, m, int(rng.integers(1 << 62))))
        g = disjoint_union(*parts)
        rep.instances += 1
        whole = gamma_oracle_orderings(g, limit=9).value
        if whole != max(gamma_exact_layering(c).value for c in components(g)):
            rep.fail(g, "union")
    return rep


# ---------------------------------------------------------------------------
# registry

CHECKS = {
    "universal-vertex": check_prop_universal,
    "n-minus-one": check_thm_n_minus_1,
    "diameter-formulas": check_diam_formulas,
    "well-covered": check_well_covered,
    "gamma-agreement": check_gamma_agreement,
    "joins": check_joins,
    "paths": check_paths,
    "families": check_families,
    "gap-families": check_gap_families,
    "bounds": check_bounds,
}
SWEEPS = ("universal-vertex", "n-minus-one", "diameter-formulas", "well-covered", "gamma-agreement")
