"""Named graph families and the fixed example graphs fig1, fig2, fig3.

Vertex numbering per family:

* ``path(n)``, ``cycle(n)``: 0..n-1 along the path / around the cycle.
* ``complete_bipartite(s, t)``: side of size s is 0..s-1, the other s..s+t-1.
* ``star(n)``: ``complete_bipartite(n - 1, 1)``, so the center is n-1.
* ``knn_minus_matching(n)``: u_i = i, v_i = n + i; u_i v_j is an edge iff i != j.
* ``join(G, H)``: G first, H shifted by |G|.
* ``split(p, r, seed)``: clique 0..p-1, independent set p..p+r-1.
* ``cube(d)``: vertex ids are the d-bit words, edges flip one bit.

A spec string looks like ``knn_minus_matching(3)`` or
``join(path(4),cycle(5))``; see :func:`parse_spec`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import BadParameters
from .graph import Graph, join as join_graphs
from .rng import make_rng, random_graph


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty needs n >= 1")
    return Graph.empty(n)


def complete_bipartite(s: int, t: int) -> Graph:
    _need(s >= 1 and t >= 1, "complete_bipartite needs s, t >= 1")
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def star(n: int) -> Graph:
    _need(n >= 2, "star needs n >= 2")
    return complete_bipartite(n - 1, 1)


def knn_minus_matching(n: int) -> Graph:
    _need(n >= 2, "knn_minus_matching needs n >= 2")
    return Graph.from_edges(2 * n, ((i, n + j) for i in range(n) for j in range(n) if i != j))


def join(g: Graph, h: Graph) -> Graph:
    return join_graphs(g, h)


def split(p: int, r: int, seed: int) -> Graph:
    """Random connected split graph: K_p plus r independent vertices, each
    joined to a uniformly random nonempty subset of the clique."""
    _need(p >= 1 and r >= 0, "split needs p >= 1, r >= 0")
    rng = make_rng(seed)
    edges = [(i, j) for i in range(p) for j in range(i + 1, p)]
    for x in range(r):
        subset = int(rng.integers(1, 1 << p))
        edges.extend((i, p + x) for i in range(p) if subset >> i & 1)
    return Graph.from_edges(p + r, edges)


def cube(d: int = 3) -> Graph:
    _need(d >= 1, "cube needs d >= 1")
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def erdos_renyi(n: int, m: int, seed: int) -> Graph:
    return random_graph(n, m, seed)


# Fixed example graphs.  Vertex names are single letters; ids follow the
# order of the *_NAMES tuples.

FIG1_NAMES = ("a", "b", "c", "d", "e", "f")
FIG1_EDGES = [
    ("a", "b"), ("b", "c"), ("c", "e"), ("e", "f"),
    ("b", "d"), ("d", "e"), ("c", "d"),
]

FIG2_NAMES = ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j")
FIG2_DRAWN_EDGES = [
    # outer 9-cycle a-b-c-d-h-g-i-f-e-a
    ("a", "b"), ("b", "c"), ("c", "d"), ("d", "h"), ("h", "g"),
    ("g", "i"), ("i", "f"), ("f", "e"), ("e", "a"),
    # triangle b-h-f
    ("b", "h"), ("h", "f"), ("f", "b"),
    # middle vertex j
    ("c", "j"), ("j", "e"), ("j", "g"),
]
# fig2_drawn also has a-g, c-i and d-e at distance 3.  The three extra
# edges make a, d, i the only diametrical vertices (D(G) = K_3 + 7K_1)
# while keeping {c, e, g} an i(G)-set.
FIG2_EDGES = FIG2_DRAWN_EDGES + [("b", "g"), ("e", "h"), ("c", "f")]

# h is the pendant vertex at x.
FIG3_NAMES = ("w", "x", "z", "d", "e", "f", "y", "h")
FIG3_EDGES = [
    ("h", "x"), ("x", "w"), ("w", "z"), ("z", "x"), ("x", "d"), ("d", "w"),
    ("d", "e"), ("e", "y"), ("y", "f"), ("f", "z"),
]


def _named(names, edges) -> Graph:
    index = {name: i for i, name in enumerate(names)}
    return Graph.from_edges(len(names), ((index[a], index[b]) for a, b in edges))


def fig1() -> Graph:
    return _named(FIG1_NAMES, FIG1_EDGES)


def fig2() -> Graph:
    return _named(FIG2_NAMES, FIG2_EDGES)


def fig2_drawn() -> Graph:
    return _named(FIG2_NAMES, FIG2_DRAWN_EDGES)


def fig3() -> Graph:
    return _named(FIG3_NAMES, FIG3_EDGES)


VERTEX_NAMES = {
    "fig1": FIG1_NAMES, "fig2": FIG2_NAMES, "fig2_drawn": FIG2_NAMES, "fig3": FIG3_NAMES,
}

FAMILIES = {
    "path": (path, "i"),
    "cycle": (cycle, "i"),
    "complete": (complete, "i"),
    "empty": (empty, "i"),
    "complete_bipartite": (complete_bipartite, "ii"),
    "star": (star, "i"),
    "knn_minus_matching": (knn_minus_matching, "i"),
    "join": (join, "gg"),
    "split": (split, "iii"),
    "cube": (cube, "i"),
    "fig1": (fig1, ""),
    "fig2": (fig2, ""),
    "fig2_drawn": (fig2_drawn, ""),
    "fig3": (fig3, ""),
    "erdos_renyi": (erdos_renyi, "iii"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[Union[int, "FamilySpec"], ...] = ()

    def __str__(self):
        if not self.params and FAMILIES.get(self.family, (None, ""))[1] == "":
            return self.family
        return f"{self.family}({','.join(str(p) for p in self.params)})"


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<int>-?\d+)|(?P<punct>[(),]))")


def parse_spec(text: str) -> FamilySpec:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise BadParameters(f"cannot parse family spec at {text[pos:]!r}")
        tokens.append((mt.lastgroup, mt.group(mt.lastgroup)))
        pos = mt.end()
    spec, rest = _parse_item(tokens)
    if rest or not isinstance(spec, FamilySpec):
        raise BadParameters(f"malformed family spec {text!r}")
    return spec


def _parse_item(tokens):
    if not tokens:
        raise BadParameters("unexpected end of family spec")
    kind, val = tokens[0]
    if kind == "int":
        return int(val), tokens[1:]
    if kind != "name":
        raise BadParameters(f"unexpected {val!r} in family spec")
    tokens = tokens[1:]
    params = []
    if tokens and tokens[0] == ("punct", "("):
        tokens = tokens[1:]
        while True:
            item, tokens = _parse_item(tokens)
            params.append(item)
            if not tokens:
                raise BadParameters("unclosed '(' in family spec")
            if tokens[0] == ("punct", ","):
                tokens = tokens[1:]
                continue
            if tokens[0] == ("punct", ")"):
                tokens = tokens[1:]
                break
            raise BadParameters(f"unexpected {tokens[0][1]!r} in family spec")
    return FamilySpec(val, tuple(params)), tokens


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    try:
        fn, sig = FAMILIES[spec.family]
    except KeyError:
        raise BadParameters(f"unknown family {spec.family!r}") from None
    params = spec.params
    if spec.family == "cube" and not params:
        params = (3,)
    if len(params) != len(sig):
        raise BadParameters(f"{spec.family} takes {len(sig)} parameter(s), got {len(params)}")
    args = []
    for kind, p in zip(sig, params):
        if kind == "i":
            if not isinstance(p, int):
                raise BadParameters(f"{spec.family}: expected an integer, got {p}")
            args.append(p)
        else:
            if not isinstance(p, FamilySpec):
                raise BadParameters(f"{spec.family}: expected a graph, got {p}")
            args.append(generate(p))
    return fn(*args)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)
