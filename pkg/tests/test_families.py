import networkx as nx
import pytest

from packrho.errors import BadParameters
from packrho.families import (
    FIG1_NAMES,
    FIG2_NAMES,
    FIG3_NAMES,
    FamilySpec,
    complete_bipartite,
    cube,
    fig1,
    fig2,
    fig2_drawn,
    fig3,
    generate,
    knn_minus_matching,
    parse_spec,
    split,
    star,
)
from packrho.graph import independence_numbers, is_connected, is_maximal_independent, metrics
from packrho.transform import diametrical_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_knn_three_is_c6():
    assert nx.is_isomorphic(to_nx(knn_minus_matching(3)), nx.cycle_graph(6))


def test_knn_four_is_cube():
    assert nx.is_isomorphic(to_nx(knn_minus_matching(4)), to_nx(cube(3)))


@pytest.mark.parametrize("n", range(2, 7))
def test_knn_counts(n):
    g = knn_minus_matching(n)
    assert (g.n, g.m) == (2 * n, n * (n - 1))


def test_star_is_bipartite():
    assert star(5) == complete_bipartite(4, 1)


@pytest.mark.parametrize("spec, n, m", [
    ("path(5)", 5, 4), ("cycle(7)", 7, 7), ("complete(5)", 5, 10), ("empty(3)", 3, 0),
    ("complete_bipartite(2,3)", 5, 6), ("star(6)", 6, 5), ("cube", 8, 12), ("cube(4)", 16, 32),
    ("join(path(4),path(4))", 8, 22), ("erdos_renyi(10,20,5)", 10, 20),
])
def test_family_sizes(spec, n, m):
    g = generate(spec)
    assert (g.n, g.m) == (n, m)


def test_split_graph_structure():
    g = split(4, 3, seed=9)
    assert all(g.has_edge(i, j) for i in range(4) for j in range(i + 1, 4))
    assert not any(g.has_edge(i, j) for i in range(4, 7) for j in range(i + 1, 7))
    assert is_connected(g)
    assert split(4, 3, seed=9) == g


def test_fig1():
    g = fig1()
    assert (g.n, g.m) == (6, 7)
    a, f = FIG1_NAMES.index("a"), FIG1_NAMES.index("f")
    assert g.distances[a][f] == 4


def test_fig2_transcription():
    g = fig2()
    met = metrics(g)
    assert (g.n, met.diam) == (10, 3)
    d = diametrical_graph(g).result
    assert sorted(FIG2_NAMES[v] for v in met.diametrical_vertices) == ["a", "d", "i"]
    assert d.m == 3
    names = [FIG2_NAMES.index(x) for x in "ceg"]
    nums = independence_numbers(g)
    assert nums.i == 3 and is_maximal_independent(g, names)


def test_fig2_drawn_differs():
    # the bare drawing has six diametrical pairs instead of three
    assert diametrical_graph(fig2_drawn()).result.m == 6


def test_fig3():
    g = fig3()
    met = metrics(g)
    assert (g.n, g.m, met.rad, met.diam) == (8, 10, 3, 4)
    assert len(FIG3_NAMES) == 8


class TestSpecParsing:
    def test_nested(self):
        spec = parse_spec("join(path(4), cycle(5))")
        assert spec == FamilySpec("join", (FamilySpec("path", (4,)), FamilySpec("cycle", (5,))))
        assert str(spec) == "join(path(4),cycle(5))"

    def test_bare_name(self):
        assert str(parse_spec("fig1")) == "fig1"

    @pytest.mark.parametrize("bad", ["path(", "path(4))", "path(4,", "(4)", "path(x)", "nosuch(3)",
                                     "path(0)", "knn_minus_matching(1)", "cycle(2)", "path(4,5)",
                                     "join(4,5)", "path(path(3))", "path(4)$"])
    def test_errors(self, bad):
        with pytest.raises(BadParameters):
            generate(bad)
