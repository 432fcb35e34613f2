import pytest
from hypothesis import given, settings

from packrho.coloring import (
    PackingColoring,
    from_layers,
    greedy_color,
    greedy_steps,
    to_layers,
    verify_greedy_packing_coloring,
    verify_packing_coloring,
)
from packrho.errors import NotAPackingColoring, UncoloredVertex
from packrho.families import FIG1_NAMES, complete, cycle, fig1, path
from packrho.graph import Graph, disjoint_union, independence_numbers

from conftest import graphs_with_order

FIG1_ORDER = [FIG1_NAMES.index(x) for x in "bacdef"]


def brute_greedy(g, order):
    """Direct restatement: smallest color with no same-colored vertex in range."""
    d = g.distances
    colors = [0] * g.n
    for v in order:
        c = 1
        while any(colors[u] == c and d[u][v] <= c for u in range(g.n)):
            c += 1
        colors[v] = c
    return tuple(colors)


class TestGreedy:
    def test_fig1(self):
        assert greedy_color(fig1(), FIG1_ORDER).colors == (2, 1, 3, 4, 1, 2)

    def test_path_identity(self):
        assert greedy_color(path(4), range(4)).colors == (1, 2, 1, 3)

    def test_complete_graph_gets_all_colors(self):
        assert greedy_color(complete(5), range(5)).k == 5

    def test_isolated_vertices(self):
        assert greedy_color(Graph.empty(3), [2, 0, 1]).colors == (1, 1, 1)

    def test_empty_graph(self):
        assert greedy_color(Graph.empty(0), []).colors == ()

    def test_bad_order(self):
        with pytest.raises(ValueError):
            greedy_color(path(3), [0, 0, 1])

    @settings(max_examples=200)
    @given(graphs_with_order(max_n=10))
    def test_matches_brute_force(self, go):
        g, order = go
        assert greedy_color(g, order).colors == brute_greedy(g, order)

    @settings(max_examples=100)
    @given(graphs_with_order(max_n=9))
    def test_matches_stepwise_reference(self, go):
        g, order = go
        steps = list(greedy_steps(g, order))
        colors = [0] * g.n
        for s in steps:
            colors[s.vertex] = s.color
        assert tuple(colors) == greedy_color(g, order).colors

    @settings(max_examples=100)
    @given(graphs_with_order(max_n=10))
    def test_output_is_greedy_and_bounded(self, go):
        g, order = go
        c = greedy_color(g, order)
        assert verify_greedy_packing_coloring(g, c) is None
        assert c.k <= g.n - independence_numbers(g).i + 1

    def test_disconnected_components_independent(self):
        g = disjoint_union(path(4), cycle(5))
        c = greedy_color(g, range(g.n))
        assert c.colors[:4] == greedy_color(path(4), range(4)).colors
        assert c.colors[4:] == greedy_color(cycle(5), range(5)).colors


class TestSteps:
    def test_table_shape(self):
        steps = list(greedy_steps(path(3), [1, 0, 2]))
        first = steps[0]
        assert first.vertex == 1 and first.color == 1
        assert first.availability[1] is None
        assert first.availability[0] == (0, 1, 1)
        assert steps[-1].availability == (None, None, None)


class TestVerify:
    def test_valid(self):
        assert verify_packing_coloring(path(4), [1, 2, 1, 3]) is None

    def test_first_violation_lexicographic(self):
        v = verify_packing_coloring(path(5), [2, 1, 2, 1, 2])
        assert tuple(v) == (0, 2, 2)

    def test_uncolored(self):
        with pytest.raises(UncoloredVertex):
            verify_packing_coloring(path(3), [1, 0, 1])
        with pytest.raises(UncoloredVertex):
            verify_packing_coloring(path(3), [1, 2])

    def test_greedy_witness(self):
        # color 3 at vertex 0 sees no color 2 within distance 2
        w = verify_greedy_packing_coloring(path(4), [3, 1, 4, 1])
        assert tuple(w) == (0, 2)

    def test_greedy_requires_packing(self):
        with pytest.raises(NotAPackingColoring):
            verify_greedy_packing_coloring(path(3), [1, 1, 2])

    def test_fig1_is_greedy(self):
        assert verify_greedy_packing_coloring(fig1(), (2, 1, 3, 4, 1, 2)) is None


class TestLayers:
    def test_round_trip(self):
        c = PackingColoring((2, 1, 3, 4, 1, 2))
        lp = to_layers(c)
        assert lp.k == 4 and lp.n == 6
        assert lp.layers[0] == frozenset({1, 4})
        assert from_layers(lp) == c

    def test_zero_color_rejected(self):
        with pytest.raises(UncoloredVertex):
            PackingColoring((1, 0))
