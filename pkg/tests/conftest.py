import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from packrho.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_order(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    order = draw(st.permutations(range(g.n)))
    return g, list(order)


@pytest.fixture
def docs_dir():
    return Path(__file__).resolve().parent.parent / "docs"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines.items()):
            terminalreporter.write_line(line)
