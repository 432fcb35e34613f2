"""Seeded randomness.

Every random choice in packrho derives from one explicit integer seed via
numpy's ``SeedSequence``; independent child streams come from
:func:`spawn`, so results never depend on ambient entropy.
"""
from __future__ import annotations

import numpy as np

from .errors import BadParameters
from .graph import Graph


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.Generator(np.random.PCG64(seed))


def spawn(seed: int, count: int) -> list[np.random.Generator]:
    return [make_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def random_graph(n: int, m: int, seed: int | np.random.SeedSequence) -> Graph:
    """Uniform simple graph on ``n`` vertices with exactly ``m`` edges."""
    total = n * (n - 1) // 2
    if n < 0 or not 0 <= m <= total:
        raise BadParameters(f"need 0 <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = make_rng(seed)
    picks = rng.choice(total, size=m, replace=False) if m else np.empty(0, dtype=np.int64)
    rows, cols = np.triu_indices(n, 1)
    return Graph.from_edges(n, zip(rows[picks].tolist(), cols[picks].tolist()))


def random_order(n: int, rng: np.random.Generator) -> list[int]:
    return rng.permutation(n).tolist()
