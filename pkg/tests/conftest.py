"""Shared fixtures: named graphs, a hypothesis strategy for small graphs, and
the session-wide random corpus the acceptance suite checks."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from pseudofactor.generators import gnp
from pseudofactor.graph import Graph
from pseudofactor.oracle import min_small_components_exact

# corpus cells: every (n, edge_prob) pair collects PER_CELL graphs with
# minimum degree >= 1, scanning seeds in order for reproducibility
CORPUS_NS = tuple(range(4, 10))
CORPUS_PROBS = (0.3, 0.5, 0.7)
PER_CELL = 28
CORPUS_B_VALUES = (4, 5, 6)
SEED_CAP = 5000


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return Graph.build(n, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, edges)


def brute_force_alpha(g: Graph) -> int:
    """Maximum independent set size by scanning all 2^n subsets."""
    best = 0
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if g.adj_bits[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            best = max(best, mask.bit_count())
    return best


def build_random_corpus() -> list[tuple[str, Graph]]:
    items: list[tuple[str, Graph]] = []
    for n in CORPUS_NS:
        for p in CORPUS_PROBS:
            found = 0
            for seed in range(SEED_CAP):
                g = gnp(n, p, seed)
                if min(len(g.adj[v]) for v in range(n)) >= 1:
                    items.append((f"gnp n={n} p={p} seed={seed}", g))
                    found += 1
                    if found == PER_CELL:
                        break
            assert found == PER_CELL, f"seed cap too small for cell n={n} p={p}"
    return items


@pytest.fixture(scope="session")
def random_corpus() -> list[tuple[str, Graph]]:
    return build_random_corpus()


@pytest.fixture(scope="session")
def corpus_oracle(random_corpus):
    """Exact optimum for every corpus instance at every corpus b."""
    results = {}
    for instance, g in random_corpus:
        for b in CORPUS_B_VALUES:
            results[(instance, b)] = min_small_components_exact(g, b)
    return results


@pytest.fixture(scope="session")
def midsize_corpus() -> list[tuple[str, Graph]]:
    """A few n in 10..12 instances for the checks that scale past the DP."""
    items = []
    for n, p in ((10, 0.4), (11, 0.35), (12, 0.3)):
        for seed in (1, 2, 3):
            items.append((f"gnp n={n} p={p} seed={seed}", gnp(n, p, seed)))
    return items
