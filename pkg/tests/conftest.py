"""Shared strategies and exhaustive reference solvers for the suite."""

import random

from hypothesis import settings
from hypothesis import strategies as st

from tcfree.graphs import (
    Coloring,
    Graph,
    WeightedGraph,
    bits_list,
    is_clique,
    is_stable_set,
)
from tcfree.oracles import brute_chi

settings.register_profile("suite", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("suite")


def rand_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


@st.composite
def weighted_graphs(draw, min_n: int = 1, max_n: int = 8, low: int = -4, high: int = 9):
    g = draw(graphs(min_n, max_n))
    ws = draw(st.lists(st.integers(low, high), min_size=g.n, max_size=g.n))
    return WeightedGraph(g, tuple(ws))


def brute_mwc_set(wg: WeightedGraph) -> tuple:
    """Exhaustive maximum weight clique with a witness set."""
    g, w = wg.graph, wg.weights
    best, best_set = 0, frozenset()
    for mask in range(1 << g.n):
        vs = bits_list(mask)
        if not is_clique(g, vs):
            continue
        value = sum(w[v] for v in vs)
        if value > best:
            best, best_set = value, frozenset(vs)
    return best, best_set


def brute_mwss_set(wg: WeightedGraph) -> tuple:
    """Exhaustive maximum weight stable set with a witness set."""
    g, w = wg.graph, wg.weights
    best, best_set = 0, frozenset()
    for mask in range(1 << g.n):
        vs = bits_list(mask)
        if not is_stable_set(g, vs):
            continue
        value = sum(w[v] for v in vs)
        if value > best:
            best, best_set = value, frozenset(vs)
    return best, best_set


def exact_coloring(g: Graph) -> Coloring:
    """Optimal proper coloring by backtracking on top of the brute
    chromatic number."""
    k = brute_chi(g)
    colors = [0] * g.n

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        cap = min(k, max(colors[:v], default=0) + 1)
        for c in range(1, cap + 1):
            if all(colors[u] != c for u in range(v) if g.has_edge(u, v)):
                colors[v] = c
                if rec(v + 1):
                    return True
                colors[v] = 0
        return False

    assert rec(0)
    return Coloring(tuple(colors), len(set(colors)))
