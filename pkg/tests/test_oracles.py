"""Brute-force reference oracles: these must be trustworthy on their own,
so they get direct tests on hand-checkable graphs."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from tcfree.detectors import (
    CAP,
    PRISM,
    PROPER_WHEEL,
    PYRAMID,
    THETA,
    TWIN_WHEEL,
    UNIVERSAL_WHEEL,
    check_certificate,
)
from tcfree.generators import complete_graph, cycle_graph, join_graphs
from tcfree.graphs import Graph, WeightedGraph
from tcfree.oracles import (
    SizeLimitError,
    brute_alpha_w,
    brute_chi,
    brute_cycle_weighted_chromatic,
    brute_is_ring,
    brute_omega_w,
    enumerate_holes,
    is_chordal_brute,
    iter_all_graphs,
    truemper_present,
    truemper_scan,
)


def wheel(k: int, hub_neighbors) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k, v) for v in hub_neighbors]
    return Graph(k + 1, edges)


def test_iter_all_graphs_counts():
    assert len(list(iter_all_graphs(3))) == 8
    seen = set(g.adj for g in iter_all_graphs(4))
    assert len(seen) == 64


def test_enumerate_holes():
    assert list(enumerate_holes(complete_graph(5))) == []
    c6_holes = list(enumerate_holes(cycle_graph(6)))
    assert len(c6_holes) == 1 and len(c6_holes[0]) == 6
    # 4-holes can be filtered out by min_len
    assert list(enumerate_holes(cycle_graph(4), min_len=5)) == []
    for rim in enumerate_holes(cycle_graph(9), min_len=4):
        assert len(rim) == 9


@given(graphs(max_n=7))
def test_is_chordal_brute_no_holes(g):
    assert is_chordal_brute(g) == (next(enumerate_holes(g), None) is None)


def test_truemper_scan_on_known_configurations():
    k23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert THETA in truemper_present(k23)

    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert PRISM in truemper_present(prism)

    pyramid = Graph(
        6,
        [(3, 4), (4, 5), (3, 5), (0, 3), (0, 1), (1, 4), (0, 2), (2, 5)],
    )
    assert PYRAMID in truemper_present(pyramid)

    assert UNIVERSAL_WHEEL in truemper_present(wheel(5, range(5)))
    assert TWIN_WHEEL in truemper_present(wheel(5, [0, 1, 2]))
    assert PROPER_WHEEL in truemper_present(wheel(6, [0, 1, 3]))
    assert CAP in truemper_present(wheel(6, [0, 1]))

    # a plain long hole carries none of the configurations
    assert truemper_present(cycle_graph(7)) == frozenset({"Hole", "LongHole"})


def test_truemper_scan_certificates_check_out():
    g = wheel(6, [0, 1, 3])
    for kind, cert in truemper_scan(g).items():
        assert cert.kind == kind
        assert check_certificate(g, cert)


def test_brute_chi_known_values():
    assert brute_chi(cycle_graph(5)) == 3
    assert brute_chi(cycle_graph(6)) == 2
    assert brute_chi(complete_graph(5)) == 5
    assert brute_chi(join_graphs(cycle_graph(7), complete_graph(1))) == 4
    assert brute_chi(join_graphs(cycle_graph(5), cycle_graph(5))) == 6


def test_brute_weight_solvers():
    g = cycle_graph(5)
    wg = WeightedGraph(g, (3, 1, 4, 1, 5))
    assert brute_omega_w(wg) == 8  # vertices 4 and 0
    assert brute_alpha_w(wg) == 9  # vertices 2 and 4
    negative = WeightedGraph(g, (-1, -2, -3, -4, -5))
    assert brute_omega_w(negative) == 0
    assert brute_alpha_w(negative) == 0


def test_brute_is_ring():
    hyper = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    parts = brute_is_ring(hyper)
    assert parts is not None and len(parts) == 6
    assert brute_is_ring(complete_graph(4)) is None
    assert brute_is_ring(cycle_graph(4)) is not None


def test_brute_cycle_weighted_chromatic():
    assert brute_cycle_weighted_chromatic(5, (1, 1, 1, 1, 1)) == 3
    assert brute_cycle_weighted_chromatic(5, (3, 1, 1, 1, 1)) == 4
    assert brute_cycle_weighted_chromatic(6, (2, 1, 2, 1, 2, 1)) == 3
    assert brute_cycle_weighted_chromatic(4, (3, 2, 1, 2)) == 5


def test_size_limits_guard():
    big = complete_graph(14)
    with pytest.raises(SizeLimitError):
        truemper_scan(big)
    with pytest.raises(SizeLimitError):
        brute_chi(complete_graph(17))
    with pytest.raises(SizeLimitError):
        brute_is_ring(complete_graph(10))
