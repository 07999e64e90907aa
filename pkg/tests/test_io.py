"""Text format parsing and serialization."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import weighted_graphs
from tcfree.io import ParseError, format_graph, parse_graph


def test_parse_minimal():
    wg = parse_graph("p 3 2\ne 1 2\ne 2 3\n")
    assert wg.graph.n == 3
    assert list(wg.graph.edges()) == [(0, 1), (1, 2)]
    assert wg.weights == (1, 1, 1)


def test_parse_weights_and_comments():
    text = "# comment\np 3 1\n\ne 1 3\nw 2 5\nw 3 2.5\n"
    wg = parse_graph(text)
    assert wg.weights == (1, 5, 2.5)


@given(weighted_graphs(low=1, high=9))
def test_round_trip(wg):
    text = format_graph(wg.graph, wg.weights)
    back = parse_graph(text)
    assert back.graph == wg.graph
    assert back.weights == wg.weights


def test_format_skips_unit_weights():
    text = format_graph(parse_graph("p 2 1\ne 1 2\nw 1 3\n").graph, (3, 1))
    assert "w 1 3" in text
    assert "w 2" not in text


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("p 2 0\np 2 0\n", "duplicate header"),
        ("e 1 2\n", "edge before header"),
        ("p 2 1\ne 1 3\n", "out of range"),
        ("p 2 1\ne 1 1\n", "self-loop"),
        ("p 2 2\ne 1 2\ne 2 1\n", "duplicate edge"),
        ("p 2 0\nw 1 2\nw 1 3\n", "duplicate weight"),
        ("p 2 0\nq 1\n", "unknown record"),
        ("p 2 2\ne 1 2\n", "announced 2 edges"),
        ("p 0 0\n", "need n >= 1"),
        ("p 2 0\nw 3 1\n", "out of range"),
        ("w 1 2\n", "weight before header"),
        ("p 2 1\ne 1\n", "edge must be"),
        ("p 2 0\nw 1 abc\n", "cannot parse weight"),
        ("", "missing"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_graph(text)
