"""Plain-text graph format.

A graph file holds a header line ``p <n> <m>``, then exactly m edge lines
``e <u> <v>`` with 1-based endpoints, optionally interleaved with weight
lines ``w <v> <weight>`` (default weight 1). Blank lines and lines starting
with ``#`` are ignored.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph, WeightedGraph


class ParseError(ValueError):
    pass


def _parse_weight(tok: str, lineno: int):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: cannot parse weight {tok!r}") from None


def parse_graph(text: str) -> WeightedGraph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: list = []
    weighted: set[int] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        tag = toks[0]
        if tag == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                n, m = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError(f"line {lineno}: header needs integers") from None
            if n < 1 or m < 0:
                raise ParseError(f"line {lineno}: need n >= 1 and m >= 0")
            weights = [1] * n
        elif tag == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: edge must be 'e <u> <v>'")
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError(f"line {lineno}: edge needs integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        elif tag == "w":
            if n is None:
                raise ParseError(f"line {lineno}: weight before header")
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: weight must be 'w <v> <weight>'")
            try:
                v = int(toks[1])
            except ValueError:
                raise ParseError(f"line {lineno}: weight needs a vertex") from None
            if not (1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            if v in weighted:
                raise ParseError(f"line {lineno}: duplicate weight for vertex {v}")
            weighted.add(v)
            weights[v - 1] = _parse_weight(toks[2], lineno)
        else:
            raise ParseError(f"line {lineno}: unknown record {tag!r}")

    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges but found {len(edges)}")
    return WeightedGraph(Graph(n, edges), tuple(weights))


def format_graph(g: Graph, weights=None) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    if weights is not None:
        for v, w in enumerate(weights):
            if w != 1:
                if isinstance(w, Fraction):
                    w = float(w)
                lines.append(f"w {v + 1} {w}")
    return "\n".join(lines) + "\n"
