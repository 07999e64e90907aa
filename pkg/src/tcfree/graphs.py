"""Core graph type and elementary structural queries.

Vertices are dense integers 0..n-1. Adjacency is one Python int bitmask per
vertex, which keeps neighborhood containment tests (the hot path of the
domination, twin, and separator computations) cheap. Graphs are immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Simple undirected graph without loops."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    out = Graph.__new__(Graph)
    out.n = g.n
    out.adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return out


def _graph_from_masks(n: int, adj: Sequence[int]) -> Graph:
    out = Graph.__new__(Graph)
    out.n = n
    out.adj = tuple(adj)
    return out


def masked_components(g: Graph, mask: int) -> list[int]:
    """Connected components of g restricted to the vertices in mask, as masks.

    Ordered by least vertex.
    """
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(m)) for m in masked_components(g, g.full_mask())]


def anticomponents(g: Graph) -> list[frozenset[int]]:
    return components(complement(g))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the map from new index to original vertex."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("induced subgraph of the empty set is not defined")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in iter_bits(g.adj[v]):
            j = pos.get(u)
            if j is not None:
                adj[i] |= 1 << j
    return _graph_from_masks(len(vs), adj), vs


def dominates(g: Graph, u: int, v: int) -> bool:
    """True when N[v] is contained in N[u]."""
    if u == v:
        raise ValueError("domination is defined for distinct vertices")
    return g.closed_mask(v) & ~g.closed_mask(u) == 0


def true_twin_partition(g: Graph) -> tuple[list[frozenset[int]], Graph]:
    """Partition into true twin classes plus the quotient graph.

    Two vertices are true twins when their closed neighborhoods coincide;
    classes are cliques and the quotient has an edge exactly between classes
    that are complete to each other.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_mask(v), []).append(v)
    parts = sorted(groups.values(), key=lambda p: p[0])
    reps = [p[0] for p in parts]
    k = len(parts)
    qadj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(reps[i], reps[j]):
                qadj[i] |= 1 << j
                qadj[j] |= 1 << i
    return [frozenset(p) for p in parts], _graph_from_masks(k, qadj)


def alpha_at_most_2(g: Graph) -> bool:
    """True when g has no stable set of size three (complement triangle-free)."""
    full = g.full_mask()
    for u in range(g.n):
        nonnbr_u = full & ~g.closed_mask(u)
        for v in iter_bits(nonnbr_u >> (u + 1) << (u + 1)):
            if nonnbr_u & ~g.closed_mask(v):
                return False
    return True


def is_clique_mask(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~g.closed_mask(v):
            return False
    return True


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    return is_clique_mask(g, mask_of(vertices))


def is_stable_set(g: Graph, vertices: Iterable[int]) -> bool:
    mask = mask_of(vertices)
    for v in iter_bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def shortest_path(g: Graph, src: int, dst: int, allowed: Optional[int] = None) -> Optional[list[int]]:
    """Shortest src-dst path using only vertices in allowed (a mask).

    src and dst must themselves lie in allowed. BFS explores least vertices
    first so the result is deterministic. Returns None when disconnected.
    """
    if allowed is None:
        allowed = g.full_mask()
    if not (allowed >> src & 1 and allowed >> dst & 1):
        return None
    if src == dst:
        return [src]
    parent = {src: -1}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj[u] & allowed):
            if v in parent:
                continue
            parent[v] = u
            if v == dst:
                path = [v]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(v)
    return None


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ValueError("need exactly one weight per vertex")

    def weight(self, vertices: Iterable[int]):
        return sum((self.weights[v] for v in vertices), 0)


def unit_weights(g: Graph) -> WeightedGraph:
    return WeightedGraph(g, (1,) * g.n)


@dataclass(frozen=True)
class Coloring:
    """Proper coloring; colors are positive integers, count their number."""

    colors: tuple[int, ...]
    count: int

    @staticmethod
    def from_assignment(colors: Sequence[int]) -> "Coloring":
        cs = tuple(colors)
        if any(c < 1 for c in cs):
            raise ValueError("colors must be positive integers")
        return Coloring(cs, len(set(cs)))


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    if coloring.count != len(set(coloring.colors)):
        return False
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            return False
    return True
