"""Chordal graph routines: recognition, coloring, cliques, stable sets.

All four run in low polynomial time off a perfect elimination order. The
order is produced by maximum cardinality search and then verified, so
non-chordal inputs are rejected rather than silently mishandled.
"""

from __future__ import annotations

from typing import Optional

from .graphs import Coloring, Graph, WeightedGraph, iter_bits, mask_of


class NotChordalError(ValueError):
    """Raised when a chordal-only routine receives a non-chordal graph."""


def simplicial_order(g: Graph) -> Optional[tuple[int, ...]]:
    """A perfect elimination order (first position eliminated first), or
    None when g is not chordal."""
    n = g.n
    if n == 0:
        return ()
    weight = [0] * n
    numbered = 0
    visit: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not numbered >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        visit.append(best)
        numbered |= 1 << best
        for u in iter_bits(g.adj[best] & ~numbered):
            weight[u] += 1
    order = tuple(reversed(visit))
    return order if is_simplicial_order(g, order) else None


def is_simplicial_order(g: Graph, order) -> bool:
    """Whether each vertex's later neighbors form a clique. Checks only the
    earliest later neighbor's coverage, which suffices for a full order."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    later = g.full_mask()
    for v in order:
        later &= ~(1 << v)
        nbrs = g.adj[v] & later
        if nbrs == 0:
            continue
        w = min(iter_bits(nbrs), key=lambda u: pos[u])
        if nbrs & ~(1 << w) & ~g.adj[w]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return simplicial_order(g) is not None


def _require_order(g: Graph, order=None) -> tuple[int, ...]:
    if order is None:
        order = simplicial_order(g)
        if order is None:
            raise NotChordalError("graph is not chordal")
        return order
    order = tuple(order)
    if not is_simplicial_order(g, order):
        raise NotChordalError("invalid elimination order")
    return order


def chordal_color(g: Graph, order=None) -> Coloring:
    """Optimal coloring: greedy in reverse elimination order uses exactly as
    many colors as the largest clique. The order is computed when omitted
    and verified when supplied."""
    order = _require_order(g, order)
    colors = [0] * g.n
    for v in reversed(order):
        used = 0
        for u in iter_bits(g.adj[v]):
            if colors[u]:
                used |= 1 << (colors[u] - 1)
        c = 1
        while used >> (c - 1) & 1:
            c += 1
        colors[v] = c
    count = max(colors, default=0)
    return Coloring(tuple(colors), count)


def chordal_mwc(wg: WeightedGraph, order=None) -> tuple:
    """Maximum weight clique as (weight, vertices). The empty clique counts,
    so the value is never negative. Nonpositive-weight vertices are dropped;
    on what remains every candidate is a vertex plus all its later neighbors
    in an elimination order."""
    g, w = wg.graph, wg.weights
    order = _require_order(g, order)
    live = mask_of(v for v in range(g.n) if w[v] > 0)
    best = 0
    best_set: frozenset[int] = frozenset()
    later = g.full_mask()
    for v in order:
        later &= ~(1 << v)
        if not live >> v & 1:
            continue
        cand = g.adj[v] & later & live
        value = w[v] + sum(w[u] for u in iter_bits(cand))
        if value > best:
            best = value
            best_set = frozenset([v]) | frozenset(iter_bits(cand))
    return best, best_set


def chordal_mwss(wg: WeightedGraph, order=None) -> tuple:
    """Maximum weight stable set as (weight, vertices).

    Forward pass over an elimination order charges each vertex's residual
    weight against its later closed neighborhood and marks the vertices that
    still carried positive residual; a backward greedy over the marked
    vertices is then optimal. Nonpositive-weight vertices never help and are
    ignored up front.
    """
    g, w = wg.graph, wg.weights
    order = _require_order(g, order)
    residual = list(w)
    marked = []
    later = g.full_mask()
    for v in order:
        later &= ~(1 << v)
        if residual[v] <= 0:
            continue
        charge = residual[v]
        marked.append(v)
        residual[v] = 0
        for u in iter_bits(g.adj[v] & later):
            residual[u] -= charge
    chosen = 0
    for v in reversed(marked):
        if not g.adj[v] & chosen:
            chosen |= 1 << v
    value = sum(w[v] for v in iter_bits(chosen))
    return value, frozenset(iter_bits(chosen))
