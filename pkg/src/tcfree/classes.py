"""Recognition and optimization for four hereditary classes defined by
excluded Truemper configurations.

The classes, from largest to smallest surface of exclusions:

  gut     no thetas, pyramids, prisms, or proper wheels
  gu      gut plus no twin wheels
  gt      gut plus no universal wheels
  gutcap  gut plus no caps

Each class obeys the same structure theorem shape: a member either lies in
a small basic family or admits a clique cutset. Recognition therefore tests
every decomposition-tree leaf against the class's basic family, and the
optimization routines plug basic-family solvers into the generic
clique-cutset frameworks. Coloring graphs in gt and every optimization
problem on gut (beyond what the oracle module can brute-force) are out of
scope: maximum clique is NP-hard there and the rest are open.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chordal import (
    NotChordalError,
    chordal_color,
    chordal_mwc,
    chordal_mwss,
    is_chordal,
    simplicial_order,
)
from .decomposition import build_tree, solve_coloring, solve_mwc, solve_mwss
from .detectors import (
    C6BAR,
    CAP,
    HOLE,
    K23,
    W54,
    Certificate,
    canonical_cycle,
    check_certificate,
    find_cap,
    find_long_hole,
    find_small_obstruction,
    hole_expansion,
)
from .graphs import (
    Coloring,
    Graph,
    WeightedGraph,
    alpha_at_most_2,
    anticomponents,
    complement,
    induced_subgraph,
    iter_bits,
    mask_of,
    masked_components,
    true_twin_partition,
)
from .rings import (
    _cycle_mwss,
    _single_cycle_order,
    hyperhole_color,
    hyperhole_mwc,
    hyperhole_mwss,
    recognize_hyperhole,
    recognize_ring,
)

CLASS_IDS = ("gut", "gu", "gt", "gutcap")

# Anticomponent labels reported by recognize_bu_h.
BUH_K1 = "K1"
BUH_K2BAR = "K2bar"
BUH_ODD_HOLE = "odd-long-hole"
BUH_EVEN_HOLE = "even-long-hole"
BUH_PATHS = "path-union"


class NotInClassError(ValueError):
    """A class solver discovered that its input lies outside the class."""

    def __init__(self, message: str, certificate: Optional[Certificate] = None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class Recognition:
    """Membership verdict. On rejection, either a concrete small obstruction
    or the decomposition leaf (and when applicable its anticomponent) that
    failed the basic-family test."""

    member: bool
    certificate: Optional[Certificate] = None
    reason: str = ""
    leaf: Optional[frozenset[int]] = None
    anticomponent: Optional[frozenset[int]] = None

    def __bool__(self) -> bool:
        return self.member

    def to_json_dict(self) -> dict:
        out: dict = {"member": self.member}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json_dict()
        if self.reason:
            out["reason"] = self.reason
        if self.leaf is not None:
            out["leaf"] = sorted(self.leaf)
        if self.anticomponent is not None:
            out["anticomponent"] = sorted(self.anticomponent)
        return out


def _leaf_subgraphs(g: Graph):
    tree = build_tree(g)
    for node in tree.leaves():
        sub, verts = induced_subgraph(g, node.vertices)
        yield sub, verts


# ---------------------------------------------------------------------------
# gut


def recognize_gut(g: Graph) -> Recognition:
    """The class forbids exactly the Truemper configurations that are
    anticonnected and contain a long hole, plus three small graphs. So:
    reject on a small obstruction, then demand that each anticomponent of
    each decomposition leaf is a long ring, or long-hole-free, or has no
    three pairwise nonadjacent vertices."""
    for kind in (K23, C6BAR, W54):
        cert = find_small_obstruction(g, kind)
        if cert is not None:
            return Recognition(False, certificate=cert, reason=f"contains {kind}")
    for sub, verts in _leaf_subgraphs(g):
        for ac in anticomponents(sub):
            h, hverts = induced_subgraph(sub, ac)
            ring = recognize_ring(h)
            if ring is not None and ring.k >= 5:
                continue
            if find_long_hole(h) is None:
                continue
            if alpha_at_most_2(h):
                continue
            return Recognition(
                False,
                reason="leaf anticomponent is not a long ring, contains a long hole, and has a stable set of size three",
                leaf=frozenset(verts),
                anticomponent=frozenset(verts[i] for i in ac),
            )
    return Recognition(True)


# ---------------------------------------------------------------------------
# gu


def _path_forest(g: Graph) -> bool:
    if any(g.degree(v) > 2 for v in range(g.n)):
        return False
    return g.m == g.n - len(masked_components(g, g.full_mask()))


def _hole_or_paths_label(h: Graph) -> Optional[str]:
    order = _single_cycle_order(h)
    if order is not None and len(order) >= 5:
        return BUH_ODD_HOLE if len(order) % 2 else BUH_EVEN_HOLE
    if h.n >= 3 and _path_forest(h):
        return BUH_PATHS
    return None


def recognize_bu_h(g: Graph) -> Optional[list[tuple[frozenset[int], str]]]:
    """Anticomponent structure of a gu decomposition leaf, or None.

    Members have every nontrivial anticomponent isomorphic to two
    nonadjacent vertices, or a single nontrivial anticomponent that is a
    long hole or a disjoint union of paths on at least three vertices.

    When every degree is at least n - 2 the anticomponents are single
    vertices and nonadjacent pairs, settled directly. Otherwise the
    vertices of degree n - 1 are the trivial anticomponents and the rest
    must together form the one nontrivial anticomponent: any vertex of
    degree at most n - 3 and all its nonneighbors land there, so that side
    has at least three vertices, and it is anticonnected whenever it is a
    long hole or a path union (the only exception, a path on three
    vertices, would put its middle vertex at degree n - 1).
    """
    n = g.n
    if all(g.degree(v) >= n - 2 for v in range(n)):
        return [
            (ac, BUH_K1 if len(ac) == 1 else BUH_K2BAR)
            for ac in anticomponents(g)
        ]
    rest = [v for v in range(n) if g.degree(v) < n - 1]
    sub, _ = induced_subgraph(g, rest)
    label = _hole_or_paths_label(sub)
    if label is None:
        return None
    pieces = [(frozenset([u]), BUH_K1) for u in range(n) if g.degree(u) == n - 1]
    pieces.append((frozenset(rest), label))
    pieces.sort(key=lambda piece: min(piece[0]))
    return pieces


def recognize_gu(g: Graph) -> Recognition:
    for sub, verts in _leaf_subgraphs(g):
        if recognize_bu_h(sub) is None:
            return Recognition(
                False,
                reason="leaf is not an expansion of a long hole or a path union by universal and pairwise-nonadjacent vertices",
                leaf=frozenset(verts),
            )
    return Recognition(True)


def _buh_pieces(g: Graph) -> list[tuple[frozenset[int], str]]:
    pieces = recognize_bu_h(g)
    if pieces is None:
        raise NotInClassError("decomposition leaf fails the gu basic-family test")
    return pieces


def _buh_cycle(g: Graph, vs: frozenset[int]) -> list[int]:
    """Hole anticomponent's cycle order in original labels."""
    h, hverts = induced_subgraph(g, vs)
    order = _single_cycle_order(h)
    return [hverts[i] for i in order]


def _buh_color(g: Graph) -> Coloring:
    """Color each anticomponent with fresh colors; anticomponents are
    pairwise complete so the palettes cannot be shared."""
    colors = [0] * g.n
    offset = 0
    for vs, label in _buh_pieces(g):
        if label in (BUH_K1, BUH_K2BAR):
            for v in vs:
                colors[v] = offset + 1
            used = 1
        elif label in (BUH_ODD_HOLE, BUH_EVEN_HOLE):
            cycle = _buh_cycle(g, vs)
            for i, v in enumerate(cycle):
                colors[v] = offset + 1 + (i % 2)
            used = 2
            if len(cycle) % 2:
                colors[cycle[-1]] = offset + 3
                used = 3
        else:
            h, hverts = induced_subgraph(g, vs)
            col = chordal_color(h)
            for i in range(h.n):
                colors[hverts[i]] = offset + col.colors[i]
            used = col.count
        offset += used
    return Coloring(tuple(colors), offset)


def _buh_mwc(wg: WeightedGraph) -> tuple:
    """Anticomponents are pairwise complete, so the best clique is the
    union of one best clique per anticomponent."""
    g, w = wg.graph, wg.weights
    total = 0
    chosen: set[int] = set()
    for vs, label in _buh_pieces(g):
        if label == BUH_K1:
            (v,) = vs
            if w[v] > 0:
                total += w[v]
                chosen.add(v)
        elif label == BUH_K2BAR:
            v = max(vs, key=lambda u: (w[u], -u))
            if w[v] > 0:
                total += w[v]
                chosen.add(v)
        elif label in (BUH_ODD_HOLE, BUH_EVEN_HOLE):
            cycle = _buh_cycle(g, vs)
            k = len(cycle)
            best = 0
            best_set: frozenset[int] = frozenset()
            for i in range(k):
                pair = [v for v in (cycle[i], cycle[(i + 1) % k]) if w[v] > 0]
                value = sum(w[v] for v in pair)
                if value > best:
                    best, best_set = value, frozenset(pair)
            total += best
            chosen |= best_set
        else:
            h, hverts = induced_subgraph(g, vs)
            value, sub_set = chordal_mwc(WeightedGraph(h, tuple(w[u] for u in hverts)))
            total += value
            chosen |= {hverts[i] for i in sub_set}
    return total, frozenset(chosen)


def _buh_mwss(wg: WeightedGraph) -> tuple:
    """A stable set cannot cross anticomponents, so take the best one."""
    g, w = wg.graph, wg.weights
    best = 0
    best_set: frozenset[int] = frozenset()
    for vs, label in _buh_pieces(g):
        if label == BUH_K1:
            (v,) = vs
            value, sset = (w[v], frozenset([v])) if w[v] > 0 else (0, frozenset())
        elif label == BUH_K2BAR:
            sset = frozenset(v for v in vs if w[v] > 0)
            value = sum(w[v] for v in sset)
        elif label in (BUH_ODD_HOLE, BUH_EVEN_HOLE):
            cycle = _buh_cycle(g, vs)
            value, idxs = _cycle_mwss([w[v] for v in cycle])
            sset = frozenset(cycle[i] for i in idxs)
        else:
            h, hverts = induced_subgraph(g, vs)
            value, sub_set = chordal_mwss(WeightedGraph(h, tuple(w[u] for u in hverts)))
            sset = frozenset(hverts[i] for i in sub_set)
        if value > best:
            best, best_set = value, sset
    return best, best_set


def color_gu(g: Graph) -> Coloring:
    return solve_coloring(g, _buh_color)


def mwc_mwss_gu(wg: WeightedGraph) -> tuple:
    """((clique weight, clique), (stable weight, stable set))."""
    return solve_mwc(wg, _buh_mwc), solve_mwss(wg, _buh_mwss)


# ---------------------------------------------------------------------------
# gt


def _bt_leaf_ok(sub: Graph) -> bool:
    """A gt leaf contracted by true twins must be a single vertex, a ring,
    or a 7-antihole; complete graphs contract to a vertex and
    7-hyperantiholes to the 7-antihole."""
    _, quotient = true_twin_partition(sub)
    if quotient.n == 1:
        return True
    if recognize_ring(quotient) is not None:
        return True
    if quotient.n == 7:
        co_order = _single_cycle_order(complement(quotient))
        if co_order is not None:
            return True
    return False


def recognize_gt(g: Graph) -> Recognition:
    for sub, verts in _leaf_subgraphs(g):
        if not _bt_leaf_ok(sub):
            return Recognition(
                False,
                reason="leaf true-twin quotient is not a ring, a single vertex, or a 7-antihole",
                leaf=frozenset(verts),
            )
    return Recognition(True)


def mwc_gt(wg: WeightedGraph) -> tuple:
    """Maximum weight clique for gt, without any decomposition: the class
    excludes universal wheels, which happens exactly when every closed
    neighborhood is chordal, and every clique lives in the closed
    neighborhood of each of its vertices."""
    g, w = wg.graph, wg.weights
    best = 0
    best_set: frozenset[int] = frozenset()
    for u in range(g.n):
        sub, verts = induced_subgraph(g, iter_bits(g.closed_mask(u)))
        try:
            value, sub_set = chordal_mwc(WeightedGraph(sub, tuple(w[v] for v in verts)))
        except NotChordalError:
            raise NotInClassError(
                "a closed neighborhood contains a hole: universal wheel present"
            ) from None
        if value > best:
            best, best_set = value, frozenset(verts[i] for i in sub_set)
    return best, best_set


def _bt_mwss_leaf(wg: WeightedGraph) -> tuple:
    """Leaves and their induced subgraphs keep every non-neighborhood
    chordal (rings lose a whole part, complete graphs and 7-hyperantiholes
    lose all but a clique or two). Each stable set containing u avoids
    N(u), so the best chordal answer over all u is the optimum. All n
    candidates are scanned; the maximum needs every one."""
    g, w = wg.graph, wg.weights
    best = 0
    best_set: frozenset[int] = frozenset()
    for u in range(g.n):
        sub, verts = induced_subgraph(g, iter_bits(g.full_mask() & ~g.adj[u]))
        order = simplicial_order(sub)
        if order is None:
            raise NotInClassError(
                "deleting a vertex neighborhood leaves a hole"
            )
        value, sub_set = chordal_mwss(WeightedGraph(sub, tuple(w[v] for v in verts)), order)
        if value > best:
            best, best_set = value, frozenset(verts[i] for i in sub_set)
    return best, best_set


def mwss_gt(wg: WeightedGraph) -> tuple:
    return solve_mwss(wg, _bt_mwss_leaf)


# ---------------------------------------------------------------------------
# gutcap


def recognize_gutcap(g: Graph) -> Recognition:
    cert = find_small_obstruction(g, K23)
    if cert is not None:
        return Recognition(False, certificate=cert, reason=f"contains {K23}")
    cert = find_cap(g)
    if cert is not None:
        return Recognition(False, certificate=cert, reason="contains a cap")
    for sub, verts in _leaf_subgraphs(g):
        for ac in anticomponents(sub):
            h, _ = induced_subgraph(sub, ac)
            if is_chordal(h):
                continue
            parts = recognize_hyperhole(h)
            if parts is not None and len(parts) >= 5:
                continue
            return Recognition(
                False,
                reason="leaf anticomponent is neither chordal nor a long hyperhole",
                leaf=frozenset(verts),
                anticomponent=frozenset(verts[i] for i in ac),
            )
    return Recognition(True)


def _bch_pieces(g: Graph):
    """Anticomponents tagged for dispatch: (subgraph, vertex map, parts)
    with parts None for the chordal ones. Raises when some anticomponent is
    neither chordal nor a hyperhole."""
    out = []
    for ac in anticomponents(g):
        h, hverts = induced_subgraph(g, ac)
        if is_chordal(h):
            out.append((h, hverts, None))
            continue
        parts = recognize_hyperhole(h)
        if parts is None:
            raise NotInClassError(
                "leaf anticomponent is neither chordal nor a hyperhole"
            )
        out.append((h, hverts, parts))
    return out


def _bch_color(g: Graph) -> Coloring:
    colors = [0] * g.n
    offset = 0
    for h, hverts, parts in _bch_pieces(g):
        col = chordal_color(h) if parts is None else hyperhole_color(h, parts)
        for i in range(h.n):
            colors[hverts[i]] = offset + col.colors[i]
        offset += col.count
    return Coloring(tuple(colors), offset)


def _bch_mwc(wg: WeightedGraph) -> tuple:
    g, w = wg.graph, wg.weights
    total = 0
    chosen: set[int] = set()
    for h, hverts, parts in _bch_pieces(g):
        hw = WeightedGraph(h, tuple(w[v] for v in hverts))
        value, sub_set = chordal_mwc(hw) if parts is None else hyperhole_mwc(hw, parts)
        total += value
        chosen |= {hverts[i] for i in sub_set}
    return total, frozenset(chosen)


def _bch_mwss(wg: WeightedGraph) -> tuple:
    g, w = wg.graph, wg.weights
    best = 0
    best_set: frozenset[int] = frozenset()
    for h, hverts, parts in _bch_pieces(g):
        hw = WeightedGraph(h, tuple(w[v] for v in hverts))
        value, sub_set = chordal_mwss(hw) if parts is None else hyperhole_mwss(hw, parts)
        if value > best:
            best, best_set = value, frozenset(hverts[i] for i in sub_set)
    return best, best_set


def color_gutcap(g: Graph) -> Coloring:
    return solve_coloring(g, _bch_color)


def mwc_mwss_gutcap(wg: WeightedGraph) -> tuple:
    """((clique weight, clique), (stable weight, stable set))."""
    return solve_mwc(wg, _bch_mwc), solve_mwss(wg, _bch_mwss)


# ---------------------------------------------------------------------------
# double star cutset


def double_star_cutset_from_cap(g: Graph, cap: Certificate) -> frozenset[int]:
    """Cutset S with S inside N[x] u N[y] for the cap's attachment edge xy,
    separating the cap vertex from the rest of its hole.

    With the hole written x, y, x_1, .., x_h, the set S collects x, y, the
    outside vertices attaching to the hole exactly like x, y, x_1, or x_h
    do, and the vertices complete to the hole. Every piece is inside
    N[x] u N[y] by construction; the separation property holds whenever the
    graph avoids thetas, pyramids, prisms, and proper wheels, and is
    verified here, so a failure proves the graph lies outside gut.
    """
    if cap.kind != CAP or not check_certificate(g, cap):
        raise ValueError("valid cap certificate required")
    rim = list(cap.vertices)
    c = cap.center
    k = len(rim)
    attach = [i for i, v in enumerate(rim) if g.has_edge(c, v)]
    i, j = attach
    p = i if (i + 1) % k == j else j
    x, y = rim[p], rim[(p + 1) % k]
    interior = [rim[(p + 1 + t) % k] for t in range(1, k - 1)]

    expansion = hole_expansion(g, Certificate(HOLE, canonical_cycle(rim)))
    twin_at = {expansion.hole[t]: expansion.twin_sets[t] for t in range(k)}
    cut = {x, y} | set(expansion.universal)
    for v in (x, y, interior[0], interior[-1]):
        cut |= set(twin_at[v]) - {v}

    star = g.closed_mask(x) | g.closed_mask(y)
    if mask_of(cut) & ~star:
        raise NotInClassError("cutset escapes the closed neighborhoods of the attachment edge")
    remaining = g.full_mask() & ~mask_of(cut)
    side_c = next(m for m in masked_components(g, remaining) if m >> c & 1)
    if side_c & mask_of(interior):
        raise NotInClassError("cap vertex stays connected to the far rim")
    return frozenset(cut)
