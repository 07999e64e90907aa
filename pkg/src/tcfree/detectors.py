"""Detection of holes, caps, and the small fixed obstructions.

Certificates name the witness structure explicitly so they can be re-checked
against the graph; every detector returns a certificate that passes
check_certificate. Searches enumerate candidates in a fixed order and
canonicalize rims, so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graphs import Graph, iter_bits, mask_of, shortest_path

HOLE = "Hole"
LONG_HOLE = "LongHole"
THETA = "Theta"
PYRAMID = "Pyramid"
PRISM = "Prism"
UNIVERSAL_WHEEL = "UniversalWheel"
TWIN_WHEEL = "TwinWheel"
PROPER_WHEEL = "ProperWheel"
CAP = "Cap"
K23 = "K23"
C6BAR = "C6Bar"
W54 = "W54"
SEVEN_ANTIHOLE = "SevenAntihole"

THREE_PATH_KINDS = (THETA, PYRAMID, PRISM)
WHEEL_KINDS = (UNIVERSAL_WHEEL, TWIN_WHEEL, PROPER_WHEEL)
ALL_KINDS = (
    HOLE,
    LONG_HOLE,
    THETA,
    PYRAMID,
    PRISM,
    UNIVERSAL_WHEEL,
    TWIN_WHEEL,
    PROPER_WHEEL,
    CAP,
    K23,
    C6BAR,
    W54,
    SEVEN_ANTIHOLE,
)


@dataclass(frozen=True)
class Certificate:
    """Witness for one configuration.

    vertices: rim in cyclic order for holes/wheels/caps, the fixed layout for
    the small obstructions, and the sorted vertex union for the three-path
    configurations. center: wheel hub or cap attachment. paths: the three
    paths of a theta/pyramid/prism, each listed endpoint to endpoint.
    """

    kind: str
    vertices: tuple[int, ...]
    center: Optional[int] = None
    paths: Optional[tuple[tuple[int, ...], ...]] = None

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.center is not None:
            out["center"] = self.center
        if self.paths is not None:
            out["paths"] = [list(p) for p in self.paths]
        return out

    @staticmethod
    def from_json_dict(d: dict) -> "Certificate":
        return Certificate(
            kind=d["kind"],
            vertices=tuple(d["vertices"]),
            center=d.get("center"),
            paths=tuple(tuple(p) for p in d["paths"]) if "paths" in d else None,
        )


def canonical_cycle(order: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Rotate and reflect a cyclic vertex order to start at the minimum
    vertex, continuing toward its smaller neighbor."""
    k = len(order)
    i = min(range(k), key=lambda j: order[j])
    fwd = [order[(i + j) % k] for j in range(k)]
    bwd = [order[(i - j) % k] for j in range(k)]
    return tuple(fwd) if fwd[1] <= bwd[1] else tuple(bwd)


def _check_range(g: Graph, vertices) -> None:
    for v in vertices:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")


def _is_hole_order(g: Graph, verts: tuple[int, ...], min_len: int) -> bool:
    k = len(verts)
    if k < min_len or len(set(verts)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(verts[i], verts[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def _rim_positions(verts: tuple[int, ...], g: Graph, x: int) -> list[int]:
    return [i for i, v in enumerate(verts) if g.has_edge(x, v)]


def _consecutive_cyclic(positions: list[int], k: int) -> bool:
    t = len(positions)
    if t == 0:
        return False
    pos = set(positions)
    for start in positions:
        if all((start + d) % k in pos for d in range(t)):
            return True
    return False


def _edge_set_of_paths(paths, extra_edges) -> set[frozenset[int]]:
    es = set(extra_edges)
    for p in paths:
        for a, b in zip(p, p[1:]):
            es.add(frozenset((a, b)))
    return es


def _induced_edges(g: Graph, vertices) -> set[frozenset[int]]:
    vs = sorted(set(vertices))
    out = set()
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if g.has_edge(u, v):
                out.add(frozenset((u, v)))
    return out


def _check_three_path(g: Graph, cert: Certificate) -> bool:
    if cert.paths is None or len(cert.paths) != 3:
        return False
    paths = cert.paths
    if any(len(p) < 2 for p in paths):
        return False
    starts = [p[0] for p in paths]
    ends = [p[-1] for p in paths]
    union: list[int] = [v for p in paths for v in p]

    if cert.kind == THETA:
        # two branch vertices joined by three internally disjoint paths,
        # every path with at least one internal vertex
        if len(set(starts)) != 1 or len(set(ends)) != 1:
            return False
        a, b = starts[0], ends[0]
        if a == b or g.has_edge(a, b):
            return False
        if any(len(p) < 3 for p in paths):
            return False
        interiors = [p[1:-1] for p in paths]
        expected_count = 2 + sum(len(i) for i in interiors)
        extra: list[frozenset[int]] = []
    elif cert.kind == PYRAMID:
        # apex joined to an intact triangle, at most one unsubdivided path
        if len(set(starts)) != 1:
            return False
        a = starts[0]
        if len(set(ends)) != 3 or a in ends:
            return False
        if not all(g.has_edge(ends[i], ends[j]) for i in range(3) for j in range(i + 1, 3)):
            return False
        if sum(1 for p in paths if len(p) == 2) > 1:
            return False
        interiors = [p[1:-1] for p in paths]
        expected_count = 4 + sum(len(i) for i in interiors)
        extra = [frozenset((ends[i], ends[j])) for i in range(3) for j in range(i + 1, 3)]
    elif cert.kind == PRISM:
        # two intact triangles joined by three disjoint paths
        if len(set(starts)) != 3 or len(set(ends)) != 3:
            return False
        if set(starts) & set(ends):
            return False
        for tri in (starts, ends):
            if not all(g.has_edge(tri[i], tri[j]) for i in range(3) for j in range(i + 1, 3)):
                return False
        interiors = [p[1:-1] for p in paths]
        expected_count = 6 + sum(len(i) for i in interiors)
        extra = [frozenset((t[i], t[j])) for t in (starts, ends) for i in range(3) for j in range(i + 1, 3)]
    else:
        return False

    if len(set(union)) != expected_count:
        return False
    if tuple(sorted(set(union))) != cert.vertices:
        return False
    return _edge_set_of_paths(paths, extra) == _induced_edges(g, union)


def check_certificate(g: Graph, cert: Certificate) -> bool:
    """Re-validate a certificate against the graph. Out-of-range vertices are
    an error; a structural mismatch just returns False."""
    _check_range(g, cert.vertices)
    if cert.center is not None:
        _check_range(g, (cert.center,))
    if cert.paths is not None:
        for p in cert.paths:
            _check_range(g, p)

    kind = cert.kind
    verts = cert.vertices
    if kind == HOLE:
        return _is_hole_order(g, verts, 4)
    if kind == LONG_HOLE:
        return _is_hole_order(g, verts, 5)
    if kind in THREE_PATH_KINDS:
        return _check_three_path(g, cert)
    if kind in WHEEL_KINDS or kind == CAP or kind == W54:
        if cert.center is None or cert.center in verts:
            return False
        if not _is_hole_order(g, verts, 4):
            return False
        k = len(verts)
        pos = _rim_positions(verts, g, cert.center)
        t = len(pos)
        if kind == UNIVERSAL_WHEEL:
            return t == k
        if kind == TWIN_WHEEL:
            return t == 3 and _consecutive_cyclic(pos, k)
        if kind == PROPER_WHEEL:
            if t < 3 or t == k:
                return False
            return not (t == 3 and _consecutive_cyclic(pos, k))
        if kind == CAP:
            return t == 2 and _consecutive_cyclic(pos, k)
        if kind == W54:
            return k == 5 and t == 4
    if kind == K23:
        if len(verts) != 5 or len(set(verts)) != 5:
            return False
        u1, u2, v1, v2, v3 = verts
        if g.has_edge(u1, u2):
            return False
        if any(g.has_edge(a, b) for a, b in ((v1, v2), (v1, v3), (v2, v3))):
            return False
        return all(g.has_edge(u, v) for u in (u1, u2) for v in (v1, v2, v3))
    if kind == C6BAR:
        if len(verts) != 6 or len(set(verts)) != 6:
            return False
        a = verts[:3]
        b = verts[3:]
        for tri in (a, b):
            if not all(g.has_edge(tri[i], tri[j]) for i in range(3) for j in range(i + 1, 3)):
                return False
        return all(g.has_edge(a[i], b[j]) == (i == j) for i in range(3) for j in range(3))
    if kind == SEVEN_ANTIHOLE:
        if len(verts) != 7 or len(set(verts)) != 7:
            return False
        for i in range(7):
            for j in range(i + 1, 7):
                consecutive = j - i == 1 or (i == 0 and j == 6)
                if g.has_edge(verts[i], verts[j]) == consecutive:
                    return False
        return True
    raise ValueError(f"unknown certificate kind {kind!r}")


def find_long_hole(g: Graph) -> Optional[Certificate]:
    """First long hole (length >= 5) in a fixed search order, or None.

    Looks for an induced path a-b-c-d and then an a-d path avoiding the rest
    of N[b] and N[c]; the shortest such path closes a chordless cycle of
    length at least five through b and c.
    """
    full = g.full_mask()
    for b in range(g.n):
        for c in iter_bits(g.adj[b]):
            block = (g.closed_mask(b) | g.closed_mask(c))
            for a in iter_bits(g.adj[b] & ~g.closed_mask(c)):
                for d in iter_bits(g.adj[c] & ~g.closed_mask(a) & ~g.adj[b]):
                    if d == b:
                        continue
                    allowed = (full & ~block) | (1 << a) | (1 << d)
                    path = shortest_path(g, a, d, allowed)
                    if path is None:
                        continue
                    rim = [b, c] + path[::-1]
                    return Certificate(LONG_HOLE, canonical_cycle(rim))
    return None


def find_cap(g: Graph) -> Optional[Certificate]:
    """First cap in a fixed search order, or None.

    For each triangle {c, x, y} and attachments a in N(x), b in N(y) outside
    N[c], an a-b path avoiding the rest of N[x] and N[y] closes a hole through
    the edge xy to which c attaches at exactly {x, y}.
    """
    full = g.full_mask()
    for c in range(g.n):
        for x in iter_bits(g.adj[c]):
            above_x = ~((1 << (x + 1)) - 1)
            for y in iter_bits(g.adj[c] & g.adj[x] & above_x):
                keep = full & ~(g.closed_mask(c) & ~(1 << x) & ~(1 << y))
                for a, b0 in ((x, y), (y, x)):
                    cand_a = g.adj[a] & keep & ~g.closed_mask(b0)
                    cand_b = g.adj[b0] & keep & ~g.closed_mask(a)
                    for av in iter_bits(cand_a):
                        direct = cand_b & g.adj[av]
                        if direct:
                            bv = (direct & -direct).bit_length() - 1
                            rim = [a, b0, bv, av]
                            return Certificate(CAP, canonical_cycle(rim), center=c)
                        blocked = (g.closed_mask(a) | g.closed_mask(b0)) & ~(1 << av)
                        for bv in iter_bits(cand_b & ~g.adj[av]):
                            allowed = keep & ~(blocked & ~(1 << bv))
                            path = shortest_path(g, av, bv, allowed)
                            if path is None:
                                continue
                            rim = [a, b0] + path[::-1]
                            return Certificate(CAP, canonical_cycle(rim), center=c)
    return None


def _stable_triple(g: Graph, mask: int) -> Optional[tuple[int, int, int]]:
    vs = list(iter_bits(mask))
    for i, v1 in enumerate(vs):
        for j in range(i + 1, len(vs)):
            v2 = vs[j]
            if g.has_edge(v1, v2):
                continue
            for v3 in vs[j + 1 :]:
                if not g.has_edge(v1, v3) and not g.has_edge(v2, v3):
                    return v1, v2, v3
    return None


def _hole_order_of_mask(g: Graph, mask: int) -> Optional[tuple[int, ...]]:
    """Cyclic order when the induced subgraph on mask is a single chordless
    cycle of length >= 4, else None."""
    k = mask.bit_count()
    if k < 4:
        return None
    start = (mask & -mask).bit_length() - 1
    order = [start]
    prev = -1
    cur = start
    for _ in range(k - 1):
        nbrs = g.adj[cur] & mask
        if nbrs.bit_count() != 2:
            return None
        nxt = None
        for u in iter_bits(nbrs):
            if u != prev:
                nxt = u
                break
        if nxt is None or nxt == start:
            return None
        prev, cur = cur, nxt
        order.append(cur)
    if (g.adj[cur] & mask).bit_count() != 2 or not g.has_edge(cur, start):
        return None
    if len(set(order)) != k:
        return None
    cert = tuple(order)
    return cert if _is_hole_order(g, cert, 4) else None


def find_small_obstruction(g: Graph, kind: str) -> Optional[Certificate]:
    """Lexicographically least copy of one fixed obstruction, or None."""
    n = g.n
    if kind == K23:
        for u1 in range(n):
            for u2 in range(u1 + 1, n):
                if g.has_edge(u1, u2):
                    continue
                common = g.adj[u1] & g.adj[u2]
                if common.bit_count() < 3:
                    continue
                triple = _stable_triple(g, common)
                if triple is not None:
                    return Certificate(K23, (u1, u2) + triple)
        return None
    if kind == C6BAR:
        for subset in combinations(range(n), 6):
            mask = mask_of(subset)
            if any((g.adj[v] & mask).bit_count() != 3 for v in subset):
                continue
            s0 = subset[0]
            nbrs = [v for v in subset if g.has_edge(s0, v)]
            for p, q in combinations(nbrs, 2):
                if not g.has_edge(p, q):
                    continue
                t1 = (s0, p, q)
                t2 = tuple(v for v in subset if v not in t1)
                if not all(g.has_edge(t2[i], t2[j]) for i in range(3) for j in range(i + 1, 3)):
                    continue
                match = []
                ok = True
                for a in t1:
                    partners = [b for b in t2 if g.has_edge(a, b)]
                    if len(partners) != 1:
                        ok = False
                        break
                    match.append(partners[0])
                if ok and len(set(match)) == 3:
                    return Certificate(C6BAR, t1 + tuple(match))
        return None
    if kind == W54:
        for subset in combinations(range(n), 6):
            mask = mask_of(subset)
            for c in subset:
                rim_mask = mask & ~(1 << c)
                if (g.adj[c] & rim_mask).bit_count() != 4:
                    continue
                order = _hole_order_of_mask(g, rim_mask)
                if order is not None and len(order) == 5:
                    return Certificate(W54, canonical_cycle(list(order)), center=c)
        return None
    if kind == SEVEN_ANTIHOLE:
        from .graphs import complement

        co = complement(g)
        for subset in combinations(range(n), 7):
            mask = mask_of(subset)
            order = _hole_order_of_mask(co, mask)
            if order is not None and len(order) == 7:
                return Certificate(SEVEN_ANTIHOLE, canonical_cycle(list(order)))
        return None
    raise ValueError(f"unknown small obstruction kind {kind!r}")


@dataclass(frozen=True)
class HoleExpansion:
    """For a hole H: per rim vertex its twin set (the vertex plus everything
    attaching to H exactly as it does), and the set of vertices complete
    to H."""

    hole: tuple[int, ...]
    twin_sets: tuple[frozenset[int], ...]
    universal: frozenset[int]

    def expansion_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.twin_sets:
            out |= s
        return frozenset(out)


def hole_expansion(g: Graph, hole: Certificate) -> HoleExpansion:
    if hole.kind not in (HOLE, LONG_HOLE):
        raise ValueError("hole certificate required")
    if not check_certificate(g, hole):
        raise ValueError("invalid hole certificate")
    verts = hole.vertices
    k = len(verts)
    hole_mask = mask_of(verts)
    targets = []
    for i in range(k):
        targets.append((1 << verts[(i - 1) % k]) | (1 << verts[i]) | (1 << verts[(i + 1) % k]))
    twin_sets = [set() for _ in range(k)]
    universal = set()
    for v in range(g.n):
        trace = g.closed_mask(v) & hole_mask
        if v not in verts and trace == hole_mask:
            universal.add(v)
            continue
        for i in range(k):
            if trace == targets[i]:
                twin_sets[i].add(v)
                break
    return HoleExpansion(verts, tuple(frozenset(s) for s in twin_sets), frozenset(universal))
