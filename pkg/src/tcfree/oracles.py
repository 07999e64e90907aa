"""Brute-force reference implementations for small graphs.

Everything here trades speed for obviousness: exhaustive enumeration with
at most simple, independently justified pruning. The fast algorithms in the
rest of the package are tested against these. Each routine guards its input
size with SizeLimitError so an accidental large call fails loudly instead of
hanging.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import ceil
from typing import Iterator, Optional

from .detectors import (
    CAP,
    HOLE,
    LONG_HOLE,
    PRISM,
    PROPER_WHEEL,
    PYRAMID,
    THETA,
    TWIN_WHEEL,
    UNIVERSAL_WHEEL,
    Certificate,
    check_certificate,
)
from .graphs import Graph, WeightedGraph, complement, iter_bits, mask_of, masked_components


class SizeLimitError(ValueError):
    """Input too large for a brute-force routine."""


def _guard(g: Graph, limit_n: int, name: str) -> None:
    if g.n > limit_n:
        raise SizeLimitError(f"{name}: {g.n} vertices exceeds limit {limit_n}")


def iter_all_graphs(n: int) -> Iterator[Graph]:
    """All graphs on vertex set {0..n-1}, one per edge subset."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        yield Graph(n, edges)


def enumerate_holes(g: Graph, min_len: int = 4, max_len: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All holes (chordless cycles, length >= min_len) in canonical cyclic
    order: least vertex first, smaller neighbor second.

    Each vertex on the growing path beyond the start may touch the path only
    at the previous vertex; touching the start closes a cycle and permits no
    further growth, which rules chords out.
    """
    cap = g.n if max_len is None else min(max_len, g.n)
    for s in range(g.n):
        gt = ~((1 << (s + 1)) - 1)
        for v1 in iter_bits(g.adj[s] & gt):
            stack = [(v1, 1 << s | 1 << v1, (s, v1))]
            while stack:
                tail, pmask, path = stack.pop()
                if len(path) >= cap:
                    continue
                for v in iter_bits(g.adj[tail] & gt & ~pmask):
                    if g.adj[v] & (pmask & ~(1 << s)) != 1 << tail:
                        continue
                    if g.has_edge(v, s):
                        if len(path) + 1 >= min_len and v > v1:
                            yield path + (v,)
                    else:
                        stack.append((v, pmask | 1 << v, path + (v,)))


def is_chordal_brute(g: Graph, limit_n: int = 14) -> bool:
    _guard(g, limit_n, "is_chordal_brute")
    return next(enumerate_holes(g), None) is None


def _walk_path(g: Graph, mask: int, start: int, first: int, stops: set[int], taken: int) -> Optional[tuple[int, ...]]:
    """Follow degree-2 vertices inside mask from start via first until a stop
    vertex; None if the walk branches, revisits, or dies."""
    path = [start, first]
    prev, cur = start, first
    seen = taken | 1 << first
    while cur not in stops:
        nbrs = g.adj[cur] & mask
        if nbrs.bit_count() != 2:
            return None
        nxt = -1
        for u in iter_bits(nbrs):
            if u != prev:
                nxt = u
        if nxt < 0 or (seen >> nxt & 1 and nxt not in stops):
            return None
        prev, cur = cur, nxt
        seen |= 1 << cur
        path.append(cur)
        if len(path) > g.n + 1:
            return None
    return tuple(path)


def _is_triangle(g: Graph, t) -> bool:
    a, b, c = t
    return g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)


def _classify_3pc(g: Graph, mask: int) -> Optional[Certificate]:
    """Certificate when the induced subgraph on mask is exactly a theta,
    pyramid, or prism, else None."""
    vs = list(iter_bits(mask))
    degs = {v: (g.adj[v] & mask).bit_count() for v in vs}
    if any(d < 2 or d > 3 for d in degs.values()):
        return None
    d3 = [v for v in vs if degs[v] == 3]

    if len(d3) == 2:
        a, b = d3
        if g.has_edge(a, b):
            return None
        paths = []
        taken = 1 << a
        for x in iter_bits(g.adj[a] & mask):
            if taken >> x & 1:
                return None
            p = _walk_path(g, mask, a, x, {b}, taken)
            if p is None:
                return None
            taken |= mask_of(p)
            paths.append(p)
        if taken != mask or len(paths) != 3:
            return None
        cert = Certificate(THETA, tuple(vs), paths=tuple(sorted(paths)))
        return cert if check_certificate(g, cert) else None

    if len(d3) == 4:
        for tri in combinations(d3, 3):
            if not _is_triangle(g, tri):
                continue
            apex = next(v for v in d3 if v not in tri)
            stops = set(tri)
            paths = []
            taken = 1 << apex
            ok = True
            for x in iter_bits(g.adj[apex] & mask):
                if taken >> x & 1:
                    ok = False
                    break
                p = _walk_path(g, mask, apex, x, stops, taken)
                if p is None:
                    ok = False
                    break
                taken |= mask_of(p)
                paths.append(p)
            if not ok or taken != mask or len(paths) != 3:
                continue
            if len({p[-1] for p in paths}) != 3:
                continue
            if sum(1 for p in paths if len(p) == 2) > 1:
                continue
            cert = Certificate(PYRAMID, tuple(vs), paths=tuple(sorted(paths)))
            if check_certificate(g, cert):
                return cert
        return None

    if len(d3) == 6:
        lead = d3[0]
        for pair in combinations(d3[1:], 2):
            t1 = (lead,) + pair
            t2 = tuple(v for v in d3 if v not in t1)
            if not _is_triangle(g, t1) or not _is_triangle(g, t2):
                continue
            t1_mask = mask_of(t1)
            stops = set(t2)
            paths = []
            taken = t1_mask
            ok = True
            for v in t1:
                starts = g.adj[v] & mask & ~t1_mask
                if starts.bit_count() != 1:
                    ok = False
                    break
                x = starts.bit_length() - 1
                if taken >> x & 1 and x not in stops:
                    ok = False
                    break
                p = _walk_path(g, mask, v, x, stops, taken)
                if p is None:
                    ok = False
                    break
                taken |= mask_of(p)
                paths.append(p)
            if not ok or taken != mask or len(paths) != 3:
                continue
            if len({p[-1] for p in paths}) != 3:
                continue
            cert = Certificate(PRISM, tuple(vs), paths=tuple(sorted(paths)))
            if check_certificate(g, cert):
                return cert
        return None

    return None


def truemper_scan(g: Graph, limit_n: int = 13) -> dict[str, Certificate]:
    """First witness of each Truemper configuration kind present, plus HOLE
    and LONG_HOLE entries. Wheels and caps come from hole enumeration, the
    three-path configurations from a sweep over all vertex subsets."""
    _guard(g, limit_n, "truemper_scan")
    found: dict[str, Certificate] = {}

    for rim in enumerate_holes(g):
        k = len(rim)
        if HOLE not in found:
            found[HOLE] = Certificate(HOLE, rim)
        if k >= 5 and LONG_HOLE not in found:
            found[LONG_HOLE] = Certificate(LONG_HOLE, rim)
        rim_mask = mask_of(rim)
        for x in range(g.n):
            if rim_mask >> x & 1:
                continue
            t = (g.adj[x] & rim_mask).bit_count()
            if t < 2:
                continue
            pos = [i for i in range(k) if g.has_edge(x, rim[i])]
            consec = _cyclically_consecutive(pos, k)
            if t == 2 and consec:
                kind = CAP
            elif t == k:
                kind = UNIVERSAL_WHEEL
            elif t == 3 and consec:
                kind = TWIN_WHEEL
            elif t >= 3:
                kind = PROPER_WHEEL
            else:
                continue
            if kind not in found:
                cert = Certificate(kind, rim, center=x)
                assert check_certificate(g, cert)
                found[kind] = cert

    for mask in range(1 << g.n):
        if mask.bit_count() < 5:
            continue
        cert = _classify_3pc(g, mask)
        if cert is not None and cert.kind not in found:
            found[cert.kind] = cert
    return found


def _cyclically_consecutive(positions: list[int], k: int) -> bool:
    t = len(positions)
    pos = set(positions)
    return any(all((s + d) % k in pos for d in range(t)) for s in positions)


def truemper_present(g: Graph, limit_n: int = 13) -> frozenset[str]:
    return frozenset(truemper_scan(g, limit_n))


def brute_chi(g: Graph, limit_n: int = 16) -> int:
    """Chromatic number by iterative-deepening backtracking, started at a
    greedy clique lower bound."""
    _guard(g, limit_n, "brute_chi")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1

    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    clique = [order[0]]
    cand = g.adj[order[0]]
    while cand:
        v = max(iter_bits(cand), key=lambda u: (g.adj[u] & cand).bit_count())
        clique.append(v)
        cand &= g.adj[v]
    lb = len(clique)

    colors = [-1] * g.n
    pos_of = {v: i for i, v in enumerate(order)}

    def try_color(i: int, k: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = 0
        for u in iter_bits(g.adj[v]):
            if pos_of[u] < i:
                forbidden |= 1 << colors[u]
        top = min(k, used + 1)
        for c in range(top):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if try_color(i + 1, k, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    for k in range(lb, g.n + 1):
        if try_color(0, k, 0):
            return k
    return g.n


def brute_omega_w(wg: WeightedGraph, limit_n: int = 20):
    """Maximum weight of a clique (the empty clique counts, so never below
    zero). Vertices of nonpositive weight are dropped up front."""
    _guard(wg.graph, limit_n, "brute_omega_w")
    g, w = wg.graph, wg.weights
    live = mask_of(v for v in range(g.n) if w[v] > 0)
    best = 0

    def rec(cand: int, cur) -> None:
        nonlocal best
        if cur > best:
            best = cur
        rem = cur
        for u in iter_bits(cand):
            rem += w[u]
        if rem <= best:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            rec(cand & g.adj[v], cur + w[v])
            rem -= w[v]
            if rem <= best:
                return

    rec(live, 0)
    return best


def brute_alpha_w(wg: WeightedGraph, limit_n: int = 20):
    """Maximum weight of a stable set, via cliques of the complement."""
    _guard(wg.graph, limit_n, "brute_alpha_w")
    return brute_omega_w(WeightedGraph(complement(wg.graph), wg.weights), limit_n)


def brute_is_ring(g: Graph, limit_n: int = 9) -> Optional[list[frozenset[int]]]:
    """A good ring partition of g found by exhaustive search, or None.

    Parts are built around the cycle one at a time. Within the search, a new
    part must be a clique, anticomplete to everything except the previous
    part, and attached to the previous part; the completed partition is
    checked against the full definition.
    """
    _guard(g, limit_n, "brute_is_ring")
    n = g.n
    if n < 4 or len(masked_components(g, g.full_mask())) != 1:
        return None
    if next(enumerate_holes(g), None) is None:
        return None
    full = g.full_mask()

    def neighborhood(mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= g.adj[v]
        return out

    def clique_submasks(pool: int) -> Iterator[int]:
        sub = pool
        while sub:
            if is_clique_mask_local(sub):
                yield sub
            sub = (sub - 1) & pool

    def is_clique_mask_local(mask: int) -> bool:
        for v in iter_bits(mask):
            if mask & ~g.closed_mask(v):
                return False
        return True

    def good(parts: list[int]) -> bool:
        k = len(parts)
        if k < 4:
            return False
        for i in range(k):
            if not is_clique_mask_local(parts[i]):
                return False
        for i in range(k):
            for j in range(i + 1, k):
                dist = min(j - i, k - (j - i))
                touching = bool(neighborhood(parts[i]) & parts[j])
                if dist >= 2 and touching:
                    return False
        for i in range(k):
            side = parts[(i - 1) % k] | parts[(i + 1) % k]
            if not any(side & ~g.adj[u] == 0 for u in iter_bits(parts[i])):
                return False
        for i in range(k):
            us = list(iter_bits(parts[i]))
            for a, b in combinations(us, 2):
                na, nb = g.closed_mask(a), g.closed_mask(b)
                if na | nb != na and na | nb != nb:
                    return False
        return True

    def dfs(parts: list[int], used: int) -> Optional[list[int]]:
        remaining = full & ~used
        # closing move: the remaining vertices as the final part
        if len(parts) >= 3 and is_clique_mask_local(remaining):
            closed = parts + [remaining]
            if good(closed):
                return closed
        blocked = 0
        for p in parts[:-1]:
            blocked |= neighborhood(p)
        pool = remaining & neighborhood(parts[-1]) & ~blocked
        for sub in clique_submasks(pool):
            if sub == remaining:
                continue
            got = dfs(parts + [sub], used | sub)
            if got is not None:
                return got
        return None

    x1_pool = g.closed_mask(0)
    sub = x1_pool
    while sub:
        if sub & 1 and is_clique_mask_local(sub):
            got = dfs([sub], sub)
            if got is not None:
                return [frozenset(iter_bits(p)) for p in got]
        sub = (sub - 1) & x1_pool
    return None


def brute_clique_cutset_exists(g: Graph, limit_n: int = 16) -> Optional[frozenset[int]]:
    """Some clique C with g - C disconnected, or None. The empty set is
    returned when g is already disconnected."""
    _guard(g, limit_n, "brute_clique_cutset_exists")
    full = g.full_mask()
    if g.n == 0:
        return None
    if len(masked_components(g, full)) != 1:
        return frozenset()

    def cuts(cmask: int) -> bool:
        rest = full & ~cmask
        return rest != 0 and len(masked_components(g, rest)) > 1

    def rec(cmask: int, cand: int) -> Optional[int]:
        for v in iter_bits(cand):
            new = cmask | 1 << v
            if cuts(new):
                return new
            above = ~((1 << (v + 1)) - 1)
            got = rec(new, cand & g.adj[v] & above)
            if got is not None:
                return got
        return None

    got = rec(0, full)
    return frozenset(iter_bits(got)) if got is not None else None


@lru_cache(maxsize=None)
def _cycle_maximal_stable_sets(k: int) -> tuple[int, ...]:
    """Maximal stable sets of the cycle 0-1-..-(k-1)-0, as bitmasks."""
    out = []
    for mask in range(1, 1 << k):
        if any(mask >> i & 1 and mask >> (i + 1) % k & 1 for i in range(k)):
            continue
        if all(mask >> (i - 1) % k & 1 or mask >> (i + 1) % k & 1 for i in range(k) if not mask >> i & 1):
            out.append(mask)
    return tuple(out)


def brute_cycle_weighted_chromatic(k: int, mults) -> int:
    """Fewest stable sets of the k-cycle covering each vertex i at least
    mults[i] times. Memoized cover search with two cheap lower bounds: no
    stable set meets both ends of an edge, and none has more than floor(k/2)
    vertices."""
    if k < 3 or len(mults) != k:
        raise ValueError("need a cycle length k >= 3 and one multiplicity per vertex")
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be nonnegative")
    if k > 12 or sum(mults) > 60:
        raise SizeLimitError("cycle cover search too large")
    sets = _cycle_maximal_stable_sets(k)
    cap = k // 2

    def lower_bound(dem: tuple[int, ...]) -> int:
        edge = max(dem[i] + dem[(i + 1) % k] for i in range(k))
        return max(edge, ceil(sum(dem) / cap))

    memo: dict[tuple[int, ...], int] = {}

    def solve(dem: tuple[int, ...]) -> int:
        if not any(dem):
            return 0
        if dem in memo:
            return memo[dem]
        lb = lower_bound(dem)
        pivot = max(range(k), key=lambda i: dem[i])
        best = None
        for s in sets:
            if not s >> pivot & 1:
                continue
            nd = tuple(dem[i] - 1 if s >> i & 1 and dem[i] > 0 else dem[i] for i in range(k))
            got = 1 + solve(nd)
            if best is None or got < best:
                best = got
                if best == lb:
                    break
        memo[dem] = best
        return best

    return solve(tuple(int(m) for m in mults))
