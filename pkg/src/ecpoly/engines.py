"""Exact edge cover counting.

Three independent engines produce a :class:`CoverTable`:

``brute``
    Tests every nonempty edge subset for covering all vertices.
``ie``
    Inclusion-exclusion over the set ``S`` of vertices forced uncovered:
    ``e_i = sum_S (-1)^|S| C(m - m_S, i)`` with ``m_S`` the number of edges
    touching ``S``.
``dp``
    Dynamic program over the bitmask of covered vertices, adding edges one
    at a time.  A vertex whose last edge has been processed is dropped
    from the state (states leaving it uncovered die), so only the open
    frontier is ever tracked.
"""

from __future__ import annotations

import numpy as np

from .errors import IsolatedVertex, OrderTooLarge, TooManyEdges
from .graph import Edge, Graph, edge_cover_number
from .polynomial import CoverTable, ECPolynomial, binomial, from_cover_table

BRUTE_MAX_EDGES = 25
SUBSET_MAX_ORDER = 26

# low edges enumerated as one numpy block; the rest loop in Python
_BRUTE_BLOCK_BITS = 18

ENGINE_TAGS = {"brute": "brute", "ie": "inclusion-exclusion", "dp": "dp"}


def _table(g: Graph, engine: str, dense: list[int]) -> CoverTable:
    counts = tuple((i, c) for i, c in enumerate(dense) if c)
    return CoverTable(counts, ENGINE_TAGS[engine], g.n, g.m)


def _empty_table(g: Graph, engine: str) -> CoverTable:
    return CoverTable((), ENGINE_TAGS[engine], g.n, g.m)


def count_covers_brute(g: Graph) -> CoverTable:
    m = g.m
    if m > BRUTE_MAX_EDGES:
        raise TooManyEdges(f"brute force is limited to m <= {BRUTE_MAX_EDGES}, got {m}")
    if g.has_isolated_vertex() or g.n == 0:
        return _empty_table(g, "brute")
    masks = g.edge_masks()
    full = np.uint64(g.full_mask)
    low = min(m, _BRUTE_BLOCK_BITS)

    # union of endpoints and subset size for every subset of the low edges
    union = np.zeros(1, dtype=np.uint64)
    size = np.zeros(1, dtype=np.int64)
    for em in masks[:low]:
        union = np.concatenate([union, union | np.uint64(em)])
        size = np.concatenate([size, size + 1])

    dense = np.zeros(m + 1, dtype=np.int64)
    high = masks[low:]
    for h in range(1 << len(high)):
        hmask = 0
        for k, em in enumerate(high):
            if h >> k & 1:
                hmask |= em
        hit = (union | np.uint64(hmask)) == full
        if h == 0:
            hit[0] = False  # the empty subset is not part of the sweep
        hits = np.bincount(size[hit], minlength=low + 1)
        shift = h.bit_count()
        dense[shift : shift + low + 1] += hits
    return _table(g, "brute", [int(c) for c in dense])


def count_covers_ie(g: Graph) -> CoverTable:
    n, m = g.n, g.m
    if n > SUBSET_MAX_ORDER:
        raise OrderTooLarge(f"inclusion-exclusion is limited to n <= {SUBSET_MAX_ORDER}, got {n}")
    if g.has_isolated_vertex() or n == 0:
        return _empty_table(g, "ie")
    adj = g.adj
    deg = g.degrees()
    # hist[k] = signed number of vertex sets S with m - m_S == k
    hist = [0] * (m + 1)
    hist[m] = 1
    S = 0
    touched = 0
    sign = 1
    # Gray code: step t flips the vertex at the lowest set bit of t
    for t in range(1, 1 << n):
        v = (t & -t).bit_length() - 1
        bit = 1 << v
        if S & bit:
            S ^= bit
            touched -= deg[v] - (adj[v] & S).bit_count()
        else:
            touched += deg[v] - (adj[v] & S).bit_count()
            S |= bit
        sign = -sign
        hist[m - touched] += sign
    dense = [sum(h * binomial(k, i) for k, h in enumerate(hist) if h) for i in range(m + 1)]
    return _table(g, "ie", dense)


def frontier_width(g: Graph) -> int:
    """Most vertices ever simultaneously touched-but-unfinished while the
    edges are scanned in order; bounds the DP state space by 2**width."""
    first = [-1] * g.n
    last = [-1] * g.n
    for k, (u, v) in enumerate(g.edges):
        for x in (u, v):
            if first[x] < 0:
                first[x] = k
            last[x] = k
    delta = [0] * (g.m + 1)
    for f, l in zip(first, last):
        if f >= 0:
            delta[f] += 1
            delta[l + 1] -= 1
    width = best = 0
    for d in delta:
        width += d
        best = max(best, width)
    return best


def count_covers_dp(g: Graph) -> CoverTable:
    n, m = g.n, g.m
    if g.has_isolated_vertex() or n == 0:
        return _empty_table(g, "dp")
    width_needed = frontier_width(g)
    if width_needed > SUBSET_MAX_ORDER:
        raise OrderTooLarge(
            f"the covered-set DP is limited to {SUBSET_MAX_ORDER} simultaneously open vertices, got {width_needed}"
        )
    last = [0] * n
    for k, (u, v) in enumerate(g.edges):
        last[u] = last[v] = k
    # Each state's polynomial in the number of chosen edges is packed into
    # one int with `width` bits per coefficient; every count is < 2^m.
    width = m + 1
    states: dict[int, int] = {0: 1}
    for k, em in enumerate(g.edge_masks()):
        for s, poly in list(states.items()):
            t = s | em
            states[t] = states.get(t, 0) + (poly << width)
        # a vertex past its last edge must be covered; then forget its bit
        for x in g.edges[k]:
            if last[x] == k:
                bit = 1 << x
                merged: dict[int, int] = {}
                for s, poly in states.items():
                    if s & bit:
                        merged[s ^ bit] = merged.get(s ^ bit, 0) + poly
                states = merged
    packed = states.get(0, 0)
    lim = (1 << width) - 1
    dense = [(packed >> (width * i)) & lim for i in range(m + 1)]
    return _table(g, "dp", dense)


_ENGINES = {"brute": count_covers_brute, "ie": count_covers_ie, "dp": count_covers_dp}


def count_covers(g: Graph, engine: str = "dp") -> CoverTable:
    try:
        fn = _ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {sorted(_ENGINES)}") from None
    return fn(g)


def edge_cover_polynomial(g: Graph, engine: str = "dp") -> ECPolynomial:
    return from_cover_table(count_covers(g, engine))


def enumerate_minimum_covers(g: Graph) -> list[list[Edge]]:
    """All edge covers of minimum size, sorted lexicographically."""
    if g.has_isolated_vertex():
        raise IsolatedVertex("a graph with an isolated vertex has no edge cover")
    if g.m > BRUTE_MAX_EDGES:
        raise TooManyEdges(f"cover enumeration is limited to m <= {BRUTE_MAX_EDGES}, got {g.m}")
    rho = edge_cover_number(g)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        incident[u].append(k)
        incident[v].append(k)
    masks = g.edge_masks()
    found: set[tuple[int, ...]] = set()

    def search(uncovered: int, chosen: tuple[int, ...]) -> None:
        if not uncovered:
            found.add(tuple(sorted(chosen)))
            return
        # each further edge covers at most two new vertices
        if len(chosen) + (uncovered.bit_count() + 1) // 2 > rho:
            return
        v = (uncovered & -uncovered).bit_length() - 1
        for k in incident[v]:
            search(uncovered & ~masks[k], chosen + (k,))

    search(g.full_mask, ())
    return sorted([list(g.edges[k] for k in cover) for cover in found])


def format_cover(cover: list[Edge]) -> str:
    """One cover as ``{u,v} {u,v} ...`` with 1-based vertex labels."""
    return " ".join(f"{{{u + 1},{v + 1}}}" for u, v in cover)
