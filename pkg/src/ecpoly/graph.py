"""Simple undirected graphs on vertices 0..n-1.

Graphs are immutable.  Edges are stored as a sorted tuple of ``(u, v)``
pairs with ``u < v``; ``adj[v]`` is the neighbourhood of ``v`` as an int
bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    OrderTooLarge,
    VertexOutOfRange,
)

Edge = tuple[int, int]

GRAPH6_MAX_ORDER = 62
_G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise VertexOutOfRange(f"negative order {self.n}")
        adj = [0] * self.n
        prev = None
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge {(u, v)} not normalized for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise DuplicateEdge(f"edges not strictly sorted at {(u, v)}")
            prev = (u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_masks(self) -> list[int]:
        """Endpoint bitmask of every edge, in edge order."""
        return [(1 << u) | (1 << v) for u, v in self.edges]

    def has_isolated_vertex(self) -> bool:
        return any(a == 0 for a in self.adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def components(self) -> list[int]:
        """Vertex bitmasks of the connected components, by lowest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = self.adj[low.bit_length() - 1] & ~comp
                comp |= new
                frontier |= new
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def has_k2_component(self) -> bool:
        for comp in self.components():
            if comp.bit_count() == 2:
                u = (comp & -comp).bit_length() - 1
                if self.adj[u] == comp ^ (1 << u):
                    return True
        return False


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a normalized graph; duplicates and loops are rejected."""
    norm = []
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {(u, v)} outside 0..{n - 1}")
        norm.append((u, v) if u < v else (v, u))
    norm.sort()
    for a, b in zip(norm, norm[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {a} listed twice")
    return Graph(n, tuple(norm))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


# --- graph6 -----------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"character {ch!r} outside 63..126")
        vals.append(c - 63)
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise MalformedGraph6("only single-byte order headers are supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    edges.sort()
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise OrderTooLarge(f"graph6 single-byte header supports n <= {GRAPH6_MAX_ORDER}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = nacc = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# --- edge-list text ---------------------------------------------------------


def iter_edgelist(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one or more ``n m`` blocks each followed by ``m`` lines ``u v``.

    Blank lines and ``#`` comments are ignored.
    """
    tokens: list[list[int]] = []
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise MalformedEdgeList(f"line {lineno}: expected integers, got {line!r}") from None
        if len(nums) != 2:
            raise MalformedEdgeList(f"line {lineno}: expected two integers, got {line!r}")
        tokens.append(nums)
    pos = 0
    while pos < len(tokens):
        n, m = tokens[pos]
        if n < 0 or m < 0:
            raise MalformedEdgeList(f"bad header {n} {m}")
        pairs = tokens[pos + 1 : pos + 1 + m]
        if len(pairs) != m:
            raise MalformedEdgeList(f"header promises {m} edges, found {len(pairs)}")
        yield from_edge_list(n, pairs)
        pos += 1 + m


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# --- degrees ----------------------------------------------------------------


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    delta: int | None
    a: dict[int, int]
    regular_k: int | None

    def count(self, k: int) -> int:
        return self.a.get(k, 0)


def degree_stats(g: Graph) -> DegreeStats:
    degs = tuple(g.degrees())
    a: dict[int, int] = {}
    for d in degs:
        a[d] = a.get(d, 0) + 1
    delta = min(degs) if degs else None
    regular = degs[0] if len(a) == 1 else None
    return DegreeStats(degs, delta, dict(sorted(a.items())), regular)


# --- constructions ----------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((u + off, v + off) for u, v in g2.edges))


def corona_empty(g: Graph, i: int) -> Graph:
    """Attach ``i`` new pendant vertices to every vertex of ``g``.

    The pendants of vertex ``v`` are numbered ``n + v*i .. n + v*i + i - 1``.
    """
    if i < 1:
        raise ValueError(f"corona needs i >= 1, got {i}")
    n = g.n
    pend = [(v, n + v * i + t) for v in range(n) for t in range(i)]
    return from_edge_list(n * (1 + i), list(g.edges) + pend)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return from_edge_list(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def prism_graph(k: int = 3) -> Graph:
    """Circular ladder: two k-cycles joined by a perfect matching."""
    pairs = [(v, (v + 1) % k) for v in range(k)]
    pairs += [(k + v, k + (v + 1) % k) for v in range(k)]
    pairs += [(v, k + v) for v in range(k)]
    return from_edge_list(2 * k, pairs)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes v ~ v+5."""
    outer = [(v, (v + 1) % 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    return from_edge_list(10, outer + inner + spokes)


# --- matchings --------------------------------------------------------------


def maximum_matching_size(g: Graph) -> int:
    """Exact matching number by branch and bound on the lowest free vertex."""
    adj = g.adj
    best = 0

    def search(free: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        # every further edge consumes two free vertices
        if size + free.bit_count() // 2 <= best:
            return
        while free:
            low = free & -free
            v = low.bit_length() - 1
            nbrs = adj[v] & free
            if nbrs:
                break
            free ^= low
        else:
            return
        rest = free ^ low
        while nbrs:
            w = nbrs & -nbrs
            nbrs ^= w
            search(rest ^ w, size + 1)
        # leave v unmatched
        search(rest, size)

    search(g.full_mask, 0)
    return best


def perfect_matchings(g: Graph) -> list[tuple[Edge, ...]]:
    """All perfect matchings, each as a sorted tuple of edges."""
    out: list[tuple[Edge, ...]] = []
    if g.n % 2:
        return out
    adj = g.adj

    def search(free: int, chosen: list[Edge]) -> None:
        if not free:
            out.append(tuple(chosen))
            return
        low = free & -free
        v = low.bit_length() - 1
        nbrs = adj[v] & free
        while nbrs:
            w = nbrs & -nbrs
            nbrs ^= w
            chosen.append((v, w.bit_length() - 1))
            search(free ^ low ^ w, chosen)
            chosen.pop()

    search(g.full_mask, [])
    return sorted(out)


def edge_cover_number(g: Graph) -> int:
    """Size of a minimum edge cover; 0 when some vertex is isolated."""
    if g.has_isolated_vertex():
        return 0
    return g.n - maximum_matching_size(g)
