"""Canonical labeling for small graphs.

Equitable partition refinement, then individualization over the first
non-trivial cell.  Every leaf of the search tree is a discrete ordered
partition, i.e. a relabeling; the canonical form is the relabeled graph
whose upper-triangle bit string (graph6 order) is smallest.  Automorphisms
found when two leaves coincide are used to skip equivalent branches.
"""

from __future__ import annotations

from itertools import permutations

from .errors import OrderTooLarge
from .graph import Graph, to_graph6

CANON_MAX_ORDER = 16

Partition = list[list[int]]


def _refine(adj: tuple[int, ...], cells: Partition) -> Partition:
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new: Partition = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(cell)
                else:
                    new.extend(groups[k] for k in sorted(groups))
            if len(new) != len(cells):
                cells = new
                changed = True
                break
    return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits of the relabeled graph, column-major."""
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbit_of(v: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def canonical_order(g: Graph) -> list[int]:
    """Vertex order ``order`` such that ``order[i]`` receives label ``i``."""
    if g.n > CANON_MAX_ORDER:
        raise OrderTooLarge(f"canonical labeling supports n <= {CANON_MAX_ORDER}, got {g.n}")
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    start = _refine(adj, [list(range(n))])

    best_code: int | None = None
    best_order: list[int] = []
    first_order: list[int] = []
    first_code: int | None = None
    autos: list[tuple[int, ...]] = []

    def record_auto(a: list[int], b: list[int]) -> None:
        # vertex a[k] plays the role of b[k] in an identical relabeled graph
        perm = [0] * n
        for x, y in zip(a, b):
            perm[x] = y
        p = tuple(perm)
        if p != tuple(range(n)):
            autos.append(p)

    def search(cells: Partition, path: list[int]) -> None:
        nonlocal best_code, best_order, first_code, first_order
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if first_code is None:
                first_code, first_order = code, order
            elif code == first_code:
                record_auto(first_order, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code and order != best_order:
                record_auto(best_order, order)
            return
        idx = cells.index(target)
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                # automorphisms fixing the current path pointwise
                stab = [a for a in autos if all(a[p] == p for p in path)]
                if any(v in _orbit_of(u, stab) for u in explored):
                    continue
            rest = [w for w in target if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            search(_refine(adj, child), path + [v])
            explored.append(v)

    search(start, [])
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    label = [0] * g.n
    for i, v in enumerate(order):
        label[v] = i
    return g.relabel(label)


def canonical_code(g: Graph) -> str:
    """graph6 string of the canonical form; equal iff isomorphic."""
    return to_graph6(canonical_form(g))


def is_isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Isomorphism by trying every vertex permutation.  Small n only."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = set(h.edges)
    for perm in permutations(range(g.n)):
        if all(((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in target for u, v in g.edges):
            return True
    return False
