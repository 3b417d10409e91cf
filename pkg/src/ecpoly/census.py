"""Regular-graph generation, equivalence classes and the order-10 cubic census."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator

from .canon import canonical_code
from .engines import count_covers, enumerate_minimum_covers
from .errors import OddOrder, OrderOutOfRange
from .graph import Edge, Graph, parse_graph6
from .polynomial import ECPolynomial, from_cover_table

CUBIC_MIN_ORDER = 4
CUBIC_MAX_ORDER = 12


# --- generation -------------------------------------------------------------


def _regular_labeled(n: int, k: int, break_symmetry: bool) -> Iterator[Graph]:
    """k-regular labeled graphs on n vertices, row by row.

    With ``break_symmetry`` a vertex may only gain neighbours among the
    still edgeless vertices as a lowest-label prefix of them; edgeless
    vertices are interchangeable, so every isomorphism class survives.
    """
    rem = [k] * n
    touched = [False] * n
    edges: list[Edge] = []

    def fill(v: int) -> Iterator[Graph]:
        if v == n:
            yield Graph(n, tuple(sorted(edges)))
            return
        need = rem[v]
        cands = [w for w in range(v + 1, n) if rem[w] > 0]
        if len(cands) < need:
            return
        fresh = [w for w in cands if not touched[w]]
        for combo in combinations(cands, need):
            if break_symmetry:
                used = [w for w in combo if not touched[w]]
                if used != fresh[: len(used)]:
                    continue
            saved = [(w, touched[w]) for w in combo]
            saved.append((v, touched[v]))
            for w in combo:
                rem[w] -= 1
                touched[w] = True
                edges.append((v, w))
            rem[v] = 0
            touched[v] = True
            yield from fill(v + 1)
            for w in combo:
                rem[w] += 1
                edges.pop()
            rem[v] = need
            for w, t in saved:
                touched[w] = t

    if n * k % 2 == 0 and k < n:
        yield from fill(0)


def labeled_regular_graphs(n: int, k: int) -> list[Graph]:
    """Every k-regular graph on the labeled vertex set 0..n-1."""
    return list(_regular_labeled(n, k, break_symmetry=False))


def generate_regular(n: int, k: int) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by code."""
    seen = {canonical_code(g) for g in _regular_labeled(n, k, break_symmetry=True)}
    return [parse_graph6(code) for code in sorted(seen)]


def generate_cubic(n: int) -> list[Graph]:
    if n % 2:
        raise OddOrder(f"cubic graphs need even order, got {n}")
    if not CUBIC_MIN_ORDER <= n <= CUBIC_MAX_ORDER:
        raise OrderOutOfRange(f"cubic generation supports {CUBIC_MIN_ORDER} <= n <= {CUBIC_MAX_ORDER}, got {n}")
    return generate_regular(n, 3)


def classes_by_permutation(graphs: Iterable[Graph]) -> list[list[Graph]]:
    """Group labeled graphs into isomorphism classes by applying every
    vertex permutation to each new representative."""
    classes: list[list[Graph]] = []
    owner: dict[tuple[Edge, ...], int] = {}
    for g in graphs:
        key = g.edges
        if key not in owner:
            idx = len(classes)
            classes.append([])
            for perm in permutations(range(g.n)):
                img = tuple(sorted((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u]) for u, v in g.edges))
                owner.setdefault(img, idx)
        classes[owner[key]].append(g)
    return classes


@lru_cache(maxsize=None)
def _all_graph_codes(n: int) -> tuple[str, ...]:
    if n <= 1:
        return (canonical_code(Graph(n, ())),)
    codes = set()
    for code in _all_graph_codes(n - 1):
        base = parse_graph6(code)
        for nb in range(1 << (n - 1)):
            extra = tuple((u, n - 1) for u in range(n - 1) if nb >> u & 1)
            codes.add(canonical_code(Graph(n, tuple(sorted(base.edges + extra)))))
    return tuple(sorted(codes))


def all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism."""
    return [parse_graph6(c) for c in _all_graph_codes(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.is_connected()]


# --- equivalence classes ----------------------------------------------------


@dataclass(frozen=True)
class EquivClass:
    polynomial: ECPolynomial
    members: tuple[str, ...]

    @property
    def unique(self) -> bool:
        return len(self.members) == 1


def partition_by_polynomial(graphs: Iterable[Graph], engine: str = "dp") -> list[EquivClass]:
    groups: dict[ECPolynomial, set[str]] = {}
    for g in graphs:
        p = from_cover_table(count_covers(g, engine))
        groups.setdefault(p, set()).add(canonical_code(g))
    classes = [EquivClass(p, tuple(sorted(ms))) for p, ms in groups.items()]
    classes.sort(key=lambda c: c.polynomial.sort_key())
    return classes


# --- census -----------------------------------------------------------------


@dataclass
class CensusReport:
    order: int
    degree: int
    graphs: list[str]
    polynomials: list[ECPolynomial]
    connected: list[bool]
    classes: list[EquivClass]

    @property
    def matrix(self) -> list[tuple[int, ...]]:
        return [p.support_vector() for p in self.polynomials]

    def columns(self) -> range:
        lo = min(p.rho for p in self.polynomials)
        hi = max(p.degree for p in self.polynomials)
        return range(lo, hi + 1)

    def to_csv(self) -> str:
        cols = self.columns()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "connected", *cols])
        for code, conn, p in zip(self.graphs, self.connected, self.polynomials):
            w.writerow([code, int(conn), *(str(p[j]) for j in cols)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "degree": self.degree,
            "graphs": [
                {"graph6": c, "connected": conn, "polynomial": p.to_json()}
                for c, conn, p in zip(self.graphs, self.connected, self.polynomials)
            ],
            "classes": [{"polynomial": c.polynomial.to_json(), "members": list(c.members)} for c in self.classes],
        }


def census_report(n: int, k: int = 3, engine: str = "dp") -> CensusReport:
    if k != 3:
        raise ValueError("only cubic censuses (k=3) are supported")
    graphs = generate_cubic(n)
    codes = [canonical_code(g) for g in graphs]
    polys = [from_cover_table(count_covers(g, engine)) for g in graphs]
    groups: dict[ECPolynomial, list[str]] = {}
    for code, p in zip(codes, polys):
        groups.setdefault(p, []).append(code)
    classes = sorted((EquivClass(p, tuple(sorted(ms))) for p, ms in groups.items()), key=lambda c: c.polynomial.sort_key())
    return CensusReport(n, k, codes, polys, [g.is_connected() for g in graphs], classes)


@dataclass
class MinCoverEntry:
    code: str
    connected: bool
    count: int
    covers: list[list[Edge]]


def min_cover_census(n: int, k: int = 3) -> list[MinCoverEntry]:
    if k != 3:
        raise ValueError("only cubic censuses (k=3) are supported")
    out = []
    for g in generate_cubic(n):
        covers = enumerate_minimum_covers(g)
        out.append(MinCoverEntry(canonical_code(g), g.is_connected(), len(covers), covers))
    return out


# --- golden table -----------------------------------------------------------


@dataclass
class GoldenRow:
    label: str
    values: dict[int, int]
    # column -> every value the row's sources give for that cell
    disputed: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def accepts(self, j: int, value: int) -> bool:
        if j in self.disputed:
            return value in self.disputed[j]
        return self.values[j] == value


def load_golden(path: str | Path) -> list[GoldenRow]:
    """Read a golden table.

    Columns: ``graph``, one column per cover size, and an optional ``disputed``
    column of entries ``j=<size>:<v1>|<v2>`` naming every value reported for
    that cell by different sources.
    """
    rows = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(row for row in fh if not row.startswith("#")):
            label = rec.pop("graph")
            note = (rec.pop("disputed", "") or "").strip()
            values = {int(j): int(v) for j, v in rec.items()}
            disputed = {}
            for item in filter(None, note.split(";")):
                where, alts = item.split(":")
                disputed[int(where.strip().removeprefix("j="))] = tuple(int(a) for a in alts.split("|"))
            rows.append(GoldenRow(label, values, disputed))
    return rows


def default_golden_path() -> Path:
    return Path(__file__).with_name("data") / "cubic10_table.csv"


@dataclass
class GoldenComparison:
    assignment: dict[str, str]  # graph6 -> golden label
    unmatched: list[str]  # graph6 codes with no golden partner
    nearest: dict[str, tuple[str, int]]  # graph6 -> (closest label, cells differing)
    disputed_cells: list[dict]

    @property
    def ok(self) -> bool:
        return not self.unmatched

    def lines(self) -> list[str]:
        out = [f"golden rows matched: {len(self.assignment)}"]
        for d in self.disputed_cells:
            out.append(
                f"disputed cell {d['label']} j={d['j']}: computed {d['computed']}; "
                f"agrees with {d['agrees']}; contradicts {d['contradicts']}"
            )
        for code in self.unmatched:
            label, diff = self.nearest[code]
            out.append(f"no golden row for {code}; nearest {label} differs in {diff} cells")
        return out


def compare_with_golden(report: CensusReport, golden: list[GoldenRow]) -> GoldenComparison:
    """Multiset comparison of computed rows against golden rows."""
    cols = sorted(golden[0].values) if golden else []
    computed = {code: p for code, p in zip(report.graphs, report.polynomials)}

    def fits(p: ECPolynomial, row: GoldenRow) -> bool:
        return all(row.accepts(j, p[j]) for j in cols) and p.degree <= max(cols) and p.rho >= min(cols)

    cand = {code: [r for r in golden if fits(p, r)] for code, p in computed.items()}
    taken: dict[str, str] = {}  # golden label -> code

    def augment(code: str, seen: set[str]) -> bool:
        for r in cand[code]:
            if r.label in seen:
                continue
            seen.add(r.label)
            if r.label not in taken or augment(taken[r.label], seen):
                taken[r.label] = code
                return True
        return False

    unmatched = [code for code in report.graphs if not augment(code, set())]
    assignment = {code: label for label, code in taken.items()}
    nearest = {}
    for code in unmatched:
        p = computed[code]
        best = min(golden, key=lambda r: sum(not r.accepts(j, p[j]) for j in cols))
        nearest[code] = (best.label, sum(not best.accepts(j, p[j]) for j in cols))

    by_label = {r.label: r for r in golden}
    disputed = []
    for code, label in sorted(assignment.items(), key=lambda kv: kv[1]):
        row = by_label[label]
        for j, alts in sorted(row.disputed.items()):
            got = computed[code][j]
            disputed.append(
                {
                    "label": label,
                    "graph6": code,
                    "j": j,
                    "computed": got,
                    "agrees": [a for a in alts if a == got],
                    "contradicts": [a for a in alts if a != got],
                }
            )
    return GoldenComparison(assignment, unmatched, nearest, disputed)

