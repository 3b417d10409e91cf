"""Validators for the closed forms, bounds and recurrences satisfied by
edge cover polynomials.

All arithmetic is over the integers.  Where an identity divides, the
check multiplies through by the denominator, or raises
:class:`NonIntegerTerm` if a quotient that must be integral is not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .engines import edge_cover_polynomial
from .errors import DeltaTooSmall, NonIntegerTerm, NotMonic, ZeroOrUnitPolynomial
from .graph import Graph, corona_empty, degree_stats, edge_cover_number
from .polynomial import (
    ECPolynomial,
    as_monomial_times_binomial_power,
    binomial,
    monomial_times_binomial_power,
)

PASS, FAIL, NA = "pass", "fail", "not-applicable"


@dataclass
class Check:
    name: str
    anchor: str
    status: str
    details: str = ""

    def to_json(self) -> dict:
        d = {"check": self.name, "anchor": self.anchor, "status": self.status}
        if self.details:
            d["details"] = self.details
        return d


@dataclass
class IdentityReport:
    checks: list[Check] = field(default_factory=list)
    derived: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def add(self, name: str, anchor: str, verdict: Optional[bool], details: str = "") -> None:
        status = NA if verdict is None else (PASS if verdict else FAIL)
        self.checks.append(Check(name, anchor, status, details))

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "derived": self.derived}


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerTerm(f"{what}: {num}/{den} is not an integer")
    return q


def _sum_over_vertices(degrees: list[int], m: int, i: int, weighted: bool = False) -> int:
    if weighted:
        return sum(binomial(m - d, i) * d for d in degrees)
    return sum(binomial(m - d, i) for d in degrees)


# --- inference from the polynomial alone -----------------------------------


def first_full_binomial_index(p: ECPolynomial) -> int:
    """Least i with e_i == C(m, i)."""
    m = p.degree
    return next(i for i in range(m + 1) if p[i] == binomial(m, i))


def infer_from_polynomial(p: ECPolynomial) -> tuple[int, int, int]:
    """Size, edge covering number and minimum degree read off ``p``."""
    if p.is_zero or p.is_unit:
        raise ZeroOrUnitPolynomial("inference needs a polynomial of degree >= 1")
    if p.leading != 1:
        raise NotMonic(f"leading coefficient is {p.leading}, expected 1")
    m = p.degree
    return m, p.rho, m - first_full_binomial_index(p) + 1


def check_regularity(p: ECPolynomial, m: int, delta: int) -> bool:
    """Regularity criterion e_{m-delta} == C(m, delta) - 2m/delta (delta >= 2)."""
    if delta < 2:
        raise DeltaTooSmall(f"the regularity criterion needs delta >= 2, got {delta}")
    return delta * p[m - delta] == delta * binomial(m, delta) - 2 * m


def recover_degree_counts(p: ECPolynomial, m: int, delta: int) -> list[int]:
    """Degree counts a_1 .. a_{2 delta - 2} recovered from the top coefficients."""
    a = [0]  # a[0] unused; a[k] is the number of degree-k vertices
    for k in range(1, 2 * delta - 1):
        num = (m - k + 1) * p[m - k + 1] - k * p[m - k]
        num -= sum(binomial(m - j, m - k) * j * a[j] for j in range(1, k))
        a.append(_exact_div(num, k, f"a_{k}"))
    return a[1:]


def min_degree_count(p: ECPolynomial, m: int, delta: int) -> int:
    """a_delta = C(m, m - delta) - e_{m - delta}."""
    return binomial(m, m - delta) - p[m - delta]


# --- checks against a known graph ------------------------------------------


def lower_bound(g: Graph, i: int) -> int:
    return binomial(g.m, i) - _sum_over_vertices(g.degrees(), g.m, i)


def check_tail_recurrence(p: ECPolynomial, g: Graph) -> Optional[bool]:
    """(i+1) e_{i+1} == (m-i) e_i + sum_v C(m-d(v), i) d(v) for
    max(rho, m - 2 delta + 2) <= i <= m - 1.  ``None`` when the range is empty.
    """
    m = g.m
    degs = g.degrees()
    delta = min(degs)
    lo = max(p.rho, m - 2 * delta + 2)
    if lo > m - 1:
        return None
    for i in range(lo, m):
        num = (m - i) * p[i] + _sum_over_vertices(degs, m, i, weighted=True)
        if _exact_div(num, i + 1, f"e_{i + 1}") != p[i + 1]:
            return False
    return True


def check_corona_identity(g: Graph, i: int, engine: str = "dp") -> bool:
    """Engine result on the corona with ``i`` pendants per vertex equals
    x^(i n) (1+x)^m."""
    got = edge_cover_polynomial(corona_empty(g, i), engine)
    return got == monomial_times_binomial_power(i * g.n, g.m)


def check_root_family(g: Graph, depth: int, engine: str = "dp", i: int = 1) -> bool:
    """Every iterated corona up to ``depth`` has a polynomial x^a (1+x)^b."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    h = g
    for _ in range(depth):
        h = corona_empty(h, i)
        p = edge_cover_polynomial(h, engine)
        if as_monomial_times_binomial_power(p) is None:
            return False
    return True


def verify(g: Graph, p: ECPolynomial) -> IdentityReport:
    """Run every applicable identity on a graph and its polynomial."""
    rep = IdentityReport()
    stats = degree_stats(g)
    n, m = g.n, g.m
    rep.derived = {"n": n, "m": m}
    if n == 0 or g.has_isolated_vertex():
        expect = ECPolynomial.one() if n == 0 else ECPolynomial.zero()
        rep.add("degenerate_polynomial", "zero/unit convention", p == expect, str(p))
        return rep
    degs = list(stats.degrees)
    delta = stats.delta
    rho = edge_cover_number(g)
    k2 = g.has_k2_component()
    rep.derived.update(
        rho=rho,
        delta=delta,
        a={str(k): v for k, v in stats.a.items()},
        regular=stats.regular_k is not None,
    )

    rep.add("monic", "monic of degree m", p.degree == m and p.leading == 1, f"degree={p.degree}")
    rep.add("rho", "lowest exponent is the edge covering number", p.rho == rho, f"poly={p.rho} matching={rho}")
    rep.add("order_bound", "n <= 2 rho", n <= 2 * p.rho, f"n={n} rho={p.rho}")

    tail = all(p[i] == binomial(m, i) for i in range(m - delta + 1, m + 1))
    rep.add("tail_binomials", "e_i = C(m,i) for i > m - delta", tail)
    i0 = first_full_binomial_index(p)
    rep.add("min_degree_from_i0", "delta = m - i0 + 1", delta == m - i0 + 1, f"i0={i0} delta={delta}")

    inferred = infer_from_polynomial(p)
    rep.add("inference", "(m, rho, delta) from polynomial", inferred == (m, rho, delta), f"inferred={inferred}")

    bad = [i for i in range(m + 1) if p[i] < lower_bound(g, i)]
    rep.add("lower_bound", "e_i >= C(m,i) - sum_v C(m-d(v),i)", not bad, f"violations at {bad}" if bad else "")

    lo = max(0, m - 2 * delta + 2)
    bad = [i for i in range(lo, m + 1) if p[i] != lower_bound(g, i)]
    rep.add("equality_range", "bound is exact for i >= m - 2 delta + 2", not bad, f"from i={lo}" + (f"; violations at {bad}" if bad else ""))

    try:
        verdict = check_tail_recurrence(p, g)
        rep.add("tail_recurrence", "e_{i+1} recurrence for i >= m - 2 delta + 2", verdict, "" if verdict is not None else "empty range")
    except NonIntegerTerm as exc:
        rep.add("tail_recurrence", "e_{i+1} recurrence for i >= m - 2 delta + 2", False, str(exc))

    anchor = "a_k recovery for 1 <= k <= 2 delta - 2"
    if k2:
        rep.add("degree_recovery", anchor, None, "has K2 component")
    elif delta < 2:
        rep.add("degree_recovery", anchor, None, "delta < 2: empty range")
    else:
        try:
            rec = recover_degree_counts(p, m, delta)
            truth = [stats.count(k) for k in range(1, 2 * delta - 1)]
            rep.add("degree_recovery", anchor, rec == truth, f"recovered={rec}")
            closed = min_degree_count(p, m, delta)
            rep.add(
                "a_delta_agreement",
                "recursive a_delta equals C(m,m-delta) - e_{m-delta}",
                rec[delta - 1] == closed,
                f"recursive={rec[delta - 1]} closed={closed}",
            )
        except NonIntegerTerm as exc:
            rep.add("degree_recovery", anchor, False, str(exc))

    anchor = "a_delta = C(m,m-delta) - e_{m-delta} without K2 components"
    if k2:
        rep.add("a_delta", anchor, None, "has K2 component")
    else:
        got = min_degree_count(p, m, delta)
        rep.add("a_delta", anchor, got == stats.count(delta), f"formula={got} actual={stats.count(delta)}")

    anchor = "regular iff e_{m-delta} = C(m,delta) - 2m/delta"
    if delta < 2:
        rep.add("regularity", anchor, None, "delta < 2")
    else:
        crit = check_regularity(p, m, delta)
        rep.add("regularity", anchor, crit == (stats.regular_k is not None), f"criterion={crit}")
    return rep
