"""Exact integer polynomials for edge cover counts."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from .errors import ZeroPolynomial

ENGINES = ("brute", "ie", "dp")


def binomial(m: int, k: int) -> int:
    """C(m, k), and 0 outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return 0
    return comb(m, k)


@dataclass(frozen=True)
class CoverTable:
    """Per-size edge cover counts produced by one engine.

    ``counts`` lists ``(i, e_i)`` for the nonzero sizes only, ascending.
    An empty table means the zero polynomial, except for the graph with no
    vertices (``order == 0``) whose polynomial is 1.
    """

    counts: tuple[tuple[int, int], ...]
    engine: str
    order: int
    size: int

    def to_json(self) -> dict:
        return {"engine": self.engine, "counts": [[i, str(c)] for i, c in self.counts]}


@dataclass(frozen=True, order=False)
class ECPolynomial:
    """Dense coefficient tuple, index = exponent, trailing zeros stripped.

    The zero polynomial is ``()``; the unit polynomial is ``(1,)``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "ECPolynomial":
        dense: list[int] = []
        for i, c in terms:
            if i >= len(dense):
                dense.extend([0] * (i + 1 - len(dense)))
            dense[i] += c
        return cls(tuple(dense))

    @classmethod
    def zero(cls) -> "ECPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "ECPolynomial":
        return cls((1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_unit(self) -> bool:
        return self.coeffs == (1,)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    m = degree

    @property
    def rho(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def support_vector(self) -> tuple[int, ...]:
        """Coefficients from the lowest nonzero exponent up to the degree."""
        return self.coeffs[self.rho :]

    def sort_key(self) -> tuple:
        return (self.rho, self.degree, self.support_vector())

    def __mul__(self, other: "ECPolynomial") -> "ECPolynomial":
        return multiply(self, other)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in reversed(self.terms()):
            if i == 0:
                parts.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "m": self.degree if not self.is_zero else 0,
            "rho": self.rho,
            "coeffs": [[i, str(c)] for i, c in self.terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ECPolynomial":
        return cls.from_terms((int(i), int(c)) for i, c in obj["coeffs"])


def from_cover_table(t: CoverTable) -> ECPolynomial:
    if not t.counts:
        return ECPolynomial.one() if t.order == 0 else ECPolynomial.zero()
    return ECPolynomial.from_terms(t.counts)


def multiply(p: ECPolynomial, q: ECPolynomial) -> ECPolynomial:
    if p.is_zero or q.is_zero:
        return ECPolynomial.zero()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return ECPolynomial(tuple(out))


def evaluate(p: ECPolynomial, x0: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def monomial_times_binomial_power(a: int, b: int) -> ECPolynomial:
    """Expand x^a (1+x)^b."""
    return ECPolynomial(tuple([0] * a + [comb(b, k) for k in range(b + 1)]))


def as_monomial_times_binomial_power(p: ECPolynomial) -> Optional[tuple[int, int]]:
    """Return ``(a, b)`` when ``p == x^a (1+x)^b`` exactly, else ``None``."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no x^a(1+x)^b form")
    a = p.rho
    b = p.degree - a
    tail = p.coeffs[a:]
    if all(c == comb(b, k) for k, c in enumerate(tail)):
        return a, b
    return None
