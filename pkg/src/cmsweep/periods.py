"""
Formal period monomials over a declared basis of algebraically
independent transcendentals (default (b, 2*pi*i)), diagonal comparison
matrices, exponent-rank transcendence bounds, and twisted-class
membership.  No numbers are ever evaluated; everything is exponent
bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_BASIS = ("b", "2*pi*i")


@dataclass(frozen=True)
class PeriodMonomial:
    """coefficient * prod(basis[t] ** exponents[t]) with a nonzero
    algebraic coefficient."""
    exponents: tuple
    coefficient: Fraction = Fraction(1)
    basis: tuple = DEFAULT_BASIS

    def __post_init__(self):
        assert self.coefficient != 0
        assert len(self.exponents) == len(self.basis)

    def __mul__(self, other: "PeriodMonomial") -> "PeriodMonomial":
        assert self.basis == other.basis
        return PeriodMonomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
            self.coefficient * other.coefficient, self.basis)

    def with_coefficient(self, c) -> "PeriodMonomial":
        return PeriodMonomial(self.exponents, Fraction(c), self.basis)


@dataclass(frozen=True)
class PeriodMatrix:
    """Diagonal matrix of period monomials."""
    diagonal: tuple

    def entries(self):
        return list(self.diagonal)

    def __iter__(self):
        return iter(self.diagonal)


def gross_matrix(p: int, n: int) -> PeriodMatrix:
    """diag(b^p (2 pi i / b)^{n-p}, b^{n-p} (2 pi i / b)^p): exponent
    vectors (2p - n, n - p) and (n - 2p, p)."""
    assert 0 <= p <= n
    return PeriodMatrix((
        PeriodMonomial((2 * p - n, n - p)),
        PeriodMonomial((n - 2 * p, p)),
    ))


def trdeg_lower_bound(ms) -> int:
    """Rank over Q of the exponent matrix: a lower bound for the
    transcendence degree of the field the monomials generate, given that
    the basis transcendentals are algebraically independent (an encoded
    axiom for (b, 2*pi*i))."""
    ms = list(ms)
    if not ms:
        return 0
    basis = ms[0].basis
    assert all(m.basis == basis for m in ms)
    rows = [[Fraction(e) for e in m.exponents] for m in ms]
    return _rational_rank(rows)


def _rational_rank(rows) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows))
                      if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
    return rank


def twisted_membership(ms, k: int) -> bool:
    """True iff every monomial lies in Qbar * (2 pi i)^k, i.e. has
    b-exponent 0 and 2*pi*i-exponent k."""
    for m in ms:
        assert m.basis == DEFAULT_BASIS
        if m.exponents != (0, k):
            return False
    return True
