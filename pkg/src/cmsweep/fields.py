"""
Exact arithmetic in multiquadratic extensions Q(sqrt(d_1), ..., sqrt(d_k)).

An element is stored as a map from generator subsets S of {0..k-1} to rational
coefficients: the coefficient of prod_{i in S} sqrt(d_i).  The Galois group is
(Z/2)^k acting by sign flips on the generators, which is all the field theory
the case sweeps need: every algebraic number that shows up (roots of unity of
order dividing 8, sqrt(a), sqrt(D), sqrt(D')) lives in such a field.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


class DependentGenerators(ValueError):
    """Raised when the proposed generators do not give a degree-2^k field."""


class DoesNotSplit(ValueError):
    """Raised when a characteristic polynomial has no root in the field."""


def _squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n ** 0.5)
    while r * r < n:
        r += 1
    while r * r > n:
        r -= 1
    return r * r == n


class MultiQuadField:
    """Q(sqrt(d_1), ..., sqrt(d_k)) with square-free, independent d_i."""

    def __init__(self, gens: tuple[int, ...]):
        self.gens = tuple(gens)
        self.k = len(self.gens)
        self.degree = 2 ** self.k
        # all 2^k - 1 nonempty subset products must be non-squares
        for r in range(1, self.k + 1):
            for sub in combinations(range(self.k), r):
                prod = 1
                for i in sub:
                    prod *= self.gens[i]
                if _is_square(prod):
                    raise DependentGenerators(
                        f"subset product {prod} of {self.gens} is a square")
        self.subsets = [frozenset(s)
                        for r in range(self.k + 1)
                        for s in combinations(range(self.k), r)]

    def __eq__(self, other):
        return isinstance(other, MultiQuadField) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        if not self.gens:
            return "QQ"
        return "QQ(" + ", ".join(f"sqrt({d})" for d in self.gens) + ")"

    def zero(self) -> "FieldElement":
        return FieldElement(self, {})

    def one(self) -> "FieldElement":
        return FieldElement(self, {frozenset(): Fraction(1)})

    def rational(self, q) -> "FieldElement":
        return FieldElement(self, {frozenset(): Fraction(q)})

    def sqrt_gen(self, d: int) -> "FieldElement":
        """The element sqrt(d) for a single generator d."""
        i = self.gens.index(d)
        return FieldElement(self, {frozenset([i]): Fraction(1)})

    def monomial(self, indices) -> "FieldElement":
        """prod_{i in indices} sqrt(d_i) by generator index."""
        return FieldElement(self, {frozenset(indices): Fraction(1)})

    def galois_group(self) -> list["GaloisElement"]:
        return [GaloisElement(signs) for signs in product((1, -1), repeat=self.k)]


def field_create(gens) -> MultiQuadField:
    gens = tuple(int(g) for g in gens)
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if g in (0, 1) or not _squarefree(g):
            raise DependentGenerators(
                f"generator {g} is not square-free or is trivial")
    return MultiQuadField(gens)


QQ = MultiQuadField(())


class GaloisElement:
    """A sign vector in {+1,-1}^k; acts by sqrt(d_i) -> signs[i]*sqrt(d_i)."""

    def __init__(self, signs):
        self.signs = tuple(int(s) for s in signs)
        assert all(s in (1, -1) for s in self.signs)

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        return GaloisElement(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def __eq__(self, other):
        return isinstance(other, GaloisElement) and self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    def __repr__(self):
        return f"Galois{self.signs}"

    def is_identity(self) -> bool:
        return all(s == 1 for s in self.signs)

    def subset_sign(self, subset: frozenset) -> int:
        s = 1
        for i in subset:
            s *= self.signs[i]
        return s


def complex_conjugation(field: MultiQuadField) -> GaloisElement:
    """-1 exactly on the negative generators (sqrt of d<0 is purely imaginary)."""
    return GaloisElement(tuple(-1 if d < 0 else 1 for d in field.gens))


def apply_galois(g: GaloisElement, e: "FieldElement") -> "FieldElement":
    coords = {s: c * g.subset_sign(s) for s, c in e.coords.items()}
    return FieldElement(e.field, coords)


class FieldElement:
    """An element of a MultiQuadField; immutable."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: MultiQuadField, coords: dict):
        self.field = field
        self.coords = {s: Fraction(c) for s, c in coords.items() if c != 0}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @staticmethod
    def coerce(field: MultiQuadField, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != field:
                raise ValueError("field mismatch")
            return x
        return field.rational(x)

    # -- basics -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coords

    def is_rational(self) -> bool:
        return all(not s for s in self.coords)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords.get(frozenset(), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.coords == other.coords)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field,
                               frozenset(self.coords.items())))
        return self._hash

    def __repr__(self):
        if not self.coords:
            return "0"
        parts = []
        for s in sorted(self.coords, key=lambda t: (len(t), sorted(t))):
            c = self.coords[s]
            if not s:
                parts.append(str(c))
            else:
                rad = "*".join(f"sqrt({self.field.gens[i]})" for i in sorted(s))
                parts.append(f"{c}*{rad}" if c != 1 else rad)
        return " + ".join(parts)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = FieldElement.coerce(self.field, other)
        coords = dict(self.coords)
        for s, c in other.coords.items():
            coords[s] = coords.get(s, Fraction(0)) + c
        return FieldElement(self.field, coords)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, {s: -c for s, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-FieldElement.coerce(self.field, other))

    def __rsub__(self, other):
        return FieldElement.coerce(self.field, other) - self

    def __mul__(self, other):
        other = FieldElement.coerce(self.field, other)
        gens = self.field.gens
        coords: dict = {}
        for s1, c1 in self.coords.items():
            for s2, c2 in other.coords.items():
                common = s1 & s2
                factor = Fraction(1)
                for i in common:
                    factor *= gens[i]
                key = s1 ^ s2
                coords[key] = coords.get(key, Fraction(0)) + c1 * c2 * factor
        return FieldElement(self.field, coords)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("field element is zero")
        # rationalize one generator at a time:
        # e * conj_i(e) has no sqrt(d_i) component.
        num = self.field.one()
        cur = self
        for i in range(self.field.k):
            if any(i in s for s in cur.coords):
                flip = GaloisElement(tuple(-1 if j == i else 1
                                           for j in range(self.field.k)))
                conj = apply_galois(flip, cur)
                num = num * conj
                cur = cur * conj
        q = cur.as_fraction()
        return num * self.field.rational(Fraction(1, 1) / q)

    def __truediv__(self, other):
        other = FieldElement.coerce(self.field, other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(self.field, other) * self.inverse()

    def conj(self) -> "FieldElement":
        """Complex conjugation (the distinguished embedding)."""
        return apply_galois(complex_conjugation(self.field), self)


# ---------------------------------------------------------------------------
# exact matrices over a MultiQuadField
# ---------------------------------------------------------------------------

class ExactMatrix:
    """Dense matrix with FieldElement entries; immutable by convention."""

    def __init__(self, field: MultiQuadField, entries):
        self.field = field
        self.entries = [[FieldElement.coerce(field, e) for e in row]
                        for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        assert all(len(r) == self.cols for r in self.entries)

    @staticmethod
    def from_int(field: MultiQuadField, rows) -> "ExactMatrix":
        return ExactMatrix(field, [[field.rational(e) for e in row] for row in rows])

    @staticmethod
    def identity(field: MultiQuadField, n: int) -> "ExactMatrix":
        return ExactMatrix(field, [[field.rational(1 if i == j else 0)
                                    for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.entries == other.entries)

    def __repr__(self):
        return "ExactMatrix(" + "; ".join(
            ", ".join(repr(e) for e in row) for row in self.entries) + ")"

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.field, [
            [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
            for i in range(self.rows)])

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.field, [
            [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
            for i in range(self.rows)])

    def __neg__(self):
        return ExactMatrix(self.field,
                           [[-e for e in row] for row in self.entries])

    def scale(self, c) -> "ExactMatrix":
        c = FieldElement.coerce(self.field, c)
        return ExactMatrix(self.field,
                           [[c * e for e in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            assert self.cols == other.rows
            z = self.field.zero()
            return ExactMatrix(self.field, [
                [sum((self.entries[i][t] * other.entries[t][j]
                      for t in range(self.cols)), z)
                 for j in range(other.cols)]
                for i in range(self.rows)])
        # vector (list of FieldElements / ints)
        vec = [FieldElement.coerce(self.field, v) for v in other]
        assert len(vec) == self.cols
        z = self.field.zero()
        return [sum((self.entries[i][j] * vec[j] for j in range(self.cols)), z)
                for i in range(self.rows)]

    def apply(self, vec):
        return self * vec

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, [[self.entries[i][j]
                                         for i in range(self.rows)]
                                        for j in range(self.cols)])

    def galois(self, g: GaloisElement) -> "ExactMatrix":
        return ExactMatrix(self.field, [[apply_galois(g, e) for e in row]
                                        for row in self.entries])

    # -- elimination ------------------------------------------------------
    def rref(self):
        """Reduced row echelon form; deterministic pivoting (leftmost
        nonzero column, smallest row index).  Returns (matrix, pivot cols)."""
        m = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if not m[i][c].is_zero():
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [inv * e for e in m[r]]
            for i in range(self.rows):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [m[i][j] - f * m[r][j] for j in range(self.cols)]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix(self.field, m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self):
        """Basis of the right kernel.  Each basis vector sets one free
        variable to 1 (matching the hand computations' normalization)."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [self.field.zero()] * self.cols
            v[fc] = self.field.one()
            for r, pc in enumerate(pivots):
                v[pc] = -red.entries[r][fc]
            basis.append(v)
        return basis

    def solve(self, rhs):
        """One solution of self * x = rhs, or None if inconsistent."""
        rhs = [FieldElement.coerce(self.field, v) for v in rhs]
        assert len(rhs) == self.rows
        aug = ExactMatrix(self.field, [self.entries[i] + [rhs[i]]
                                       for i in range(self.rows)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [self.field.zero()] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.entries[r][self.cols]
        return x

    def det(self) -> FieldElement:
        assert self.rows == self.cols
        m = [row[:] for row in self.entries]
        d = self.field.one()
        for c in range(self.cols):
            pr = None
            for i in range(c, self.rows):
                if not m[i][c].is_zero():
                    pr = i
                    break
            if pr is None:
                return self.field.zero()
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                d = -d
            d = d * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, self.rows):
                if not m[i][c].is_zero():
                    f = m[i][c] * inv
                    m[i] = [m[i][j] - f * m[c][j] for j in range(self.cols)]
        return d


def _eigenvalue_candidates(field: MultiQuadField):
    """Finite trial set: coefficients in {±1, ±1/2} supported on at most two
    generator subsets.  Contains every root of unity of order dividing 8
    expressible in the field, and all ±sqrt(d) monomials."""
    halves = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2))
    seen = set()
    out = []

    def push(e: FieldElement):
        if e not in seen:
            seen.add(e)
            out.append(e)

    subs = field.subsets
    for s in subs:
        for c in (Fraction(1), Fraction(-1)):
            push(FieldElement(field, {s: c}))
    for s1, s2 in combinations(subs, 2):
        for c1 in halves:
            for c2 in halves:
                push(FieldElement(field, {s1: c1, s2: c2}))
    return out


def eigen_decompose(m: ExactMatrix):
    """Eigenvalues and exact eigenbases by trial over the candidate set.

    Raises DoesNotSplit if the eigenspace dimensions do not sum to the
    matrix size (semisimple input assumed).
    """
    assert m.rows == m.cols
    n = m.rows
    ident = ExactMatrix.identity(m.field, n)
    found = []
    total = 0
    for lam in _eigenvalue_candidates(m.field):
        shifted = m - ident.scale(lam)
        ker = shifted.kernel()
        if ker:
            found.append((lam, ker))
            total += len(ker)
            if total == n:
                break
    if total != n:
        raise DoesNotSplit(
            f"only {total} of {n} eigenspace dimensions found over {m.field}")
    return found
