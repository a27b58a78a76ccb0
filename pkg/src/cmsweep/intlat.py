"""
Exact integer-lattice algorithms: row-style Hermite normal form, Smith normal
form, saturation and membership.  Ranks here are tiny (at most 4), so
everything favors exactness and canonical output over speed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row HNF: positive pivots, entries above each pivot reduced into
    [0, pivot); zero rows dropped."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        # gcd-out column c below row r
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            while m[i][c] != 0:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return [row for row in m[:r] if any(row)]


class IntLattice:
    """A sublattice of Z^n given by its canonical HNF basis (rows)."""

    def __init__(self, ambient_rank: int, rows):
        self.ambient_rank = int(ambient_rank)
        basis = _hnf_rows([list(r) for r in rows])
        assert all(len(r) == self.ambient_rank for r in basis)
        self.basis = tuple(tuple(r) for r in basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, IntLattice)
                and self.ambient_rank == other.ambient_rank
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))

    def __repr__(self):
        return f"IntLattice({self.ambient_rank}, {list(map(list, self.basis))})"

    def contains(self, vec) -> bool:
        """Exact membership via the HNF basis (greedy pivot division)."""
        v = list(map(int, vec))
        assert len(v) == self.ambient_rank
        for row in self.basis:
            p = next((j for j, a in enumerate(row) if a), None)
            if p is None:
                continue
            if v[p] % row[p] != 0:
                return False
            q = v[p] // row[p]
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def to_text(self) -> str:
        lines = [f"{self.rank} {self.ambient_rank}"]
        lines += [" ".join(map(str, r)) for r in self.basis]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str, ambient_rank: int | None = None) -> "IntLattice":
        rows, cols, mat = parse_matrix_text(text)
        if ambient_rank is None:
            ambient_rank = cols
        return IntLattice(ambient_rank, mat)


def parse_matrix_text(text: str):
    """Plain-text matrix format: first line "rows cols", then integer rows."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    rows, cols = map(int, lines[0].split())
    mat = [list(map(int, ln.split())) for ln in lines[1:1 + rows]]
    assert len(mat) == rows and all(len(r) == cols for r in mat)
    return rows, cols, mat


def matrix_to_text(mat) -> str:
    mat = [list(r) for r in mat]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    lines = [f"{rows} {cols}"] + [" ".join(map(str, r)) for r in mat]
    return "\n".join(lines) + "\n"


def hnf(mat, ambient_rank: int | None = None) -> IntLattice:
    mat = [list(r) for r in mat]
    if ambient_rank is None:
        ambient_rank = len(mat[0]) if mat else 0
    return IntLattice(ambient_rank, mat)


def snf(mat):
    """Smith normal form.  Returns (invariant_factors, U, V) with
    U * mat * V = diag(invariant_factors) (padded with zeros), U, V
    unimodular."""
    a = [list(map(int, r)) for r in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def addmul_row(i, j, q):  # row_i -= q*row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_col(i, j, q):  # col_i -= q*col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    t = 0
    while t < min(nrows, ncols):
        # find a nonzero pivot
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        # divisibility: a[t][t] must divide everything below-right
        fixed = False
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % a[t][t] != 0:
                    addmul_row(t, i, -1)  # row_t += row_i
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    factors = [a[i][i] for i in range(t)]
    return factors, u, v


def saturate(l: IntLattice) -> IntLattice:
    """Intersection of the Q-span of l with Z^n (via the SNF column
    transform: the Q-row-span of B = U S V is spanned by the first r rows
    of V^-1... equivalently of V^T's inverse; we use that S V has rows
    d_i * (row_i of V), so the saturation is generated by those rows of V
    with the d_i divided out -- i.e. rows of V directly)."""
    if l.rank == 0:
        return l
    factors, u, v = snf([list(r) for r in l.basis])
    r = len(factors)
    # U*B*V = S  =>  B = U^-1 * S * V^-1; rows of B span same as rows of
    # S * V^-1, i.e. d_i * (row_i of V^-1).  Saturation = rows of V^-1.
    vinv = _int_inverse(v)
    return IntLattice(l.ambient_rank, vinv[:r])


def saturation_index(l: IntLattice) -> int:
    """[saturate(l) : l] = product of the invariant factors."""
    if l.rank == 0:
        return 1
    factors, _, _ = snf([list(r) for r in l.basis])
    idx = 1
    for d in factors:
        idx *= d
    return idx


def _int_inverse(mat):
    """Inverse of a unimodular integer matrix, exactly."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pr = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[pr] = a[pr], a[c]
        inv[c], inv[pr] = inv[pr], inv[c]
        f = a[c][c]
        a[c] = [x / f for x in a[c]]
        inv[c] = [x / f for x in inv[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                g = a[i][c]
                a[i] = [x - g * y for x, y in zip(a[i], a[c])]
                inv[i] = [x - g * y for x, y in zip(inv[i], inv[c])]
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    return out


def rational_span_intersect(vectors, ambient_rank: int) -> IntLattice:
    """The saturated lattice span_Q(vectors) ∩ Z^n, vectors rational."""
    rows = []
    for vec in vectors:
        fr = [Fraction(x) for x in vec]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in fr])
    return saturate(IntLattice(ambient_rank, rows))


class SaturationCertificate:
    """Saturation verdict with a verifiable witness when not saturated."""

    def __init__(self, lattice: IntLattice):
        self.lattice = lattice
        sat = saturate(lattice)
        self.is_saturated = sat == lattice
        self.witness = None
        self.witness_multiple = None
        if not self.is_saturated:
            for row in sat.basis:
                if not lattice.contains(row):
                    q = 2
                    while not lattice.contains([q * x for x in row]):
                        q += 1
                    self.witness = tuple(row)
                    self.witness_multiple = q
                    break
        assert self.is_saturated == (self.witness is None)
