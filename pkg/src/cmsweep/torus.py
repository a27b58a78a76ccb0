"""
Character-lattice case sweeps for rank-4 signed permutation Galois actions.

The ambient lattice is Z^4 with a finite group of generalized permutation
matrices acting.  A rank-2 stable sublattice is hunted down exactly:

* lifts with distinct eigenvalues are handled by Galois descent of
  eigenline sums (the finite route);
* lifts squaring to +-I have two 2-dimensional eigenplanes, and a rank-2
  stable subspace is either a pure eigenplane or a mixed pair of lines; a
  second anticommuting lift forces the second line (one projective
  parameter), a commuting one restricts to exact 2x2 eigenline problems;
* a third matrix imposes homogeneous cubic minor constraints on the
  projective parameter whose rational roots are found exactly.

Rejection criteria: the divisor test (a lattice vector with two zero and
two +-1 coordinates), rank collapse, or failure of Galois descent.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd

from .fields import (QQ, ExactMatrix, FieldElement, MultiQuadField,
                     apply_galois, eigen_decompose, field_create)
from .intlat import IntLattice, rational_span_intersect

# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

REJECTED_DIVISOR_TEST = "REJECTED_DIVISOR_TEST"
REJECTED_RANK = "REJECTED_RANK"
REJECTED_NO_DESCENT = "REJECTED_NO_DESCENT"
SURVIVES_D4 = "SURVIVES_D4"


@dataclass(frozen=True)
class CaseVerdict:
    case_id: str
    verdict: str
    certificate: dict
    table: str = ""

    def to_json(self) -> dict:
        return {"case_id": self.case_id, "verdict": self.verdict,
                "certificate": self.certificate, "table": self.table}


# ---------------------------------------------------------------------------
# generalized permutation matrices
# ---------------------------------------------------------------------------

def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(n))
                       for j in range(n)) for i in range(n))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_apply(a, v):
    n = len(a)
    return tuple(sum(a[i][j] * v[j] for j in range(n)) for i in range(n))


IDENTITY4 = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
MINUS_I4 = mat_neg(IDENTITY4)


class GenPermMatrix:
    """A 4x4 matrix with exactly one +-1 entry per row and column."""

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        perm = [None] * 4
        signs = [None] * 4
        for j in range(4):
            nz = [i for i in range(4) if self.rows[i][j] != 0]
            assert len(nz) == 1 and self.rows[nz[0]][j] in (1, -1), \
                "not a generalized permutation matrix"
            perm[j] = nz[0]
            signs[j] = self.rows[nz[0]][j]
        # column j maps e_j to signs[j] * e_perm[j]
        self.permutation = tuple(perm)
        self.signs = tuple(signs)

    def __eq__(self, other):
        return isinstance(other, GenPermMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __mul__(self, other):
        return GenPermMatrix(mat_mul(self.rows, other.rows))

    def __neg__(self):
        return GenPermMatrix(mat_neg(self.rows))

    def __repr__(self):
        return f"GenPermMatrix({list(map(list, self.rows))})"


def forgetful_map(m: GenPermMatrix):
    """Underlying permutation (flip every -1 entry to 1)."""
    return m.permutation


def signed_lift(perm, signs) -> GenPermMatrix:
    """The matrix sending e_j to signs[j] * e_perm[j]."""
    rows = [[0] * 4 for _ in range(4)]
    for j in range(4):
        rows[perm[j]][j] = signs[j]
    return GenPermMatrix(rows)


class SignedGroup:
    """A finite set of GenPermMatrix closed under product, containing -I."""

    def __init__(self, generators):
        gens = list(generators) + [GenPermMatrix(MINUS_I4)]
        elems = {GenPermMatrix(IDENTITY4)}
        frontier = list(gens)
        while frontier:
            new = []
            for a in frontier:
                if a not in elems:
                    elems.add(a)
                    for b in list(elems):
                        new.append(a * b)
                        new.append(b * a)
            frontier = new
        self.elements = frozenset(elems)

    def image_in_s4(self):
        return frozenset(forgetful_map(m) for m in self.elements)


# ---------------------------------------------------------------------------
# S4 subgroup enumeration
# ---------------------------------------------------------------------------

def _compose(p, q):
    return tuple(p[q[i]] for i in range(4))


def _closure(gens):
    elems = {tuple(range(4))}
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            if a not in elems:
                elems.add(a)
                for b in list(elems):
                    nxt.append(_compose(a, b))
                    nxt.append(_compose(b, a))
        frontier = nxt
    return frozenset(elems)


def _is_transitive(group):
    orbit = {0}
    changed = True
    while changed:
        changed = False
        for p in group:
            for x in list(orbit):
                if p[x] not in orbit:
                    orbit.add(p[x])
                    changed = True
    return len(orbit) == 4


def _perm_order(p):
    q, n = p, 1
    ident = tuple(range(4))
    while q != ident:
        q = _compose(p, q)
        n += 1
    return n


def all_subgroups_s4():
    """All subgroups of S4 (every subgroup of S4 is 2-generated)."""
    elems = [tuple(p) for p in permutations(range(4))]
    subs = {frozenset([tuple(range(4))])}
    for a in elems:
        subs.add(_closure([a]))
        for b in elems:
            subs.add(_closure([a, b]))
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def transitive_subgroups_s4():
    """The five families of transitive subgroups of S4, with every member
    subgroup listed (9 subgroups in total)."""
    families: dict[str, list] = {"C4": [], "V": [], "D4": [], "A4": [], "S4": []}
    for g in all_subgroups_s4():
        if not _is_transitive(g):
            continue
        n = len(g)
        if n == 4:
            fam = "C4" if any(_perm_order(p) == 4 for p in g) else "V"
        elif n == 8:
            fam = "D4"
        elif n == 12:
            fam = "A4"
        elif n == 24:
            fam = "S4"
        else:  # pragma: no cover - no other transitive orders exist
            raise AssertionError(n)
        families[fam].append(sorted(g))
    return [{"family": fam, "subgroups": families[fam]}
            for fam in ("C4", "V", "D4", "A4", "S4")]


# ---------------------------------------------------------------------------
# divisor test
# ---------------------------------------------------------------------------

def divisor_candidates():
    out = []
    for i, j in combinations(range(4), 2):
        for a, b in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            v = [0, 0, 0, 0]
            v[i], v[j] = a, b
            out.append(tuple(v))
    return out


_DIVISOR_CANDIDATES = divisor_candidates()


def divisor_test(lat: IntLattice):
    """True iff the lattice contains a vector with exactly two zero
    coordinates and the other two in {-1,+1}.  Returns (flag, witness)."""
    assert lat.ambient_rank == 4
    for cand in _DIVISOR_CANDIDATES:
        if lat.contains(cand):
            return True, cand
    return False, None


def invariant_tensor_check(delta: IntLattice, exponents) -> bool:
    """Membership of the exponent vector certifies the corresponding
    character monomial is fixed by the subtorus cut out by delta."""
    assert delta.ambient_rank == 4
    return delta.contains(list(exponents))


# ---------------------------------------------------------------------------
# Galois descent of eigenline sums (finite route)
# ---------------------------------------------------------------------------

def rational_intersection(field: MultiQuadField, vectors):
    """Basis (over Q) of span_F(vectors) ∩ Q^n, computed by expanding the
    annihilator equations coordinate-wise over the field basis."""
    n = len(vectors[0])
    vmat = ExactMatrix(field, vectors)
    ann = vmat.kernel()  # each a gives the equation sum_j a_j w_j = 0
    rows = []
    for a in ann:
        for s in field.subsets:
            row = [QQ.rational(aj.coords.get(s, Fraction(0))) for aj in a]
            rows.append(row)
    if not rows:
        rows = [[QQ.zero()] * n]
    ker = ExactMatrix(QQ, rows).kernel()
    return [[x.as_fraction() for x in v] for v in ker]


def stable_subspaces_finite(ms, target_rank, field):
    """All Galois-stable sums of eigenlines of ms[0] of total dimension
    target_rank that are stable under the remaining matrices, descended
    to Q.  ms[0] must have distinct eigenvalues over the field."""
    m0 = ExactMatrix.from_int(field, ms[0])
    eig = eigen_decompose(m0)
    lines = []
    for lam, basis in eig:
        for v in basis:
            lines.append((lam, v))
    if len(lines) != m0.rows or len({l for l, _ in lines}) != len(lines):
        raise ValueError("first matrix must have distinct eigenvalues")
    lam_index = {lam: t for t, (lam, _) in enumerate(lines)}
    galois_perms = []
    for g in field.galois_group():
        sigma = tuple(lam_index[apply_galois(g, lam)] for lam, _ in lines)
        galois_perms.append(sigma)
    results = []
    for subset in combinations(range(len(lines)), target_rank):
        sset = set(subset)
        if any(set(sigma[t] for t in subset) != sset for sigma in galois_perms):
            continue
        basis_f = [lines[t][1] for t in subset]
        rat = rational_intersection(field, basis_f)
        assert len(rat) == target_rank  # Galois-stable sums always descend
        stable = True
        for m in ms[1:]:
            mm = ExactMatrix.from_int(QQ, m)
            span = ExactMatrix(QQ, [[QQ.rational(x) for x in r] for r in rat])
            for r in rat:
                img = mm * [QQ.rational(x) for x in r]
                stacked = ExactMatrix(QQ, span.entries + [img])
                if stacked.rank() != target_rank:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            results.append({
                "eigenvalues": sorted(repr(lines[t][0]) for t in subset),
                "basis": rat,
                "lattice": rational_span_intersect(rat, m0.rows),
            })
    return results


def finite_route_verdict(case_id, ms, field, table=""):
    """Run the finite descent route on matrices with a distinct-eigenvalue
    first element and classify the outcome."""
    cands = stable_subspaces_finite(ms, 2, field)
    if not cands:
        m0 = ExactMatrix.from_int(field, ms[0])
        eig = eigen_decompose(m0)
        return CaseVerdict(case_id, REJECTED_NO_DESCENT, {
            "field": list(field.gens),
            "eigenvalues": sorted(repr(l) for l, _ in eig),
            "reason": "no Galois-stable rank-2 eigenline sum descends to Q",
        }, table)
    rejected = []
    for cand in cands:
        flag, witness = divisor_test(cand["lattice"])
        if not flag:
            return CaseVerdict(case_id, SURVIVES_D4, {
                "witness_lattice": [list(r) for r in cand["lattice"].basis],
            }, table)
        rejected.append({"eigenvalues": cand["eigenvalues"],
                         "lattice": [list(r) for r in cand["lattice"].basis],
                         "witness": list(witness)})
    return CaseVerdict(case_id, REJECTED_DIVISOR_TEST,
                       {"candidates": rejected}, table)


# ---------------------------------------------------------------------------
# mixed-line machinery for involutive lifts (M^2 = +-I)
# ---------------------------------------------------------------------------

def _square_sign(m):
    sq = mat_mul(m, m)
    if sq == IDENTITY4:
        return 1
    if sq == MINUS_I4:
        return -1
    raise ValueError("matrix does not square to +-I")


def _commutation_sign(a, b):
    ab, ba = mat_mul(a, b), mat_mul(b, a)
    if ab == ba:
        return 1
    if ab == mat_neg(ba):
        return -1
    raise ValueError("matrices neither commute nor anticommute")


def _eigenplane(m, lam_int):
    """Rational basis of ker(m - lam*I) for lam in {1,-1}."""
    mm = ExactMatrix.from_int(QQ, m)
    shift = mm - ExactMatrix.identity(QQ, 4).scale(QQ.rational(lam_int))
    return [[x.as_fraction() for x in v] for v in shift.kernel()]


def _restrict(m, basis, field):
    """The matrix C of m on span(basis): m*b_i = sum_j C[j][i] b_j."""
    bs = [[FieldElement.coerce(field, x) for x in b] for b in basis]
    mm = ExactMatrix.from_int(field, m)
    bmat = ExactMatrix(field, [[bs[j][i] for j in range(len(bs))]
                               for i in range(len(bs[0]))])  # columns = basis
    cols = []
    for b in bs:
        img = mm * b
        sol = bmat.solve(img)
        assert sol is not None, "subspace not stable under restriction"
        cols.append(sol)
    return ExactMatrix(field, [[cols[j][i] for j in range(len(cols))]
                               for i in range(len(cols))])


def _eigenlines_2x2(c: ExactMatrix):
    """Eigenlines of a 2x2 matrix over its field; [] when the
    characteristic polynomial has no root there."""
    lines = []
    ident = ExactMatrix.identity(c.field, 2)
    from .fields import _eigenvalue_candidates
    for lam in _eigenvalue_candidates(c.field):
        ker = (c - ident.scale(lam)).kernel()
        for v in ker:
            lines.append((lam, v))
        if len(lines) >= 2:
            break
    return lines


def _charpoly_2x2_str(c: ExactMatrix) -> str:
    tr = c.entries[0][0] + c.entries[1][1]
    det = c.entries[0][0] * c.entries[1][1] - c.entries[0][1] * c.entries[1][0]
    return f"t^2 - ({tr!r})*t + ({det!r})"


def _line_to_int(vec):
    """Scale a rational vector to a primitive integer vector."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return [x // g for x in ints] if g else ints


@dataclass
class MixedFamily:
    """W(x1:x2) = span{u, w} with u = x1*a + x2*b and w forced linear in
    (x1, x2): w = x1*c + x2*d."""
    a: tuple
    b: tuple
    c: tuple
    d: tuple
    matrices: list = dc_field(default_factory=list)  # must all stabilize W

    def at(self, x1: int, x2: int):
        u = [x1 * p + x2 * q for p, q in zip(self.a, self.b)]
        w = [x1 * p + x2 * q for p, q in zip(self.c, self.d)]
        return u, w

    def lattice_at(self, x1: int, x2: int) -> IntLattice:
        u, w = self.at(x1, x2)
        return rational_span_intersect([u, w], 4)

    def stable_at(self, x1: int, x2: int) -> bool:
        lat = self.lattice_at(x1, x2)
        if lat.rank != 2:
            return False
        for m in self.matrices:
            for row in lat.basis:
                if not lat.contains(mat_apply(m, row)):
                    return False
        return True

    def witness_point(self):
        """First small integer parameter point whose saturated lattice
        defeats the divisor test."""
        for total in range(1, 12):
            for x1 in range(0, total + 1):
                x2a = total - x1
                for x2 in ({x2a, -x2a} if x2a else {0}):
                    if gcd(x1, abs(x2)) != 1:
                        continue
                    lat = self.lattice_at(x1, x2)
                    if lat.rank != 2:
                        continue
                    flag, _ = divisor_test(lat)
                    if not flag:
                        return (x1, x2), lat
        return None, None


def pair_analysis(m1, m2):
    """Classify the rank-2 subspaces stable under two involutive-image
    lifts m1, m2 (both squaring to +-I, m1 preferred real type).

    Returns one of
      ("family", MixedFamily)            -- one-parameter survivor family
      ("finite", [IntLattice, ...])      -- finitely many candidates
      ("none", reason_dict)              -- no rank-2 stable subspace
    Pure eigenplanes of a real-type m1 are *not* included here; they are
    handled once per first matrix (they fail the divisor test outright).
    """
    s1, s2 = _square_sign(m1), _square_sign(m2)
    if s1 == -1 and s2 == 1:
        m1, m2 = m2, m1
        s1, s2 = s2, s1
    comm = _commutation_sign(m1, m2)
    if s1 == 1:
        vm = _eigenplane(m1, -1)
        vp = _eigenplane(m1, 1)
        if comm == -1:
            # second line forced: w = m2 u
            a, b = vm
            fam = MixedFamily(tuple(a), tuple(b),
                              tuple(mat_apply(m2, a)), tuple(mat_apply(m2, b)),
                              [m1, m2])
            return "family", fam
        # commuting: lines are eigenlines of the 2x2 restrictions
        cm = _restrict(m2, vm, QQ)
        cp = _restrict(m2, vp, QQ)
        lm = _eigenlines_2x2(cm)
        lp = _eigenlines_2x2(cp)
        if not lm or not lp:
            side = "minus" if not lm else "plus"
            cc = cm if not lm else cp
            return "none", {"reason": "restriction has no rational eigenline",
                            "eigenplane": side,
                            "charpoly": _charpoly_2x2_str(cc)}
        cands = []
        for _, cv in lm:
            for _, dv in lp:
                lv = [sum((Fraction(cv[t].as_fraction()) * Fraction(vm[t][j])
                           for t in range(2)), Fraction(0)) for j in range(4)]
                pv = [sum((Fraction(dv[t].as_fraction()) * Fraction(vp[t][j])
                           for t in range(2)), Fraction(0)) for j in range(4)]
                cands.append(rational_span_intersect([lv, pv], 4))
        return "finite", cands
    # both square to -I: work over Q(i)
    gauss = field_create([-1])
    i_unit = gauss.sqrt_gen(-1)
    mm1 = ExactMatrix.from_int(gauss, m1)
    vi = (mm1 - ExactMatrix.identity(gauss, 4).scale(i_unit)).kernel()
    assert len(vi) == 2
    if comm == 1:
        c = _restrict(m2, vi, gauss)
        lines = _eigenlines_2x2(c)
        if not lines:
            return "none", {"reason": "restriction has no eigenline over Q(i)",
                            "charpoly": _charpoly_2x2_str(c)}
        cands = []
        for _, cv in lines:
            ell = [cv[0] * vi[0][j] + cv[1] * vi[1][j] for j in range(4)]
            ell_bar = [x.conj() for x in ell]
            rat = rational_intersection(gauss, [ell, ell_bar])
            assert len(rat) == 2
            cands.append(rational_span_intersect(rat, 4))
        return "finite", cands
    # anticommuting: antilinear eigenproblem B = conj . m2 on V_i with
    # B^2 = m2^2 = s2 * I; s2 = -1 kills every line.
    if s2 == -1:
        return "none", {"reason": "antilinear square is -1: no stable line",
                        "detail": "conj(m2 conj(m2 u)) = m2^2 u = -u"}
    # s2 = +1: real structure on V_i; a line family would exist, but no
    # configuration in scope reaches this branch.
    raise NotImplementedError(
        "anticommuting pair with antilinear square +1 does not occur "
        "in the configurations in scope")


# ---------------------------------------------------------------------------
# homogeneous cubic constraints from a third matrix
# ---------------------------------------------------------------------------

def _hpoly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for a, pa in enumerate(p):
        for b, qb in enumerate(q):
            out[a + b] += pa * qb
    return out


def _hpoly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return [a - b for a, b in zip(p, q)]


def _det3_linear(rows):
    """det of a 3x3 matrix whose entries are linear forms (cx1, cx2) in
    (x1, x2); result as homogeneous cubic coefficient list [x2^3 .. x1^3]."""
    def lf(e):
        return [Fraction(e[1]), Fraction(e[0])]  # [x2-coef, x1-coef]
    total = [Fraction(0)] * 4
    for perm, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                       ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        term = [Fraction(sign)]
        for r in range(3):
            term = _hpoly_mul(term, lf(rows[r][perm[r]]))
        total = [a + b for a, b in zip(total, term + [Fraction(0)] *
                                       (4 - len(term)))]
    return total


def family_constraints(fam: MixedFamily, m3):
    """All 3x3 minor constraints for m3-stability of the family, as
    homogeneous cubics in (x1, x2); coefficient lists [x2^3 .. x1^3]."""
    def linform(vec_a, vec_b):
        return [(Fraction(pa), Fraction(pb)) for pa, pb in zip(vec_a, vec_b)]

    u = linform(fam.a, fam.b)
    w = linform(fam.c, fam.d)
    out = []
    for src_a, src_b in ((fam.a, fam.b), (fam.c, fam.d)):
        img = linform(mat_apply(m3, src_a), mat_apply(m3, src_b))
        for cols in combinations(range(4), 3):
            rows = [[u[c] for c in cols], [w[c] for c in cols],
                    [img[c] for c in cols]]
            minor = _det3_linear(rows)
            if any(x != 0 for x in minor):
                out.append(minor)
    return out


def _rational_projective_roots(polys):
    """Common projective rational roots (x1 : x2) of homogeneous
    polynomials given as coefficient lists [x2^d ... x1^d]."""
    assert polys

    def value(p, x1, x2):
        d = len(p) - 1
        return sum(c * x1 ** j * x2 ** (d - j) for j, c in enumerate(p))

    roots = []
    # root at infinity (1 : 0): leading x1 coefficient vanishes everywhere
    if all(p[-1] == 0 for p in polys):
        roots.append((1, 0))
    # finite roots x1/x2 = t: rational root candidates of the first poly
    first = next(p for p in polys)
    # clear denominators
    den = 1
    for c in first:
        den = den * c.denominator // gcd(den, c.denominator)
    ic = [int(c * den) for c in first]
    # strip trailing/leading zero structure: roots of sum ic[j] t^j
    nz = [j for j, c in enumerate(ic) if c]
    if not nz:
        raise AssertionError("identically zero polynomial passed")
    low, high = nz[0], nz[-1]
    ic = ic[low:high + 1]  # powers of t and x2 divided out
    cands = {Fraction(0)} if low > 0 else set()
    lead, const = ic[-1], ic[0]
    for pnum in _divisors(abs(const)) or [0]:
        for qden in _divisors(abs(lead)):
            for s in (1, -1):
                cands.add(Fraction(s * pnum, qden))
    for t in sorted(cands):
        if all(value(p, t.numerator, t.denominator) == 0 for p in polys):
            roots.append((t.numerator, t.denominator))
    return roots


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n and n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def constrained_family_verdict(case_id, fam: MixedFamily, extra, table=""):
    """Impose the matrices in `extra` on a surviving one-parameter family
    and classify the residual parameter points."""
    polys = []
    for m3 in extra:
        polys.extend(family_constraints(fam, m3))
    if not polys:
        point, lat = fam.witness_point()
        assert point is not None
        return CaseVerdict(case_id, SURVIVES_D4, {
            "witness_point": list(point),
            "witness_lattice": [list(r) for r in lat.basis],
        }, table)
    roots = _rational_projective_roots(polys)
    if not roots:
        return CaseVerdict(case_id, REJECTED_RANK, {
            "reason": "stability constraints have no rational parameter point",
            "constraints": [_hpoly_str(p) for p in polys[:4]],
        }, table)
    all_matrices = fam.matrices + list(extra)
    rejected = []
    for x1, x2 in roots:
        lat = fam.lattice_at(x1, x2)
        stable = all(lat.contains(mat_apply(m, row))
                     for m in all_matrices for row in lat.basis)
        if not stable:
            continue  # spurious root of a minor subset
        flag, witness = divisor_test(lat)
        if not flag:
            return CaseVerdict(case_id, SURVIVES_D4, {
                "witness_point": [x1, x2],
                "witness_lattice": [list(r) for r in lat.basis],
            }, table)
        rejected.append({"point": [x1, x2],
                         "lattice": [list(r) for r in lat.basis],
                         "witness": list(witness)})
    if not rejected:
        return CaseVerdict(case_id, REJECTED_RANK, {
            "reason": "no stable rational parameter point",
            "constraints": [_hpoly_str(p) for p in polys[:4]],
        }, table)
    return CaseVerdict(case_id, REJECTED_DIVISOR_TEST,
                       {"candidates": rejected}, table)


def _hpoly_str(p) -> str:
    d = len(p) - 1
    parts = []
    for j, c in enumerate(p):
        if c == 0:
            continue
        mono = []
        if j:
            mono.append(f"x1^{j}" if j > 1 else "x1")
        if d - j:
            mono.append(f"x2^{d - j}" if d - j > 1 else "x2")
        parts.append(f"{c}*" + "*".join(mono) if mono else f"{c}")
    return " + ".join(parts) if parts else "0"


def finite_candidates_verdict(case_id, cands, matrices, table=""):
    rejected = []
    for lat in cands:
        flag, witness = divisor_test(lat)
        if not flag:
            return CaseVerdict(case_id, SURVIVES_D4, {
                "witness_lattice": [list(r) for r in lat.basis]}, table)
        rejected.append({"lattice": [list(r) for r in lat.basis],
                         "witness": list(witness)})
    return CaseVerdict(case_id, REJECTED_DIVISOR_TEST,
                       {"candidates": rejected}, table)


def pair_case_verdict(case_id, m1, m2, table=""):
    kind, payload = pair_analysis(m1, m2)
    if kind == "none":
        return CaseVerdict(case_id, REJECTED_RANK, payload, table)
    if kind == "finite":
        return finite_candidates_verdict(case_id, payload, [m1, m2], table)
    point, lat = payload.witness_point()
    assert point is not None
    return CaseVerdict(case_id, SURVIVES_D4, {
        "witness_point": list(point),
        "witness_lattice": [list(r) for r in lat.basis],
    }, table)


def pure_plane_verdict(case_id, m1, table=""):
    """The two eigenplanes of a real-type lift, both divisor-rejected."""
    cands = [rational_span_intersect(_eigenplane(m1, -1), 4),
             rational_span_intersect(_eigenplane(m1, 1), 4)]
    return finite_candidates_verdict(case_id, cands, [m1], table)


# ---------------------------------------------------------------------------
# named matrices of the case tables
# ---------------------------------------------------------------------------

M1 = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))
M2 = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0))
M3 = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1), (-1, 0, 0, 0))

P0 = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
P1 = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
P2 = ((0, 0, 0, 1), (0, 0, -1, 0), (0, 1, 0, 0), (-1, 0, 0, 0))
P3 = ((0, 0, 0, -1), (0, 0, 1, 0), (0, 1, 0, 0), (-1, 0, 0, 0))
P4 = ((0, 0, 0, -1), (0, 0, -1, 0), (0, 1, 0, 0), (1, 0, 0, 0))

# third-generator lifts for the (P0, P2, *) rows
Q1 = ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0))
Q2 = ((0, 0, -1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, -1, 0, 0))
Q3 = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))
# third-generator lifts for the (P0, P3, *) rows
QP1 = Q1
QP2 = ((0, 0, -1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, 1, 0, 0))
QP3 = Q3

# two-sign-flip lifts for the all-two-flips configuration
PP0 = ((0, -1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
PP1 = ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0))
PP2 = ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))
QQ0 = ((0, 0, 0, 1), (0, 0, -1, 0), (0, -1, 0, 0), (1, 0, 0, 0))
QQ1 = ((0, 0, 0, 1), (0, 0, -1, 0), (0, 1, 0, 0), (-1, 0, 0, 0))
QQ2 = ((0, 0, 0, -1), (0, 0, -1, 0), (0, 1, 0, 0), (1, 0, 0, 0))

# order-3 lifts for the alternating-group configuration
R0 = ((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
R1 = ((0, 0, 1, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
R2 = ((0, 0, 1, 0), (1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 0, 1))
R3 = ((0, 0, -1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
R4 = ((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, -1))
R5 = ((0, 0, 1, 0), (-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 0, 1))
R6 = ((0, 0, -1, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
R7 = ((0, 0, 1, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, -1))
A4_Q = P2
A4_QP = P3


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def sweep_dim1():
    """A 1-dimensional torus forces e_i - e_j or e_i + e_j into the kernel
    lattice for every basis pair under a transitive signed action; every
    such vector is a divisor-test element."""
    out = []
    for i, j in combinations(range(4), 2):
        for sign, tag in ((-1, "minus"), (1, "plus")):
            v = [0, 0, 0, 0]
            v[i], v[j] = 1, sign
            lat = IntLattice(4, [v])
            flag, witness = divisor_test(lat)
            assert flag
            out.append(CaseVerdict(
                f"dim1-e{i + 1}{'-' if sign < 0 else '+'}e{j + 1}",
                REJECTED_DIVISOR_TEST,
                {"element": list(witness)}, "dim1"))
    return out


def _order4_lifts():
    """Sign classes of lifts of the underlying 4-cycle of M1, modulo -I."""
    base_perm = GenPermMatrix(M1).permutation
    seen = set()
    reps = []
    for signs in product((1, -1), repeat=4):
        m = signed_lift(base_perm, signs).rows
        if m in seen or mat_neg(m) in seen:
            continue
        seen.add(m)
        tag = "".join("p" if s > 0 else "m" for s in signs)
        reps.append((f"order4-{tag}", m))
    return reps


ORDER4_FIELD = (-1, 2)


def sweep_order4():
    field = field_create(ORDER4_FIELD)
    out = []
    for case_id, m in _order4_lifts():
        out.append(finite_route_verdict(case_id, [m], field, "order4"))
    return out


def _one_flip_lifts():
    """Lifts of the double transposition underlying P0 with exactly one
    sign flip."""
    base_perm = GenPermMatrix(P0).permutation
    out = []
    for pos in range(4):
        signs = tuple(-1 if t == pos else 1 for t in range(4))
        tag = "".join("p" if s > 0 else "m" for s in signs)
        out.append((f"klein4-oneflip-{tag}", signed_lift(base_perm, signs).rows))
    return out


def sweep_klein4():
    gauss = field_create([-1])
    out = []
    # (a) some preimage contains a one-sign-flip lift: it alone rejects
    for case_id, m in _one_flip_lifts():
        out.append(finite_route_verdict(case_id, [m], gauss, "klein4-oneflip"))
    # (b) an unsigned lift present: pure eigenplanes once, then pairs
    out.append(pure_plane_verdict("klein4-p0-pure-planes", P0, "klein4-p0"))
    out.append(pair_case_verdict("klein4-p0-p1", P0, P1, "klein4-p0"))
    out.append(pair_case_verdict("klein4-p0-p2", P0, P2, "klein4-p0"))
    out.append(pair_case_verdict("klein4-p0-p3", P0, P3, "klein4-p0"))
    out.append(pair_case_verdict("klein4-p0-p4", P0, P4, "klein4-p0"))
    # (b') third generators on the two surviving pair families
    for case_id, second, third in (
            ("klein4-p0-p2-q1", P2, Q1),
            ("klein4-p0-p2-q2", P2, Q2),
            ("klein4-p0-p2-q3", P2, Q3),
            ("klein4-p0-p3-q1p", P3, QP1),
            ("klein4-p0-p3-q2p", P3, QP2),
            ("klein4-p0-p3-q3p", P3, QP3)):
        kind, fam = pair_analysis(P0, second)
        assert kind == "family"
        out.append(constrained_family_verdict(case_id, fam, [third],
                                              "klein4-triples"))
    # (c) every preimage has exactly two sign flips
    out.append(pure_plane_verdict("klein4-pp0-pure-planes", PP0,
                                  "klein4-twoflip"))
    for case_id, a, b in (
            ("klein4-pp0-qq0", PP0, QQ0),
            ("klein4-pp0-qq1", PP0, QQ1),
            ("klein4-pp1-qq0", PP1, QQ0),
            ("klein4-pp1-qq2", PP1, QQ2),
            ("klein4-pp2-qq2", PP2, QQ2),
            ("klein4-pp2-qq1", PP2, QQ1)):
        out.append(pair_case_verdict(case_id, a, b, "klein4-twoflip"))
    return out


def sweep_a4():
    out = []
    for qtag, q in (("q", A4_Q), ("qp", A4_QP)):
        kind, fam = pair_analysis(P0, q)
        assert kind == "family"
        for idx, r in enumerate((R0, R1, R2, R3, R4, R5, R6, R7)):
            out.append(constrained_family_verdict(
                f"a4-p0-{qtag}-r{idx}", fam, [r], "a4"))
    return out


# ---------------------------------------------------------------------------
# spec-facing stable_subspaces with symbolic constraint reporting
# ---------------------------------------------------------------------------

@dataclass
class StableFamily:
    kind: str                      # "finite" | "parametric"
    generators: tuple              # lattice rows or symbolic generator strings
    constraints: tuple = ()        # sympy polynomials (parametric kind)
    lattice: IntLattice | None = None


def stable_subspaces(ms, target_rank, field=None):
    """Rank-`target_rank` subspaces stable under all of ms, as
    StableFamily records.  Only subspaces spanned by eigenvectors of
    *different* eigenvalues are in scope (pure eigenplanes are handled
    separately by the sweeps).  Distinct-eigenvalue first matrix: finite
    Galois-descent families.  Involutive first matrix: the mixed
    parametric family with elimination constraints; [] when a definite
    constraint forces the parameters to zero."""
    assert target_rank == 2
    import sympy

    first = ms[0]
    try:
        _square_sign(first)
        involutive = True
    except ValueError:
        involutive = False
    if not involutive:
        if field is None:
            field = field_create([-1, 2])
        res = stable_subspaces_finite(ms, 2, field)
        return [StableFamily("finite",
                             tuple(tuple(r) for r in f["lattice"].basis),
                             lattice=f["lattice"]) for f in res]

    x1, x2, y1, y2 = sympy.symbols("x1 x2 y1 y2")
    vm = _eigenplane(first, -1)
    vp = _eigenplane(first, 1)
    u = [x1 * Fraction(vm[0][j]) + x2 * Fraction(vm[1][j]) for j in range(4)]
    w = [y1 * Fraction(vp[0][j]) + y2 * Fraction(vp[1][j]) for j in range(4)]
    constraints = set()
    degenerate = False
    for m in ms[1:]:
        for src in (u, w):
            img = [sum(Fraction(m[i][j]) * src[j] for j in range(4))
                   for i in range(4)]
            mat = sympy.Matrix([u, w, img])
            for cols in combinations(range(4), 3):
                minor = sympy.expand(mat[:, list(cols)].det())
                if minor == 0:
                    continue
                for fac, _mult in sympy.factor_list(minor)[1]:
                    syms = fac.free_symbols
                    if {x1, x2} & syms and {y1, y2} & syms:
                        constraints.add(sympy.Poly(fac, x1, x2, y1, y2))
                    elif len(syms) == 2 and _definite_quadratic(fac, syms):
                        degenerate = True
    if degenerate:
        return []
    gens = (tuple(str(c) for c in u), tuple(str(c) for c in w))
    return [StableFamily("parametric", gens,
                         tuple(sorted(constraints, key=str)))]


def _definite_quadratic(expr, syms):
    """True for a definite binary quadratic form (only rational zero is 0)."""
    import sympy
    a, b = sorted(syms, key=str)
    p = sympy.Poly(expr, a, b)
    if p.total_degree() != 2 or not p.is_homogeneous:
        return False
    ca = p.coeff_monomial(a ** 2)
    cb = p.coeff_monomial(b ** 2)
    cab = p.coeff_monomial(a * b)
    return cab ** 2 - 4 * ca * cb < 0
