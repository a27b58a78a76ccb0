"""
Exact feasibility engine for the Hermitian positivity systems of the
polarization analyses: diagonal forms with sign-monomial coefficients in
named real parameters, antisymmetric zero-witness forms, and the
per-point definiteness check for the weight-1 family construction.

Only the structured systems that actually arise are handled; there is no
general parametric solver here on purpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product as iproduct

from .fields import (ExactMatrix, FieldElement, apply_galois,
                     complex_conjugation, field_create)

# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

GAUSS = field_create([-1])
_CONJ = complex_conjugation(GAUSS)
_IM_KEY = frozenset([0])


def gauss(re, im=0) -> FieldElement:
    """The Gaussian rational re + im*sqrt(-1)."""
    return GAUSS.rational(Fraction(re)) + \
        GAUSS.sqrt_gen(-1) * GAUSS.rational(Fraction(im))


def g_conj(e: FieldElement) -> FieldElement:
    return apply_galois(_CONJ, e)


def g_re(e: FieldElement) -> Fraction:
    return e.coords.get(frozenset(), Fraction(0))


def g_im(e: FieldElement) -> Fraction:
    return e.coords.get(_IM_KEY, Fraction(0))


def g_float(e: FieldElement) -> complex:
    return complex(g_re(e), g_im(e))


def real_sign(e: FieldElement) -> int:
    """Sign of a real element (imaginary part must vanish).  All values in
    scope are rational; irrational totally real elements would go through
    a guarded numeric evaluation."""
    assert g_im(e) == 0, "sign of a non-real element requested"
    r = g_re(e)
    return 0 if r == 0 else (1 if r > 0 else -1)


# ---------------------------------------------------------------------------
# sign-monomial diagonal systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """coeff * prod(param^exp); the sign under a parameter sign pattern is
    determined because the parameters are real."""
    coeff: Fraction
    powers: tuple  # sorted tuple of (name, exponent>0)

    @staticmethod
    def of(coeff, **powers) -> "Monomial":
        return Monomial(Fraction(coeff),
                        tuple(sorted((n, e) for n, e in powers.items() if e)))

    def sign_under(self, signs: dict) -> int:
        s = 1 if self.coeff > 0 else -1
        for name, e in self.powers:
            if signs[name] < 0 and e % 2 == 1:
                s = -s
        return s

    def evaluate(self, values: dict) -> Fraction:
        v = self.coeff
        for name, e in self.powers:
            v *= Fraction(values[name]) ** e
        return v

    def __str__(self):
        parts = [str(self.coeff)]
        for name, e in self.powers:
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)


@dataclass
class DiagonalPositivitySystem:
    """A conjunction of strict positivity requirements on diagonal-form
    coefficients; `fixed_signs` pins parameters whose sign is part of the
    case hypothesis (e.g. lambda < 0)."""
    parameters: tuple
    coefficients: list  # of (label, Monomial)
    fixed_signs: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        assert self.coefficients, "coefficient list must be nonempty"

    def free_parameters(self):
        return tuple(p for p in self.parameters if p not in self.fixed_signs)


@dataclass
class FeasibilityVerdict:
    status: str  # INFEASIBLE | FEASIBLE
    certificate: dict

    def to_json(self):
        return {"status": self.status, "certificate": self.certificate}


def _sign_patterns(sys: DiagonalPositivitySystem):
    free = sys.free_parameters()
    for bits in iproduct((1, -1), repeat=len(free)):
        signs = dict(sys.fixed_signs)
        signs.update(dict(zip(free, bits)))
        yield signs


def diagonal_feasibility(sys: DiagonalPositivitySystem) -> FeasibilityVerdict:
    """Decide whether some sign assignment of the parameters makes every
    coefficient positive.  Infeasibility is certified by a pair of
    requirements that no sign pattern satisfies simultaneously."""
    for signs in _sign_patterns(sys):
        if all(m.sign_under(signs) > 0 for _, m in sys.coefficients):
            values = {p: Fraction(s) for p, s in signs.items()}
            return FeasibilityVerdict("FEASIBLE", {
                "signs": {p: int(s) for p, s in signs.items()},
                "parameter_point": {p: str(v) for p, v in values.items()},
                "coefficient_values": [str(m.evaluate(values))
                                       for _, m in sys.coefficients],
            })
    # find a contradictory pair
    n = len(sys.coefficients)
    for i in range(n):
        for j in range(i + 1, n):
            mi, mj = sys.coefficients[i][1], sys.coefficients[j][1]
            if not any(mi.sign_under(s) > 0 and mj.sign_under(s) > 0
                       for s in _sign_patterns(sys)):
                return FeasibilityVerdict("INFEASIBLE", {
                    "pair": [sys.coefficients[i][0], sys.coefficients[j][0]],
                    "monomials": [str(mi), str(mj)],
                    "fixed_signs": dict(sys.fixed_signs),
                })
    return FeasibilityVerdict("INFEASIBLE", {
        "pair": None,
        "note": "no single contradictory pair; all sign patterns fail",
        "fixed_signs": dict(sys.fixed_signs),
    })


def check_infeasibility_certificate(sys: DiagonalPositivitySystem,
                                    verdict: FeasibilityVerdict,
                                    samples=((1, 1), (1, -1), (2, 3),
                                             (-1, 1))) -> bool:
    """Re-check an INFEASIBLE pair: at every sampled parameter point of
    every admissible sign pattern, at least one of the two certified
    requirements is violated."""
    assert verdict.status == "INFEASIBLE" and verdict.certificate["pair"]
    labels = verdict.certificate["pair"]
    pair = [m for lab, m in sys.coefficients if lab in labels]
    for signs in _sign_patterns(sys):
        for mags in iproduct((1, 2, Fraction(1, 3)),
                             repeat=len(sys.parameters)):
            values = {p: signs[p] * m
                      for p, m in zip(sys.parameters, mags)}
            if all(m.evaluate(values) > 0 for m in pair):
                return False
    return True


# --- the concrete systems --------------------------------------------------

def deg4_imaginary_system() -> DiagonalPositivitySystem:
    """Quartic-CM imaginary branch: the three eigenspace blocks give the
    coefficients (-2M, 2M lam), (-2N, 2N lam), (-2N lam, 2N)."""
    return DiagonalPositivitySystem(
        parameters=("M", "N", "lam"),
        coefficients=[
            ("sigma:x1", Monomial.of(-2, M=1)),
            ("sigma:x-1", Monomial.of(2, M=1, lam=1)),
            ("tau:y1", Monomial.of(-2, N=1)),
            ("tau:y-1", Monomial.of(2, N=1, lam=1)),
            ("tau-bar:y'1", Monomial.of(-2, N=1, lam=1)),
            ("tau-bar:y'-1", Monomial.of(2, N=1)),
        ])


def antiweil_imaginary_system(lam_sign=-1) -> DiagonalPositivitySystem:
    """Anti-Weil imaginary branch: x-side M(1, -3 lam, 12 lam^2,
    -36 lam^3), y-side -M(-36 lam^3, 12 lam^2, -3 lam, 1), with the sign
    of lam fixed by the case hypothesis."""
    assert lam_sign in (1, -1)
    return DiagonalPositivitySystem(
        parameters=("M", "lam"),
        coefficients=[
            ("x0", Monomial.of(1, M=1)),
            ("x1", Monomial.of(-3, M=1, lam=1)),
            ("x2", Monomial.of(12, M=1, lam=2)),
            ("x3", Monomial.of(-36, M=1, lam=3)),
            ("y0", Monomial.of(36, M=1, lam=3)),
            ("y1", Monomial.of(-12, M=1, lam=2)),
            ("y2", Monomial.of(3, M=1, lam=1)),
            ("y3", Monomial.of(-1, M=1)),
        ],
        fixed_signs={"lam": lam_sign})


def antiweil_lambda_positive(lam) -> FeasibilityVerdict:
    """lam > 0 branch: restrict the y-side form to the two coordinate
    subspaces y0 = y2 = 0 and y1 = y3 = 0 (each meets the orthogonality
    subspace nontrivially); the two restrictions force M < 0 and M > 0."""
    lam = Fraction(lam)
    assert lam != 0
    if lam < 0:
        return diagonal_feasibility(antiweil_imaginary_system(lam_sign=-1))
    sys = DiagonalPositivitySystem(
        parameters=("M", "lam"),
        coefficients=[
            # y0 = y2 = 0:  -M(12 lam^2 y1 y1~ + y3 y3~) > 0
            ("y0=y2=0:y1", Monomial.of(-12, M=1, lam=2)),
            ("y0=y2=0:y3", Monomial.of(-1, M=1)),
            # y1 = y3 = 0:  -M(-36 lam^3 y0 y0~ - 3 lam y2 y2~) > 0
            ("y1=y3=0:y0", Monomial.of(36, M=1, lam=3)),
            ("y1=y3=0:y2", Monomial.of(3, M=1, lam=1)),
        ],
        fixed_signs={"lam": 1})
    return diagonal_feasibility(sys)


# ---------------------------------------------------------------------------
# antisymmetric zero witnesses
# ---------------------------------------------------------------------------

def zero_witness_real_case(gram, constraints=()):
    """A real nonzero vector, inside the real solution set of the given
    Gaussian-rational linear constraints, on which the sesquilinear form
    v^T gram conj(v) vanishes exactly.  Returns the vector, or None when
    no witness is found among the tested candidates (e.g. for a definite
    form)."""
    n = len(gram)
    rows = []
    for c in constraints:
        rows.append([g_re(e) for e in c])
        rows.append([g_im(e) for e in c])
    if rows:
        from .fields import QQ
        ker = ExactMatrix(QQ, [[QQ.rational(v) for v in r]
                               for r in rows]).kernel()
        basis = [[b[t].as_fraction() for t in range(n)] for b in ker]
    else:
        basis = [[Fraction(1 if s == t else 0) for s in range(n)]
                 for t in range(n)]
    if not basis:
        return None

    def value(vec):
        total = GAUSS.zero()
        for i in range(n):
            if vec[i] == 0:
                continue
            for j in range(n):
                if vec[j] == 0:
                    continue
                total = total + gauss(vec[i] * vec[j]) * gram[i][j]
        return total

    candidates = [[sum(b[t] for b in basis) for t in range(n)]]
    candidates += [list(b) for b in basis]
    for s in range(len(basis)):
        for t in range(s + 1, len(basis)):
            candidates.append([basis[s][u] + basis[t][u] for u in range(n)])
            candidates.append([basis[s][u] - basis[t][u] for u in range(n)])
    for vec in candidates:
        if all(v == 0 for v in vec):
            continue
        if value(vec).is_zero():
            return vec
    return None


def antisymmetric_weight_gram(scale=1):
    """The 2x2 Gram of the a>0 eigenspace form (x1 xbar_{-1} -
    x_{-1} xbar_1), up to the nonzero scalar 2M'."""
    s = gauss(scale)
    z = GAUSS.zero()
    return [[z, -s], [s, z]]


def antiweil_real_gram():
    """The 4x4 Gram of y0 y3~ - y1 y2~ + y2 y1~ - y3 y0~."""
    z, one = GAUSS.zero(), GAUSS.one()
    g = [[z] * 4 for _ in range(4)]
    g[0][3] = one
    g[1][2] = -one
    g[2][1] = one
    g[3][0] = -one
    return g


def antiweil_real_constraint(x):
    """x0 y3 - x1 y2 + x2 y1 - x3 y0 = 0 as a coefficient vector on y."""
    x = [e if isinstance(e, FieldElement) else gauss(e) for e in x]
    return [-x[3], x[2], -x[1], x[0]]


# ---------------------------------------------------------------------------
# the weight-1 family membership check
# ---------------------------------------------------------------------------

class ZeroVector(ValueError):
    pass


# value form y0 y3~ + y1 y1~ + y2 y2~ + y3 y0~ in the w-basis
_FAMILY_GRAM = ((0, 0, 0, 1),
                (0, 1, 0, 0),
                (0, 0, 1, 0),
                (1, 0, 0, 0))


def weil_family_check(x, float_samples=100, seed=0) -> dict:
    """Decide whether the 4-vector x of Gaussian rationals cuts out a
    polarized member of the weight-1 family: (i) S(x) = x0 x3~ + x1 x1~ +
    x2 x2~ + x3 x0~ < 0; (ii) the 3-dimensional orthogonal subspace
    x0 y3 - x1 y2 - x2 y1 + x3 y0 = 0; (iii) the induced Hermitian form
    is positive definite (leading principal minors); (iv) the reduced
    discriminant condition when x1 != 0; plus a floating-point sampling
    oracle."""
    x = [e if isinstance(e, FieldElement) else gauss(e) for e in x]
    assert len(x) == 4
    if all(e.is_zero() for e in x):
        raise ZeroVector("all components are zero")

    xb = [g_conj(e) for e in x]
    s_val = x[0] * xb[3] + x[1] * xb[1] + x[2] * xb[2] + x[3] * xb[0]
    assert g_im(s_val) == 0, "S(x) must be real"
    s_frac = g_re(s_val)
    report = {"s_value": str(s_frac), "s_negative": s_frac < 0}

    if s_frac >= 0:
        report["status"] = "NOT_IN_FAMILY"
        return report

    # (ii) the orthogonal subspace: kernel of (x3, -x2, -x1, x0) . y
    functional = [x[3], -x[2], -x[1], x[0]]
    ker = ExactMatrix(GAUSS, [functional]).kernel()
    assert len(ker) == 3
    basis = [list(b) for b in ker]

    # (iii) restricted Hermitian Gram R = B^T H conj(B), minors
    H = [[gauss(_FAMILY_GRAM[i][j]) for j in range(4)] for i in range(4)]
    R = [[GAUSS.zero()] * 3 for _ in range(3)]
    for s in range(3):
        for t in range(3):
            acc = GAUSS.zero()
            for i in range(4):
                for j in range(4):
                    acc = acc + basis[s][i] * H[i][j] * g_conj(basis[t][j])
            R[s][t] = acc
    # hermitian sanity
    for s in range(3):
        for t in range(3):
            assert (R[s][t] - g_conj(R[t][s])).is_zero()
    minors = []
    for k in (1, 2, 3):
        sub = ExactMatrix(GAUSS, [row[:k] for row in R[:k]])
        d = sub.det()
        assert g_im(d) == 0
        minors.append(g_re(d))
    report["minors"] = [str(m) for m in minors]
    positive_definite = all(m > 0 for m in minors)
    report["positive_definite"] = positive_definite

    # (iv) discriminant cross-check
    if not x[1].is_zero():
        disc = (x[1] * xb[1] + x[2] * xb[2]) * \
            (x[0] * xb[3] + x[2] * xb[2] + x[3] * xb[0])
        assert g_im(disc) == 0
        report["discriminant"] = str(g_re(disc))
        report["discriminant_negative"] = g_re(disc) < 0

    # floating-point sampling oracle on the subspace
    if float_samples:
        import numpy as np
        rng = np.random.default_rng(seed)
        bf = np.array([[g_float(e) for e in b] for b in basis])
        hf = np.array(_FAMILY_GRAM, dtype=float)
        agree = True
        for _ in range(float_samples):
            c = rng.normal(size=3) + 1j * rng.normal(size=3)
            v = c @ bf
            q = (v @ hf @ np.conj(v)).real
            if positive_definite and q <= 1e-12:
                agree = False
            if not positive_definite and q < -1e-12:
                # indefinite forms must eventually show a violation; a
                # single nonnegative sample is not disagreement
                pass
        report["float_oracle_agrees"] = agree

    report["status"] = "IN_FAMILY" if positive_definite else "NOT_IN_FAMILY"
    return report
