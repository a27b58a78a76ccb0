"""Field tower arithmetic: examples, sympy cross-checks, and the
hypothesis axiom suite."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cmsweep.fields import (QQ, DependentGenerators, ExactMatrix,
                            FieldElement, apply_galois,
                            complex_conjugation, eigen_decompose,
                            field_create)

F2 = field_create([2])
F = field_create([-1, 2])
F3 = field_create([2, -3])


def test_create_rejects_bad_generators():
    with pytest.raises(DependentGenerators):
        field_create([4])
    with pytest.raises(DependentGenerators):
        field_create([1])
    with pytest.raises(DependentGenerators):
        field_create([12])


def test_basic_arithmetic():
    s2 = F2.sqrt_gen(2)
    one = F2.one()
    assert (one + s2) * (one - s2) == F2.rational(-1)
    assert s2 * s2 == F2.rational(2)
    assert s2.inverse() * s2 == one


def test_inverse_of_mixed_element():
    # 1/(1 + sqrt(-1) + sqrt(2)) recomputed by sympy
    e = F.one() + F.sqrt_gen(-1) + F.sqrt_gen(2)
    inv = e.inverse()
    assert (e * inv) == F.one()
    x = 1 + sympy.I + sympy.sqrt(2)
    got = sum(sympy.Rational(c) * sympy.prod(
        [sympy.sqrt(F.gens[i]) for i in s]) for s, c in inv.coords.items())
    assert sympy.simplify(got - 1 / x) == 0


def test_conjugation():
    i = F.sqrt_gen(-1)
    s2 = F.sqrt_gen(2)
    assert i.conj() == -i
    assert s2.conj() == s2
    cc = complex_conjugation(F)
    assert apply_galois(cc, i + s2) == -i + s2


# -- hypothesis axiom suite -------------------------------------------------

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, field=F3):
    subsets = list(field.subsets)
    coords = {s: draw(fracs) for s in subsets}
    return FieldElement(field, coords)


@given(elements(), elements(), elements())
@settings(max_examples=150, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(elements())
@settings(max_examples=150, deadline=None)
def test_multiplicative_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == F3.one()


@given(elements(), elements(), st.integers(0, 3))
@settings(max_examples=150, deadline=None)
def test_galois_homomorphism(a, b, idx):
    g = F3.galois_group()[idx]
    assert apply_galois(g, a * b) == apply_galois(g, a) * apply_galois(g, b)
    assert apply_galois(g, a + b) == apply_galois(g, a) + apply_galois(g, b)


def test_galois_group_structure():
    gg = F3.galois_group()
    assert len(gg) == 4
    assert len({g.signs for g in gg}) == 4
    for g in gg:
        assert (g * g).is_identity()


# -- linear algebra vs sympy ------------------------------------------------

def _to_sympy(m):
    rows = []
    for row in m.entries:
        out = []
        for e in row:
            out.append(sum(sympy.Rational(c) * sympy.prod(
                [sympy.sqrt(m.field.gens[i]) for i in s])
                for s, c in e.coords.items()))
        rows.append(out)
    return sympy.Matrix(len(m.entries), len(m.entries[0]) if m.entries else 0,
                        lambda i, j: rows[i][j])


def test_rank_det_against_sympy():
    import random
    rng = random.Random(7)
    for _ in range(25):
        ints = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        m = ExactMatrix.from_int(QQ, ints)
        sm = sympy.Matrix(ints)
        assert m.rank() == sm.rank()
        assert m.det().as_fraction() == Fraction(int(sm.det()))


def test_kernel_and_solve():
    m = ExactMatrix.from_int(QQ, [[1, 2, 3], [2, 4, 6]])
    ker = m.kernel()
    assert len(ker) == 2
    for v in ker:
        img = m * list(v)
        assert all(e.is_zero() for e in img)
    sol = m.solve([QQ.rational(6), QQ.rational(12)])
    assert sol is not None
    assert m.solve([QQ.rational(1), QQ.rational(0)]) is None


def test_eigen_decompose_signed_cycle():
    # the 4-cycle has eigenvalues 1, -1, +-sqrt(-1); sympy agrees
    rows = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))
    m = ExactMatrix.from_int(F, rows)
    eig = eigen_decompose(m)
    assert len(eig) == 4
    sy = sympy.Matrix([list(r) for r in rows])
    assert set(sy.eigenvals()) == {1, -1, sympy.I, -sympy.I}
    for lam, vecs in eig:
        assert len(vecs) == 1
        got = m * list(vecs[0])
        want = [lam * c for c in vecs[0]]
        assert all((p - q).is_zero() for p, q in zip(got, want))
