"""Sign-pattern feasibility, zero witnesses, and the weight-1 family
membership check."""

import itertools
import random
from fractions import Fraction

import pytest

from cmsweep.positivity import (DiagonalPositivitySystem, Monomial,
                                antisymmetric_weight_gram,
                                antiweil_imaginary_system,
                                antiweil_lambda_positive, antiweil_real_gram,
                                antiweil_real_constraint,
                                check_infeasibility_certificate,
                                deg4_imaginary_system, diagonal_feasibility,
                                gauss, weil_family_check,
                                zero_witness_real_case)


def test_deg4_imaginary_infeasible_with_certificate():
    sys = deg4_imaginary_system()
    v = diagonal_feasibility(sys)
    assert v.status == "INFEASIBLE"
    assert sorted(v.certificate["pair"]) == ["tau-bar:y'-1", "tau:y1"]
    assert check_infeasibility_certificate(sys, v)


def test_antiweil_imaginary_infeasible_both_lambda_signs():
    for lam_sign in (-1, 1):
        sys = antiweil_imaginary_system(lam_sign=lam_sign)
        v = diagonal_feasibility(sys)
        assert v.status == "INFEASIBLE"
        assert check_infeasibility_certificate(sys, v)


def test_antiweil_lambda_positive_branch():
    v = antiweil_lambda_positive(Fraction(1, 4))
    assert v.status == "INFEASIBLE"
    assert v.certificate["pair"] is not None
    # negative lambda routes to the imaginary-branch system
    v2 = antiweil_lambda_positive(-2)
    assert v2.status == "INFEASIBLE"
    with pytest.raises(AssertionError):
        antiweil_lambda_positive(0)


def test_diagonal_feasibility_soundness_random():
    """Randomized soundness/completeness check: the verdict agrees with
    an exhaustive search over 100 exact sample points."""
    rng = random.Random(11)
    mags = (Fraction(1), Fraction(2), Fraction(1, 3), Fraction(5))
    for _ in range(30):
        n_coeff = rng.randint(1, 4)
        coeffs = []
        for t in range(n_coeff):
            c = rng.choice((-3, -1, 1, 2))
            coeffs.append((f"c{t}", Monomial.of(
                c, A=rng.randint(0, 2), B=rng.randint(0, 2))))
        sys = DiagonalPositivitySystem(("A", "B"), coeffs)
        v = diagonal_feasibility(sys)
        found = False
        for sa, sb in itertools.product((1, -1), repeat=2):
            for ma, mb in itertools.product(mags, repeat=2):
                vals = {"A": sa * ma, "B": sb * mb}
                if all(m.evaluate(vals) > 0 for _, m in coeffs):
                    found = True
        # sign-pattern feasibility is exactly point feasibility here:
        # monomials have constant sign on each orthant
        assert (v.status == "FEASIBLE") == found


def test_zero_witnesses():
    w = zero_witness_real_case(antisymmetric_weight_gram())
    assert w is not None
    assert w == [1, 1]
    w2 = zero_witness_real_case(antiweil_real_gram(),
                                [antiweil_real_constraint([1, 2, 0, 0])])
    assert w2 is not None
    # a definite form has no real zero vector
    one, z = gauss(1), gauss(0)
    definite = [[one, z], [z, one]]
    assert zero_witness_real_case(definite) is None


def test_weil_family_member():
    rep = weil_family_check((1, 0, 0, -1))
    assert rep["status"] == "IN_FAMILY"
    assert rep["s_value"] == "-2"
    assert rep["s_negative"] and rep["positive_definite"]
    assert rep["minors"] == ["1", "1", "2"]
    assert rep["float_oracle_agrees"]


def test_weil_family_nonmember():
    rep = weil_family_check((1, 0, 0, 1))
    assert rep["status"] == "NOT_IN_FAMILY"
    assert rep["s_value"] == "2"


def test_weil_family_scaling_invariance():
    base = weil_family_check((1, 1, 0, -2))
    assert base["status"] == "IN_FAMILY"
    scaled = weil_family_check(tuple(gauss(0, 2) * gauss(c)
                                     for c in (1, 1, 0, -2)))
    assert scaled["status"] == "IN_FAMILY"
    assert scaled["positive_definite"] == base["positive_definite"]


def test_weil_family_random_agreement_with_float_oracle():
    rng = random.Random(23)
    checked = 0
    while checked < 50:
        x = tuple(gauss(rng.randint(-3, 3), rng.randint(-3, 3))
                  for _ in range(4))
        if all(e.is_zero() for e in x):
            continue
        rep = weil_family_check(x, float_samples=40, seed=checked)
        if rep["status"] == "IN_FAMILY":
            assert rep["float_oracle_agrees"]
        checked += 1
