"""The signed-permutation sweeps: verdict tables, witnesses, stable
subspace families, and sign-flip symmetry."""

import random

import pytest

from cmsweep.fields import ExactMatrix, eigen_decompose, field_create
from cmsweep.intlat import IntLattice
from cmsweep.torus import (ORDER4_FIELD, REJECTED_DIVISOR_TEST,
                           REJECTED_NO_DESCENT, REJECTED_RANK, SURVIVES_D4,
                           A4_Q, A4_QP, GenPermMatrix, M1, M2, P0, P2, P3,
                           P4, SignedGroup, all_subgroups_s4,
                           divisor_test, finite_route_verdict, mat_neg,
                           pair_analysis, signed_lift, stable_subspaces,
                           sweep_a4, sweep_dim1, sweep_klein4, sweep_order4,
                           transitive_subgroups_s4, _one_flip_lifts,
                           _order4_lifts)


def _verdicts(cases):
    return {cv.case_id: cv.verdict for cv in cases}


def test_transitive_subgroup_families():
    fams = transitive_subgroups_s4()
    assert [f["family"] for f in fams] == ["C4", "V", "D4", "A4", "S4"]
    counts = {f["family"]: len(f["subgroups"]) for f in fams}
    assert counts == {"C4": 3, "V": 1, "D4": 3, "A4": 1, "S4": 1}
    # brute force: transitive = single orbit on {0,1,2,3}
    brute = []
    for sub in all_subgroups_s4():
        orbit = {0}
        for p in sub:
            orbit |= {p[i] for i in orbit}
        for p in sub:
            orbit |= {p[i] for i in orbit}
        if orbit == {0, 1, 2, 3}:
            brute.append(frozenset(sub))
    listed = [frozenset(s) for f in fams for s in f["subgroups"]]
    assert sorted(map(sorted, brute)) == sorted(map(sorted, listed))


def test_sweep_dim1_all_divisor_rejected():
    cases = sweep_dim1()
    assert len(cases) == 12
    assert all(cv.verdict == REJECTED_DIVISOR_TEST for cv in cases)
    for cv in cases:
        wit = cv.certificate["element"]
        assert sorted(map(abs, wit)) == [0, 0, 1, 1]


def test_sweep_order4_table():
    got = _verdicts(sweep_order4())
    assert got == {
        "order4-pppp": REJECTED_DIVISOR_TEST,
        "order4-ppmm": REJECTED_DIVISOR_TEST,
        "order4-pmpm": REJECTED_DIVISOR_TEST,
        "order4-pmmp": REJECTED_DIVISOR_TEST,
        "order4-pppm": REJECTED_NO_DESCENT,
        "order4-ppmp": REJECTED_NO_DESCENT,
        "order4-pmpp": REJECTED_NO_DESCENT,
        "order4-pmmm": REJECTED_NO_DESCENT,
    }


def test_order4_m1_eigendata_and_m2_descent():
    assert ORDER4_FIELD == (-1, 2)
    f = field_create(ORDER4_FIELD)
    eig = {str(lam): vecs for lam, vecs in
           eigen_decompose(ExactMatrix.from_int(f, M1))}
    minus = eig["-1"]
    assert len(minus) == 1
    assert [c.as_fraction() for c in minus[0]] == [-1, 1, -1, 1]
    m2_cases = [cid for cid, m in _order4_lifts()
                if m == M2 or mat_neg(m) == M2]
    assert len(m2_cases) == 1
    got = _verdicts(sweep_order4())
    assert got[m2_cases[0]] == REJECTED_NO_DESCENT


KLEIN4_TABLE = {
    "klein4-oneflip-mppp": REJECTED_DIVISOR_TEST,
    "klein4-oneflip-pmpp": REJECTED_DIVISOR_TEST,
    "klein4-oneflip-ppmp": REJECTED_DIVISOR_TEST,
    "klein4-oneflip-pppm": REJECTED_DIVISOR_TEST,
    "klein4-p0-pure-planes": REJECTED_DIVISOR_TEST,
    "klein4-p0-p1": REJECTED_DIVISOR_TEST,
    "klein4-p0-p2": SURVIVES_D4,
    "klein4-p0-p3": SURVIVES_D4,
    "klein4-p0-p4": REJECTED_RANK,
    "klein4-p0-p2-q1": REJECTED_RANK,
    "klein4-p0-p2-q2": REJECTED_DIVISOR_TEST,
    "klein4-p0-p2-q3": REJECTED_DIVISOR_TEST,
    "klein4-p0-p3-q1p": REJECTED_RANK,
    "klein4-p0-p3-q2p": REJECTED_DIVISOR_TEST,
    "klein4-p0-p3-q3p": REJECTED_DIVISOR_TEST,
    "klein4-pp0-pure-planes": REJECTED_DIVISOR_TEST,
    "klein4-pp0-qq0": REJECTED_DIVISOR_TEST,
    "klein4-pp0-qq1": REJECTED_RANK,
    "klein4-pp1-qq0": REJECTED_RANK,
    "klein4-pp1-qq2": REJECTED_RANK,
    "klein4-pp2-qq1": REJECTED_RANK,
    "klein4-pp2-qq2": REJECTED_DIVISOR_TEST,
}


def test_sweep_klein4_table():
    assert _verdicts(sweep_klein4()) == KLEIN4_TABLE


def test_klein4_survivor_witnesses():
    by_id = {cv.case_id: cv for cv in sweep_klein4()}
    for cid, lat_rows in (("klein4-p0-p2", [[1, 3, -1, 3], [0, 4, -3, 5]]),
                          ("klein4-p0-p3", [[1, 3, -3, 1], [0, 4, -5, 3]])):
        cert = by_id[cid].certificate
        assert cert["witness_point"] == [1, 2]
        lat = IntLattice(4, cert["witness_lattice"])
        assert lat == IntLattice(4, lat_rows)
        flag, _ = divisor_test(lat)
        assert not flag  # survivor passes (i.e. is not rejected by) the test


def test_sweep_a4_all_rank_rejected():
    cases = sweep_a4()
    assert len(cases) == 16
    assert all(cv.verdict == REJECTED_RANK for cv in cases)


def test_stable_subspaces_examples():
    fams = stable_subspaces([M1], 2)
    lats = sorted(f.lattice.basis for f in fams if f.kind == "finite")
    assert lats == [((1, 0, -1, 0), (0, 1, 0, -1)),
                    ((1, 0, 1, 0), (0, 1, 0, 1))]
    fams = stable_subspaces([P0, P2], 2)
    assert len(fams) == 1 and fams[0].kind == "parametric"
    assert fams[0].constraints  # the surviving family carries a relation
    assert stable_subspaces([P0, P4], 2) == []


def test_pair_analysis_kinds():
    kind, _ = pair_analysis(P0, P2)
    assert kind == "family"
    kind, _ = pair_analysis(P0, A4_Q)
    assert kind == "family"
    kind, out = pair_analysis(P0, P4)
    assert kind == "none"


def test_divisor_sign_symmetry():
    """Negating any single generator of a one-matrix case leaves the
    verdict unchanged (the candidate vector set is sign-closed)."""
    gauss = field_create([-1])
    for cid, m in _one_flip_lifts():
        v1 = finite_route_verdict(cid, [m], gauss).verdict
        v2 = finite_route_verdict(cid, [mat_neg(m)], gauss).verdict
        assert v1 == v2


def test_signed_group_enumeration():
    g = SignedGroup([GenPermMatrix(M1)])
    assert len(g.elements) == 8  # order-4 cycle with -I
    perms = g.image_in_s4()
    assert len(perms) == 4


def test_signed_lift_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        perm = tuple(rng.sample(range(4), 4))
        signs = tuple(rng.choice((1, -1)) for _ in range(4))
        m = signed_lift(perm, signs)
        assert m.permutation == perm
        assert GenPermMatrix(m.rows).signs == m.signs
