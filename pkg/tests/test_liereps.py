"""Weight modules, invariant tensors, and the dimension-4 classification."""

from fractions import Fraction

import pytest

from cmsweep.liereps import (classify_dim4_faithful, external_product,
                             invariant_space, search_dim, sl2_irrep,
                             sp4_basis, sp4_standard_module, tensor_module,
                             wedge2_module, weil_layer_identity,
                             weil_wedge_fixed_by_block_sl, weyl_dim)


def test_weyl_dim_values():
    assert weyl_dim("A1", 3) == 4
    assert weyl_dim("B2", 0, 1) == 4
    assert weyl_dim("B2", 1, 0) == 5
    assert weyl_dim("A2", 1, 1) == 8      # adjoint
    assert weyl_dim("G2", 1, 0) == 7
    assert weyl_dim("A3", 1, 0, 0) == 4
    assert weyl_dim("A3", 0, 1, 0) == 6


def test_search_dim():
    assert search_dim("A2", 4)["solutions"] == []
    assert search_dim("G2", 4)["solutions"] == []
    assert search_dim("A1", 4)["solutions"] == [(3,)]
    assert search_dim("B2", 4)["solutions"] == [(0, 1)]


def test_classification_dim4():
    res = classify_dim4_faithful()
    assert [r["algebra_type"] for r in res] == ["A1", "A1xA1", "B2", "A3"]
    assert res[2]["highest_weight"] == (0, 1)


def _assert_annihilated(w, vec):
    for name in w.generator_names():
        img = w.act(name, vec)
        assert all(x == 0 for x in img), name


def test_invariant_wedge2_v3():
    w = wedge2_module(sl2_irrep(3))
    inv = invariant_space(w)
    assert len(inv) == 1
    support = {lab: c for lab, c in zip(w.basis_labels, inv[0]) if c != 0}
    ratio = support["v0^v3"] / support["v1^v2"]
    assert ratio == -3  # proportional to 3 v0^v3 - v1^v2
    _assert_annihilated(w, inv[0])


def test_invariant_tensor_square_v1xv1():
    prod = external_product(sl2_irrep(1), sl2_irrep(1))
    # the invariant bilinear form lives in the tensor square and is
    # symmetric: the wedge square has no invariant at all
    assert invariant_space(wedge2_module(prod)) == []
    w = tensor_module(prod, prod)
    inv = invariant_space(w)
    assert len(inv) == 1
    support = {lab: c for lab, c in zip(w.basis_labels, inv[0]) if c != 0}
    assert len(support) == 4
    signs = {lab: c / abs(c) for lab, c in support.items()}
    # product of the two epsilon forms: sign = parity of swapped factors
    assert sorted(signs.values()) == [-1, -1, 1, 1]
    _assert_annihilated(w, inv[0])


def test_invariant_wedge2_sp4():
    w = wedge2_module(sp4_standard_module())
    inv = invariant_space(w)
    assert len(inv) == 1
    support = {lab: c for lab, c in zip(w.basis_labels, inv[0]) if c != 0}
    assert support["e1^e3"] == support["e2^e4"]
    assert set(support) == {"e1^e3", "e2^e4"}
    _assert_annihilated(w, inv[0])


def test_sp4_basis_dimension():
    assert len(sp4_basis()) == 10


def test_block_sl_fixes_top_wedges():
    assert weil_wedge_fixed_by_block_sl((2, 2, 2, 2), samples=20, seed=1)
    bad = [[[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1)]]] * 4
    assert not weil_wedge_fixed_by_block_sl((2, 2, 2, 2), blocks=bad)


def test_weil_layer_identity_all_divisor_chains():
    chains = [(dk, d) for dk in (1, 2, 4, 8) for d in (1, 2, 4, 8)
              if dk % d == 0 and 8 % dk == 0]
    assert len(chains) == 10
    for deg_K, deg_k in chains:
        assert weil_layer_identity(deg_K, deg_k, 8)


def test_weil_layer_identity_rejects_bad_input():
    with pytest.raises(AssertionError):
        weil_layer_identity(3, 2, 8)
