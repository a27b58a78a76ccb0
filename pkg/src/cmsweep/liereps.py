"""
Small-dimensional representation bookkeeping: Weyl dimension formulas for
rank <= 3 types, explicit sl(2) weight modules and their tensor/wedge/End
constructions, exact invariant-vector solving, the sp(4) standard module
built from its symplectic form, and two combinatorial identities about
top-wedge layers of eigen-decomposed modules.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .fields import QQ, ExactMatrix

# ---------------------------------------------------------------------------
# plain Fraction matrix helpers
# ---------------------------------------------------------------------------

def _zeros(n, m):
    return [[Fraction(0)] * m for _ in range(n)]


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = _zeros(n, m)
    for i in range(n):
        for t in range(k):
            if a[i][t]:
                for j in range(m):
                    if b[t][j]:
                        out[i][j] += a[i][t] * b[t][j]
    return out


def _matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _bracket(a, b):
    return _matsub(_matmul(a, b), _matmul(b, a))


def _matscale(c, a):
    return [[c * x for x in row] for row in a]


def _mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _is_zero_mat(a):
    return all(x == 0 for row in a for x in row)


# ---------------------------------------------------------------------------
# weight modules
# ---------------------------------------------------------------------------

class WeightModule:
    """A vector space with named generator actions, organized into sl(2)
    triples (h, x, y).  Bracket identities are verified at construction:
    [h,x] = 2x, [h,y] = -2y, [x,y] = h per triple, and generators of
    distinct triples commute."""

    def __init__(self, basis_labels, actions, triples):
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        self.actions = dict(actions)
        self.triples = tuple(tuple(t) for t in triples)
        for hn, xn, yn in self.triples:
            h, x, y = self.actions[hn], self.actions[xn], self.actions[yn]
            assert _mat_eq(_bracket(h, x), _matscale(Fraction(2), x))
            assert _mat_eq(_bracket(h, y), _matscale(Fraction(-2), y))
            assert _mat_eq(_bracket(x, y), h)
        for t1, t2 in combinations(self.triples, 2):
            for n1 in t1:
                for n2 in t2:
                    assert _is_zero_mat(
                        _bracket(self.actions[n1], self.actions[n2]))

    def generator_names(self):
        return tuple(self.actions)

    def act(self, name, vec):
        m = self.actions[name]
        return [sum(m[i][j] * vec[j] for j in range(self.dim))
                for i in range(self.dim)]


def sl2_irrep(m: int) -> WeightModule:
    """V(m): h.v_i = (m-2i) v_i, y.v_i = (i+1) v_{i+1}, x.v_i = (m-i+1) v_{i-1}."""
    assert m >= 0
    n = m + 1
    h = _zeros(n, n)
    x = _zeros(n, n)
    y = _zeros(n, n)
    for i in range(n):
        h[i][i] = Fraction(m - 2 * i)
        if i + 1 < n:
            y[i + 1][i] = Fraction(i + 1)
        if i - 1 >= 0:
            x[i - 1][i] = Fraction(m - i + 1)
    return WeightModule([f"v{i}" for i in range(n)],
                        [("h", h), ("x", x), ("y", y)], [("h", "x", "y")])


def _tensor_action(a, na, b, nb):
    """Leibniz action a (x) 1 + 1 (x) b on the tensor basis (i, j)."""
    n = na * nb
    out = _zeros(n, n)
    for i in range(na):
        for j in range(nb):
            col = i * nb + j
            for i2 in range(na):
                if a[i2][i]:
                    out[i2 * nb + j][col] += a[i2][i]
            for j2 in range(nb):
                if b[j2][j]:
                    out[i * nb + j2][col] += b[j2][j]
    return out


def external_product(w1: WeightModule, w2: WeightModule) -> WeightModule:
    """V ⊠ W for two algebras acting on separate factors."""
    labels = [f"({l1}|{l2})" for l1 in w1.basis_labels for l2 in w2.basis_labels]
    acts = []
    z1 = _zeros(w1.dim, w1.dim)
    z2 = _zeros(w2.dim, w2.dim)
    for name, a in w1.actions.items():
        acts.append((f"{name}1", _tensor_action(a, w1.dim, z2, w2.dim)))
    for name, b in w2.actions.items():
        acts.append((f"{name}2", _tensor_action(z1, w1.dim, b, w2.dim)))
    triples = [tuple(f"{n}1" for n in t) for t in w1.triples] + \
              [tuple(f"{n}2" for n in t) for t in w2.triples]
    return WeightModule(labels, acts, triples)


def tensor_module(w1: WeightModule, w2: WeightModule) -> WeightModule:
    """V ⊗ W with the same algebra acting diagonally (generators matched
    by name)."""
    assert w1.generator_names() == w2.generator_names()
    assert w1.triples == w2.triples
    labels = [f"({l1}|{l2})" for l1 in w1.basis_labels for l2 in w2.basis_labels]
    acts = [(name, _tensor_action(w1.actions[name], w1.dim,
                                  w2.actions[name], w2.dim))
            for name in w1.generator_names()]
    return WeightModule(labels, acts, w1.triples)


def wedge2_module(w: WeightModule) -> WeightModule:
    """∧²V with the induced action."""
    n = w.dim
    pairs = list(combinations(range(n), 2))
    index = {p: t for t, p in enumerate(pairs)}
    labels = [f"{w.basis_labels[i]}^{w.basis_labels[j]}" for i, j in pairs]
    acts = []
    for name, a in w.actions.items():
        out = _zeros(len(pairs), len(pairs))
        for (i, j), col in index.items():
            # l.(e_i ^ e_j) = (l e_i) ^ e_j + e_i ^ (l e_j)
            for i2 in range(n):
                if a[i2][i] and i2 != j:
                    p, sign = ((i2, j), 1) if i2 < j else ((j, i2), -1)
                    out[index[p]][col] += sign * a[i2][i]
            for j2 in range(n):
                if a[j2][j] and j2 != i:
                    p, sign = ((i, j2), 1) if i < j2 else ((j2, i), -1)
                    out[index[p]][col] += sign * a[j2][j]
        acts.append((name, out))
    return WeightModule(labels, acts, w.triples)


def end_module(w: WeightModule) -> WeightModule:
    """End(V) = V ⊗ V* with l.f = l∘f - f∘l."""
    n = w.dim
    labels = [f"E{i}{j}" for i in range(n) for j in range(n)]
    acts = []
    for name, a in w.actions.items():
        out = _zeros(n * n, n * n)
        for i in range(n):
            for j in range(n):
                col = i * n + j
                for i2 in range(n):
                    if a[i2][i]:
                        out[i2 * n + j][col] += a[i2][i]
                for j2 in range(n):
                    if a[j][j2]:
                        out[i * n + j2][col] -= a[j][j2]
        acts.append((name, out))
    return WeightModule(labels, acts, w.triples)


def invariant_space(w: WeightModule):
    """Basis of { v : g.v = 0 for every generator }, exactly."""
    stacked = []
    for name in w.generator_names():
        stacked.extend(w.actions[name])
    mat = ExactMatrix(QQ, [[QQ.rational(x) for x in row] for row in stacked])
    return [[x.as_fraction() for x in v] for v in mat.kernel()]


# ---------------------------------------------------------------------------
# Weyl dimension formulas and the dimension-4 classification
# ---------------------------------------------------------------------------

ALGEBRA_DIMS = {"A1": 3, "A1xA1": 6, "A2": 8, "B2": 10, "G2": 14, "A3": 15}


def weyl_dim(algebra_type: str, *weights) -> int:
    """Exact closed-form dimension of the irreducible module with the
    given highest weight."""
    w = tuple(int(m) for m in weights)
    assert all(m >= 0 for m in w)
    if algebra_type == "A1":
        (m,) = w
        return m + 1
    if algebra_type == "A2":
        m1, m2 = w
        val = Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2), 2)
    elif algebra_type == "B2":
        m1, m2 = w
        val = Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2)
                       * (2 * m1 + m2 + 3), 6)
    elif algebra_type == "G2":
        m1, m2 = w
        val = Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2)
                       * (m1 + 2 * m2 + 3) * (m1 + 3 * m2 + 4)
                       * (2 * m1 + 3 * m2 + 5), 120)
    elif algebra_type == "A3":
        m1, m2, m3 = w
        val = Fraction((m1 + 1) * (m2 + 1) * (m3 + 1)
                       * (m1 + m2 + 2) * (m2 + m3 + 2)
                       * (m1 + m2 + m3 + 3), 12)
    else:
        raise ValueError(f"unknown algebra type {algebra_type!r}")
    assert val.denominator == 1
    return int(val)


_WEIGHT_ARITY = {"A1": 1, "A2": 2, "B2": 2, "G2": 2, "A3": 3}


def search_dim(algebra_type: str, target: int):
    """All highest weights of the given type with the target dimension.
    The search grid m_i <= target is safe because every factor of the
    closed forms is strictly increasing in each coordinate."""
    assert target >= 1
    arity = _WEIGHT_ARITY[algebra_type]
    sols = []
    grid = range(target + 1)
    from itertools import product as iproduct
    for w in iproduct(grid, repeat=arity):
        if weyl_dim(algebra_type, *w) == target:
            sols.append(w)
    return {"algebra_type": algebra_type, "target": target,
            "solutions": sols}


SP4_FORM = ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))


def sp4_basis():
    """Basis of sp(4) = { x : x^T s + s x = 0 } by exact linear solving."""
    s = [[Fraction(v) for v in row] for row in SP4_FORM]
    # 16 unknowns x[i][j]; equation (x^T s + s x)[i][j] = 0
    rows = []
    for i in range(4):
        for j in range(4):
            coeff = [Fraction(0)] * 16
            for t in range(4):
                coeff[4 * t + i] += s[t][j]      # (x^T s)[i][j] = x[t][i] s[t][j]
                coeff[4 * t + j] += s[i][t]      # (s x)[i][j] = s[i][t] x[t][j]
            rows.append([QQ.rational(c) for c in coeff])
    ker = ExactMatrix(QQ, rows).kernel()
    basis = []
    for v in ker:
        basis.append([[v[4 * i + j].as_fraction() for j in range(4)]
                      for i in range(4)])
    assert len(basis) == 10
    return basis


def sp4_standard_module() -> WeightModule:
    """The 4-dimensional standard module of sp(4), generators named g0..g9
    (no sl(2)-triple bookkeeping: bracket structure is implied by the
    defining equation)."""
    basis = sp4_basis()
    acts = [(f"g{t}", m) for t, m in enumerate(basis)]
    return WeightModule([f"e{i + 1}" for i in range(4)], acts, [])


def sl4_basis():
    """Basis of sl(4): elementary off-diagonal units and traceless diagonals."""
    out = []
    for i in range(4):
        for j in range(4):
            if i != j:
                m = _zeros(4, 4)
                m[i][j] = Fraction(1)
                out.append(m)
    for i in range(3):
        m = _zeros(4, 4)
        m[i][i], m[i + 1][i + 1] = Fraction(1), Fraction(-1)
        out.append(m)
    return out


def _images_independent(mats) -> bool:
    flat = [[QQ.rational(x) for row in m for x in row] for m in mats]
    return ExactMatrix(QQ, flat).rank() == len(mats)


def classify_dim4_faithful():
    """The four semisimple Lie algebra types with a faithful irreducible
    4-dimensional representation, assembled from the dimension search
    over all semisimple types of algebra dimension <= 15.

    Simple types are excluded/included by search_dim; products must have
    every factor acting by a faithful irreducible of dimension >= 2, so
    4 = 2 x 2 forces sl(2) x sl(2) (three or more factors need dim >= 8).
    The D-series starts at dim(D_l) = 2l^2 - 2 > 15.  Faithfulness is
    checked by exact rank of the realized generator images."""
    results = []
    # A1: V(3)
    a1 = search_dim("A1", 4)["solutions"]
    assert a1 == [(3,)]
    v3 = sl2_irrep(3)
    assert _images_independent([v3.actions[n] for n in ("h", "x", "y")])
    results.append({"algebra_type": "A1", "highest_weight": (3,),
                    "module": "V(3)"})
    # A1 x A1: V(1) x V(1), the only 2x2 product split
    prod = external_product(sl2_irrep(1), sl2_irrep(1))
    assert _images_independent([prod.actions[n]
                                for n in prod.generator_names()])
    results.append({"algebra_type": "A1xA1", "highest_weight": ((1,), (1,)),
                    "module": "V(1) boxtimes V(1)"})
    # A2 and G2 have no dimension-4 module
    assert search_dim("A2", 4)["solutions"] == []
    assert search_dim("G2", 4)["solutions"] == []
    # B2: the standard symplectic module, highest weight (0,1)
    b2 = search_dim("B2", 4)["solutions"]
    assert b2 == [(0, 1)]
    assert _images_independent(sp4_basis())
    results.append({"algebra_type": "B2", "highest_weight": (0, 1),
                    "module": "standard sp(4)"})
    # A3: the standard module (its dual is the other weight-(0,0,1) solution)
    a3 = search_dim("A3", 4)["solutions"]
    assert (1, 0, 0) in a3 and (0, 0, 1) in a3 and len(a3) == 2
    assert _images_independent(sl4_basis())
    results.append({"algebra_type": "A3", "highest_weight": (1, 0, 0),
                    "module": "standard sl(4)"})
    return results


# ---------------------------------------------------------------------------
# top-wedge layer identities
# ---------------------------------------------------------------------------

def _det(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    sign = 1
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * det


def _random_unimodular(n, rng, steps=8):
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for t in range(n):
            m[i][t] += c * m[j][t]
    return m


def weil_wedge_fixed_by_block_sl(block_dims, samples=20, seed=0,
                                 blocks=None) -> bool:
    """For block-diagonal matrices whose blocks have determinant 1, the
    induced action on the direct sum of per-block top wedges is the
    identity.  Checked exactly on sampled random unimodular blocks (or on
    the given blocks)."""
    n = block_dims[0]
    assert all(d == n for d in block_dims)
    rng = random.Random(seed)
    runs = ([blocks] if blocks is not None else
            [[_random_unimodular(n, rng) for _ in block_dims]
             for _ in range(samples)])
    for blist in runs:
        assert len(blist) == len(block_dims)
        # top wedge of an n x n block is multiplication by its determinant
        if any(_det(b) != 1 for b in blist):
            return False
    return True


def weil_layer_identity(deg_K: int, deg_k: int, dim_V: int) -> bool:
    """Labeled index-set identity: with n = dim/deg_K, l = deg_K/deg_k,
    m = dim/deg_k, the layer ∧_k^l(∧_K^n V) and the layer ∧_k^m V have
    the same eigen-label decomposition ⊕_τ ⊗_{σ|_k = τ} ∧^n V_σ.

    Embeddings of K are labels 0..deg_K-1; restriction to k is reduction
    mod deg_k; V_σ has basis labels (σ, t), t < n."""
    assert deg_K % deg_k == 0 and dim_V % deg_K == 0
    n = dim_V // deg_K
    l = deg_K // deg_k
    m = dim_V // deg_k
    sigmas = list(range(deg_K))
    taus = list(range(deg_k))

    def restrict(sigma):
        return sigma % deg_k

    # side A: per-sigma top wedges of V_sigma, then the l-th layer over k
    # groups the l lines above a common tau and tensors them
    top = {s: frozenset((s, t) for t in range(n)) for s in sigmas}
    side_a = {}
    for tau in taus:
        fiber = [top[s] for s in sigmas if restrict(s) == tau]
        assert len(fiber) == l
        combined = frozenset().union(*fiber)
        assert len(combined) == l * n  # tensor factors are disjoint
        side_a[tau] = combined
    # side B: the tau-eigenspace of V over k has basis {(s, t): s|k = tau};
    # its top wedge (degree m) uses every label once
    side_b = {}
    for tau in taus:
        basis = frozenset((s, t) for s in sigmas if restrict(s) == tau
                          for t in range(n))
        assert len(basis) == m
        side_b[tau] = basis
    return side_a == side_b
