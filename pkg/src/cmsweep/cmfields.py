"""
Group-theoretic models of Galois CM fields and CM-type combinatorics.

A Galois CM field is modeled by its Galois group together with the central
complex-conjugation involution tau; subfields are subgroups, and all the
multiplicity bookkeeping is coset counting.  No field arithmetic happens
here on purpose: the geometric inputs behind the multiplicity lemmas are
encoded axioms, and only their combinatorial conclusions are mechanized.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class CMFieldModel:
    """A finite group with a chosen central involution tau."""

    def __init__(self, elements, mul, identity, tau, labels=None):
        self.elements = tuple(elements)
        self.mul = mul
        self.identity = identity
        self.tau = tau
        self._labels = labels or {g: str(g) for g in self.elements}
        assert tau != identity and mul(tau, tau) == identity
        for g in self.elements:
            assert mul(tau, g) == mul(g, tau), "tau must be central"

    def label(self, g) -> str:
        return self._labels[g]

    def order_key(self, g):
        return self.elements.index(g)

    def subgroups(self):
        """All subgroups, via closures of small generating sets."""
        found = {frozenset([self.identity])}
        gens_pool = list(self.elements)
        for r in (1, 2, 3):
            for gens in combinations(gens_pool, r):
                found.add(self._closure(gens))
        return sorted(found, key=lambda s: (len(s), sorted(map(self.order_key, s))))

    def _closure(self, gens):
        elems = {self.identity}
        frontier = list(gens)
        while frontier:
            nxt = []
            for g in frontier:
                if g not in elems:
                    elems.add(g)
                    for h in list(elems):
                        nxt.append(self.mul(g, h))
                        nxt.append(self.mul(h, g))
            frontier = nxt
        return frozenset(elems)


# --- concrete models -------------------------------------------------------

def d4_model() -> CMFieldModel:
    """The dihedral group <a, x | a^4 = x^2 = 1, axa = x> with tau = a^2.

    Elements are pairs (k, e) standing for a^k x^e.
    """
    elements = [(k, e) for e in (0, 1) for k in range(4)]

    def mul(g, h):
        k, e = g
        l, f = h
        if e == 0:
            return ((k + l) % 4, f)
        return ((k - l) % 4, 1 - f)

    labels = {}
    for k, e in elements:
        word = {0: "1", 1: "a", 2: "a2", 3: "a3"}[k] if e == 0 else \
               {0: "x", 1: "ax", 2: "a2x", 3: "a3x"}[k]
        labels[(k, e)] = word
    return CMFieldModel(elements, mul, (0, 0), (2, 0), labels)


def cyclic_model(n: int) -> CMFieldModel:
    """Z/n with tau the unique element of order 2 (n even)."""
    assert n % 2 == 0
    elements = list(range(n))
    return CMFieldModel(elements, lambda g, h: (g + h) % n, 0, n // 2,
                        {g: f"g{g}" for g in elements})


def degree2_model() -> CMFieldModel:
    return cyclic_model(2)


# --- CM types and subfields ------------------------------------------------

@dataclass(frozen=True)
class CMType:
    model: CMFieldModel
    members: frozenset

    def __post_init__(self):
        m = self.model
        for g in m.elements:
            conj = m.mul(m.tau, g)
            assert (g in self.members) != (conj in self.members), \
                "exactly one of sigma, tau*sigma must lie in the type"

    def labels(self):
        return tuple(sorted((self.model.label(g) for g in self.members),
                            key=lambda s: self.model.order_key(
                                next(g for g in self.model.elements
                                     if self.model.label(g) == s))))


@dataclass(frozen=True)
class SubfieldModel:
    model: CMFieldModel
    subgroup: frozenset

    @property
    def is_totally_real(self) -> bool:
        return self.model.tau in self.subgroup

    @property
    def is_cm(self) -> bool:
        return not self.is_totally_real

    def cosets(self):
        """The cosets gH in a deterministic order."""
        m = self.model
        seen = set()
        out = []
        for g in m.elements:
            cs = frozenset(m.mul(g, h) for h in self.subgroup)
            if cs not in seen:
                seen.add(cs)
                out.append(cs)
        return out


@dataclass(frozen=True)
class MultiplicityVector:
    counts: tuple

    def multiset(self):
        return tuple(sorted(self.counts))


def restrict_multiplicities(phi: CMType, h: SubfieldModel) -> MultiplicityVector:
    """Per-coset count of type members: m_C = |Phi ∩ C|."""
    assert h.model is phi.model
    return MultiplicityVector(tuple(
        sum(1 for g in coset if g in phi.members) for coset in h.cosets()))


def quartic_multiplicity_predicate(mult: MultiplicityVector) -> bool:
    """The multiplicity pattern a degree-4 CM subfield of a simple CM
    fourfold must exhibit.  (The geometric content is an encoded axiom;
    this tests only the combinatorial condition.)"""
    return mult.multiset() == (0, 1, 1, 2)


def is_primitive(phi: CMType):
    """A CM type is primitive iff it is not induced from a proper CM
    subfield.  Returns (flag, witness_subgroup_or_None)."""
    m = phi.model
    for sub in m.subgroups():
        if len(sub) == 1:
            continue  # E itself, not proper
        h = SubfieldModel(m, sub)
        if not h.is_cm:
            continue
        mult = restrict_multiplicities(phi, h)
        if all(c in (0, len(sub)) for c in mult.counts):
            return False, sub
    return True, None


def induce_type(model: CMFieldModel, subgroup, coset_choices) -> CMType:
    """The CM type that is the union of the chosen cosets gH."""
    members = set()
    for cs in coset_choices:
        members |= set(cs)
    return CMType(model, frozenset(members))


# --- the dihedral analysis -------------------------------------------------

def d4_analysis() -> dict:
    """Enumerate CM types on the dihedral model, normalized by id ∈ Φ, and
    single out those whose index-2 totally-real-over subfield K1 = E^<x>
    shows the quartic multiplicity pattern; report their multiplicities
    over the second quartic subfield K2 = E^<ax>."""
    m = d4_model()
    k1 = SubfieldModel(m, frozenset([(0, 0), (0, 1)]))       # <x>
    k2 = SubfieldModel(m, frozenset([(0, 0), (1, 1)]))       # <ax>
    assert k1.is_cm and k2.is_cm

    # conjugation pairs {g, tau g}; a CM type picks one element per pair
    pairs = []
    seen = set()
    for g in m.elements:
        if g in seen:
            continue
        conj = m.mul(m.tau, g)
        seen |= {g, conj}
        pairs.append((g, conj))
    all_types = []
    idd = m.identity
    for bits in range(2 ** len(pairs)):
        members = set()
        for t, (g, conj) in enumerate(pairs):
            members.add(g if (bits >> t) & 1 == 0 else conj)
        if idd in members:
            all_types.append(CMType(m, frozenset(members)))

    surviving = []
    for phi in all_types:
        m1 = restrict_multiplicities(phi, k1)
        if not quartic_multiplicity_predicate(m1):
            continue
        m2 = restrict_multiplicities(phi, k2)
        surviving.append({
            "phi": list(phi.labels()),
            "k1_mults": list(m1.counts),
            "k2_mults": list(m2.counts),
        })
    surviving.sort(key=lambda rec: rec["phi"])
    return {
        "model": "dihedral order 8, tau = a^2",
        "normalization": "id in Phi",
        "total_types_with_id": len(all_types),
        "surviving_types": surviving,
    }


def _apply_words(m: CMFieldModel, g, a_image, x_image):
    """Image of g = a^k x^e under the substitution a -> a_image,
    x -> x_image (must define a group automorphism)."""
    k, e = g
    out = (0, 0)
    for _ in range(k):
        out = m.mul(out, a_image)
    if e:
        out = m.mul(out, x_image)
    return out


def d4_relabeled_analysis() -> dict:
    """Stability of the surviving types under the relabeling a -> a^3,
    x -> x: this is the automorphism fixing tau *and* both quartic
    subgroups <x>, <ax>, and it permutes the four surviving types among
    themselves.  The substitution a -> a^3, x -> ax is also an
    automorphism, but it swaps <x> with <ax>; it maps the survivors onto
    the types that survive the analysis with the two subfields exchanged
    (a duality, not an invariance), so it is reported separately."""
    m = d4_model()
    base = d4_analysis()
    originals = sorted(sorted(rec["phi"]) for rec in base["surviving_types"])

    def map_types(a_image, x_image):
        out = []
        label_to_elem = {m.label(g): g for g in m.elements}
        for rec in base["surviving_types"]:
            elems = frozenset(_apply_words(m, label_to_elem[s],
                                           a_image, x_image)
                              for s in rec["phi"])
            out.append(sorted(CMType(m, elems).labels()))
        return sorted(out)

    swapped = map_types((3, 0), (1, 1))  # a -> a^3, x -> ax
    # survivors of the analysis run with K1 and K2 exchanged
    k1 = SubfieldModel(m, frozenset([(0, 0), (0, 1)]))
    k2 = SubfieldModel(m, frozenset([(0, 0), (1, 1)]))
    dual = []
    for phi in _all_id_types(m):
        if quartic_multiplicity_predicate(restrict_multiplicities(phi, k2)):
            dual.append(sorted(phi.labels()))
    return {
        "original_types": originals,
        "mapped_types": map_types((3, 0), (0, 1)),  # a -> a^3, x -> x
        "dual_mapped_types": swapped,
        "dual_survivors": sorted(dual),
    }


def _all_id_types(m: CMFieldModel):
    pairs = []
    seen = set()
    for g in m.elements:
        if g in seen:
            continue
        conj = m.mul(m.tau, g)
        seen |= {g, conj}
        pairs.append((g, conj))
    out = []
    for bits in range(2 ** len(pairs)):
        members = set()
        for t, (g, conj) in enumerate(pairs):
            members.add(g if (bits >> t) & 1 == 0 else conj)
        if m.identity in members:
            out.append(CMType(m, frozenset(members)))
    return out
