import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockmonoid import (BudgetError, ContractError, FiniteAbelianGroup,
                         SupportSet, enumerate_atoms, enumeration_bound)
from oracles import grid_atoms

C5 = FiniteAbelianGroup((5,))
C33 = FiniteAbelianGroup((3, 3))
C22 = FiniteAbelianGroup((2, 2))
C244 = FiniteAbelianGroup((2, 4, 4))

PM5 = SupportSet(C5, ((1,), (4,)))
# e0 = e1 + e2 first, then the basis
EPS33 = SupportSet(C33, ((1, 1), (1, 0), (0, 1)))
FAMILY = SupportSet(C244, ((1, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)))

# the ten atoms of the C2xC4xC4 family at r=3, exponents in support order
FAMILY_ATOMS = {
    (4, 0, 0, 0): Fraction(1),          # (e1+e2)^4
    (0, 4, 0, 0): Fraction(1),          # e2^4
    (0, 0, 4, 0): Fraction(1),          # e3^4
    (0, 0, 0, 4): Fraction(1),          # g^4
    (2, 2, 0, 0): Fraction(1),          # (e1+e2)^2 e2^2
    (0, 0, 2, 2): Fraction(1),          # g^2 e3^2
    (1, 3, 3, 1): Fraction(2),          # g e3^3 (e1+e2) e2^3
    (3, 1, 3, 1): Fraction(2),          # g e3^3 (e1+e2)^3 e2
    (1, 3, 1, 3): Fraction(2),          # g^3 e3 (e1+e2) e2^3
    (3, 1, 1, 3): Fraction(2),          # g^3 e3 (e1+e2)^3 e2
}


def small_support(draw_orders=(2, 6), max_components=2, max_size=3):
    groups = st.builds(
        FiniteAbelianGroup,
        st.lists(st.integers(*draw_orders), min_size=1,
                 max_size=max_components).map(tuple))

    @st.composite
    def build(draw):
        group = draw(groups)
        nonzero = list(group.nonzero_elements)
        size = draw(st.integers(1, min(max_size, len(nonzero))))
        picked = draw(st.permutations(nonzero))[:size]
        return SupportSet(group, tuple(picked))

    return build()


class TestExamples:
    def test_pm_pair(self):
        atoms = enumerate_atoms(PM5)
        assert [a.exponents for a in atoms] == [(0, 5), (1, 1), (5, 0)]

    def test_basis_plus_sum(self):
        atoms = enumerate_atoms(EPS33)
        got = {a.exponents for a in atoms}
        assert got == {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 2, 2), (2, 1, 1)}
        assert [tuple(v) for v in grid_atoms(EPS33)] == \
            sorted(a.exponents for a in atoms)

    def test_family_inventory(self):
        atoms = enumerate_atoms(FAMILY)
        got = {a.exponents: k for a, k in zip(atoms.atoms, atoms.cross_numbers)}
        assert got == FAMILY_ATOMS

    def test_budget_refusal(self):
        with pytest.raises(BudgetError) as info:
            enumerate_atoms(PM5, budget=10)
        assert info.value.bound == enumeration_bound(PM5) == 36


class TestDerivedConstants:
    def test_davenport_pm(self):
        assert enumerate_atoms(PM5).davenport_constant() == 5

    def test_davenport_full_c22(self):
        support = SupportSet(C22, C22.nonzero_elements)
        atoms = enumerate_atoms(support)
        assert atoms.davenport_constant() == 3
        assert sorted(a.exponents for a in atoms) == grid_atoms(support)

    def test_davenport_family(self):
        assert enumerate_atoms(FAMILY).davenport_constant() == 8

    def test_cross_number_pm(self):
        assert enumerate_atoms(PM5).cross_number() == 1

    def test_cross_number_family(self):
        assert enumerate_atoms(FAMILY).cross_number() == 2

    def test_empty_atom_set_rejected(self):
        empty = SupportSet(C5, ())
        atoms = enumerate_atoms(empty)
        assert len(atoms) == 0
        with pytest.raises(ContractError):
            atoms.davenport_constant()


class TestInvariants:
    @settings(max_examples=60, deadline=None)
    @given(small_support())
    def test_grid_oracle_equivalence(self, support):
        if enumeration_bound(support) > 10 ** 5:
            return
        atoms = enumerate_atoms(support)
        assert sorted(a.exponents for a in atoms) == grid_atoms(support)

    @settings(max_examples=60, deadline=None)
    @given(small_support())
    def test_structure(self, support):
        atoms = enumerate_atoms(support)
        vectors = [a.exponents for a in atoms]
        # every atom is a nonempty zero-sum
        for a in atoms:
            assert a.length > 0 and a.is_zero_sum()
        # pairwise incomparable
        for v in vectors:
            for w in vectors:
                if v != w:
                    assert not all(a <= b for a, b in zip(v, w))
        # g^{ord g} present; multiplicities within bounds
        for i, o in enumerate(support.orders):
            pure = tuple(o if j == i else 0 for j in range(len(support)))
            assert pure in set(vectors)
        for v in vectors:
            for c, o in zip(v, support.orders):
                assert c <= o
                if c == o:
                    assert sum(v) == o  # only the pure power hits the cap

    def test_permutation_invariance(self):
        rng = random.Random(7)
        for support in (EPS33, FAMILY):
            base = {tuple(sorted(zip(support.elements, a.exponents)))
                    for a in enumerate_atoms(support)}
            elems = list(support.elements)
            for _ in range(3):
                rng.shuffle(elems)
                shuffled = SupportSet(support.group, tuple(elems))
                got = {tuple(sorted(zip(shuffled.elements, a.exponents)))
                       for a in enumerate_atoms(shuffled)}
                assert got == base


class TestRestrict:
    def test_matches_direct_enumeration(self):
        atoms = enumerate_atoms(FAMILY)
        sub = SupportSet(C244, ((0, 1, 0), (0, 0, 1), (1, 0, 1)))
        direct = enumerate_atoms(sub)
        assert [a.exponents for a in atoms.restrict(sub)] == \
            [a.exponents for a in direct]
