"""Enumeration of the minimal zero-sum sequences (atoms) over a support set.

The enumerator is a depth-first search over support positions in fixed order,
adding one copy of an element at a time.  Along the branch it maintains two
sets of group elements:

    PS(w) = sums of all nonempty subsequences of the partial vector w,
    Q(w)  = sums of all proper nonempty subsequences of w.

A branch is abandoned as soon as 0 lands in Q(w): the partial selection then
contains a proper nonempty zero-sum subsequence, so no extension can be
minimal.  A vector w with sigma(w) = 0 and 0 not in Q(w) is exactly an atom,
so minimality is certified by the search state itself; the brute-force grid
filter in the test suite anchors this equivalence on small supports.

Two further prunings: exponents are capped at ord(g) (an atom with
v_g > ord(g) would contain g^{ord(g)} properly), and a branch dies when the
current deficit -sigma(w) is not reachable from the remaining support
positions (it lies outside the subgroup they generate).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod

from .errors import BudgetError, ContractError
from .sequences import SequenceVec, SupportSet


@dataclass(frozen=True)
class AtomSet:
    """All atoms over a support set, in lexicographic exponent-vector order."""

    support: SupportSet
    atoms: tuple[SequenceVec, ...]

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    @cached_property
    def exponent_matrix(self) -> tuple[tuple[int, ...], ...]:
        """|G0| x |atoms| matrix; column j is the exponent vector of atom j."""
        return tuple(
            tuple(a.exponents[i] for a in self.atoms)
            for i in range(len(self.support)))

    @cached_property
    def cross_numbers(self) -> tuple[Fraction, ...]:
        return tuple(a.cross_number() for a in self.atoms)

    @cached_property
    def _by_exponents(self) -> dict[tuple[int, ...], int]:
        return {a.exponents: j for j, a in enumerate(self.atoms)}

    def contains_vector(self, exponents) -> bool:
        return tuple(exponents) in self._by_exponents

    def davenport_constant(self) -> int:
        """Maximal atom length."""
        if not self.atoms:
            raise ContractError("Davenport constant of an empty atom set")
        return max(a.length for a in self.atoms)

    def cross_number(self) -> Fraction:
        """Maximal cross number over the atoms."""
        if not self.atoms:
            raise ContractError("cross number of an empty atom set")
        return max(self.cross_numbers)

    def restrict(self, subset: SupportSet) -> "AtomSet":
        """Atoms supported inside a subset of the support, re-indexed to it.

        Valid because a zero-sum sequence over the subset is minimal there
        iff it is minimal over the larger support.
        """
        positions = [self.support.position(g) for g in subset.elements]
        keep_zero = [i for i in range(len(self.support))
                     if self.support.elements[i] not in subset]
        picked = []
        for a in self.atoms:
            if all(a.exponents[i] == 0 for i in keep_zero):
                picked.append(SequenceVec(
                    subset, tuple(a.exponents[i] for i in positions)))
        picked.sort(key=lambda a: a.exponents)
        return AtomSet(subset, tuple(picked))


def enumeration_bound(support: SupportSet) -> int:
    """Grid size prod(ord(g)+1), the budget measure for enumerate_atoms."""
    return prod(o + 1 for o in support.orders)


def enumerate_atoms(support: SupportSet, budget: int | None = None) -> AtomSet:
    """All minimal nonempty zero-sum exponent vectors over the support.

    Exactly the minimal elements of {v != 0 : 0 <= v_g <= ord(g), sigma(v) = 0}
    under the componentwise order, sorted lexicographically.
    """
    bound = enumeration_bound(support)
    if budget is not None and bound > budget:
        raise BudgetError(
            f"atom enumeration bound {bound} exceeds budget {budget}; "
            f"raise the budget to proceed", bound=bound)

    group = support.group
    k = len(support)
    gens = support.elements
    ords = support.orders
    zero = group.zero

    # subgroup generated by the support suffix starting at each position
    suffix_span = [None] * (k + 1)
    suffix_span[k] = frozenset({zero})
    for i in range(k - 1, -1, -1):
        suffix_span[i] = group.subgroup_closure(gens[i:])

    # lazily grown "add g" maps, one per support element
    add_maps: list[dict] = [{} for _ in range(k)]

    def shifted(pos: int, elems):
        table = add_maps[pos]
        g = gens[pos]
        out = set()
        for x in elems:
            y = table.get(x)
            if y is None:
                y = group.add(x, g)
                table[x] = y
            out.add(y)
        return out

    empty: frozenset = frozenset()
    found: list[tuple[int, ...]] = []
    # frame: (position, exponent vector, sigma, PS, Q)
    stack = [(0, (0,) * k, zero, empty, empty)]
    while stack:
        pos, vec, sigma, ps, q = stack.pop()
        if sigma == zero and any(vec):
            if zero not in q:
                found.append(vec)
            continue  # any extension would contain this zero-sum properly
        if pos == k:
            continue
        if group.neg(sigma) not in suffix_span[pos]:
            continue  # the deficit cannot be repaired from here on
        stack.append((pos + 1, vec, sigma, ps, q))
        if vec[pos] < ords[pos]:
            g = gens[pos]
            if any(vec):
                q2 = frozenset(ps | shifted(pos, q) | {g})
                if zero in q2:
                    continue
            else:
                q2 = empty
            sigma2 = group.add(sigma, g)
            ps2 = q2 | {sigma2}
            vec2 = vec[:pos] + (vec[pos] + 1,) + vec[pos + 1:]
            stack.append((pos, vec2, sigma2, ps2, q2))

    found.sort()
    return AtomSet(support, tuple(SequenceVec(support, v) for v in found))
