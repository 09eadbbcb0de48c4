"""Per-subset classification, the transfer reduction, and named example subsets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .atoms import AtomSet, enumerate_atoms
from .errors import ConsistencyError, ContractError
from .groups import Element, FiniteAbelianGroup, prime_factors
from .kernel import is_half_factorial, min_delta
from .sequences import SequenceVec, SupportSet


@dataclass(frozen=True)
class ClassificationRecord:
    subset: tuple[Element, ...]
    half_factorial: bool
    lcn: bool
    minimal_non_hf: bool
    decomposable: bool
    simple: bool
    min_delta: int
    davenport: int
    max_cross_number: Fraction
    atom_count: int

    def __post_init__(self):
        # flag consistency is part of the contract of every record
        if self.half_factorial and self.min_delta != 0:
            raise ConsistencyError("half-factorial subset with min_delta != 0")
        if not self.half_factorial and self.min_delta == 0:
            raise ConsistencyError("non-half-factorial subset with min_delta == 0")
        if self.minimal_non_hf and self.half_factorial:
            raise ConsistencyError("minimal_non_hf contradicts half_factorial")
        if self.simple and self.decomposable:
            raise ConsistencyError("simple subsets are indecomposable")


def _is_subset_half_factorial(atoms: AtomSet, removed: int) -> bool:
    """Half-factoriality of support-minus-one-element, by atom filtering.

    The atoms of the smaller set are exactly the atoms avoiding the removed
    position, so no re-enumeration is needed.
    """
    return all(k == 1 for a, k in zip(atoms.atoms, atoms.cross_numbers)
               if a.exponents[removed] == 0)


def is_minimal_non_half_factorial(atoms: AtomSet) -> bool:
    """Non-half-factorial with every proper subset half-factorial.

    Testing the maximal proper subsets suffices: half-factoriality is
    inherited downward (sequences over a subset are sequences over the
    whole set, with the same factorizations).
    """
    if all(k == 1 for k in atoms.cross_numbers):
        return False
    return all(_is_subset_half_factorial(atoms, i)
               for i in range(len(atoms.support)))


def is_decomposable(support: SupportSet) -> bool:
    """Some bipartition G1 + G2 spans the whole span as a direct sum.

    Uses |<G1>| * |<G2>| = |<G0>| as the direct-sum criterion; searches all
    2^(|G0|-1) - 1 bipartitions with the first element pinned to G1.
    """
    n = len(support)
    if n < 2:
        return False
    group = support.group
    elems = support.elements
    total = len(support.span())
    span_size: dict[frozenset, int] = {}

    def size_of(idxs: frozenset) -> int:
        hit = span_size.get(idxs)
        if hit is None:
            hit = len(group.subgroup_closure([elems[i] for i in idxs]))
            span_size[idxs] = hit
        return hit

    rest = range(1, n)
    for r in range(0, n - 1):
        for extra in itertools.combinations(rest, r):
            part1 = frozenset((0,) + extra)
            part2 = frozenset(i for i in range(n) if i not in part1)
            if size_of(part1) * size_of(part2) == total:
                return True
    return False


def is_simple(support: SupportSet) -> bool:
    """Some g has an independent complement that spans g, with no proper
    subset of the complement spanning g."""
    group = support.group
    elems = support.elements
    for i, g in enumerate(elems):
        rest = elems[:i] + elems[i + 1:]
        if not group.is_independent(rest):
            continue
        if g not in group.subgroup_closure(rest):
            continue
        if any(g in group.subgroup_closure(sub)
               for r in range(len(rest))
               for sub in itertools.combinations(rest, r)):
            continue
        return True
    return False


def classify(support: SupportSet, budget: int | None = None,
             atoms: AtomSet | None = None) -> ClassificationRecord:
    """Full classification of one support set."""
    if atoms is None:
        atoms = enumerate_atoms(support, budget)
    hf = is_half_factorial(atoms)
    d = min_delta(atoms)
    return ClassificationRecord(
        subset=support.elements,
        half_factorial=hf,
        lcn=all(k >= 1 for k in atoms.cross_numbers),
        minimal_non_hf=is_minimal_non_half_factorial(atoms),
        decomposable=is_decomposable(support),
        simple=is_simple(support),
        min_delta=d,
        davenport=atoms.davenport_constant() if len(atoms) else 0,
        max_cross_number=atoms.cross_number() if len(atoms) else Fraction(0),
        atom_count=len(atoms),
    )


# -- transfer reduction ---------------------------------------------------------

def satisfies_span_property(support: SupportSet) -> bool:
    """Every g lies in the span of the other elements."""
    group = support.group
    elems = support.elements
    return all(
        g in group.subgroup_closure(elems[:i] + elems[i + 1:])
        for i, g in enumerate(elems))


@dataclass(frozen=True)
class ReductionStep:
    position: int
    element: Element
    multiple: int
    replacement: Element


@dataclass(frozen=True)
class TransferReduction:
    """Composition of one-element replacements g -> m*g, with the sequence map."""

    original: SupportSet
    reduced: SupportSet
    steps: tuple[ReductionStep, ...]

    def apply(self, sequence: SequenceVec) -> SequenceVec:
        """Rewrite a zero-sum sequence over the original support to one over
        the reduced support; preserves cross numbers and sets of lengths."""
        if sequence.support != self.original:
            raise ContractError("sequence does not live over the original support")
        vec = list(sequence.exponents)
        for step in self.steps:
            v = vec[step.position]
            if v % step.multiple:
                raise ConsistencyError(
                    f"multiplicity {v} of {step.element} is not divisible "
                    f"by {step.multiple}")
            vec[step.position] = v // step.multiple
        return SequenceVec(self.reduced, tuple(vec))


def transfer_reduce(support: SupportSet, budget: int | None = None,
                    atoms: AtomSet | None = None) -> TransferReduction:
    """Reduce a minimal non-half-factorial set until every element lies in the
    span of the others, replacing one g by m*g per round.

    m = min{k : k*g in <G0 minus g>} always divides ord(g), so each round
    strictly decreases the order sum and the loop terminates.  The
    lexicographically first reducible g is picked each round to make the
    output deterministic.
    """
    if atoms is None:
        atoms = enumerate_atoms(support, budget)
    if not is_minimal_non_half_factorial(atoms):
        raise ContractError(
            "transfer reduction is defined for minimal non-half-factorial sets")
    group = support.group
    current = support
    steps: list[ReductionStep] = []
    for _ in range(sum(support.orders)):
        elems = current.elements
        candidates = []
        for i, g in enumerate(elems):
            m = group.min_multiple_in_span(g, elems[:i] + elems[i + 1:])
            if m > 1:
                candidates.append((g, i, m))
        if not candidates:
            break
        g, i, m = min(candidates)
        mg = group.mul(m, g)
        if not any(mg):
            raise ConsistencyError(f"reduction of {g} collapsed to 0")
        if mg in current:
            # ruled out for minimal non-half-factorial inputs
            raise ConsistencyError(
                f"replacement {mg} already present in {current.elements}")
        steps.append(ReductionStep(i, g, m, mg))
        current = SupportSet(
            group, elems[:i] + (mg,) + elems[i + 1:])
    else:
        raise ConsistencyError("transfer reduction failed to terminate")
    return TransferReduction(support, current, tuple(steps))


# -- named example families ------------------------------------------------------

NAMED_SET_KINDS = ("pm", "eps", "remark-4.6.1", "remark-4.6.2")


def _basis_vector(group: FiniteAbelianGroup, i: int) -> Element:
    return tuple(1 if j == i else 0 for j in range(len(group.orders)))


def build_named_set(kind: str, group: FiniteAbelianGroup | None = None,
                    r: int | None = None, g: Element | None = None) -> SupportSet:
    """Construct one of the named example subsets over the canonical basis.

    pm            {g, -g} for an element of maximal order (or a given g).
    eps           basis of C_p^s together with the sum of the basis, sum first.
    remark-4.6.1  the non-simple family in C9^(r-1) x C27.
    remark-4.6.2  the non-simple family in C2^(r-2) x C4 x C4.
    """
    if kind == "pm":
        if group is None:
            raise ContractError("kind 'pm' needs a group")
        if g is None:
            n = group.exponent
            g = next(e for e in group.nonzero_elements if group.order_of(e) == n)
        else:
            g = group.element(g)
        if group.order_of(g) <= 2:
            raise ContractError("kind 'pm' needs an element of order > 2")
        return SupportSet(group, (g, group.neg(g)))

    if kind == "eps":
        if group is None:
            raise ContractError("kind 'eps' needs a group")
        s = len(group.orders)
        p = group.orders[0] if group.orders else 0
        if s < 2 or any(o != p for o in group.orders) or prime_factors(p) != (p,):
            raise ContractError(
                f"kind 'eps' needs a group C_p^s with p prime and s >= 2, "
                f"got {group.spec_string()}")
        basis = [_basis_vector(group, i) for i in range(s)]
        e0 = group.element([1] * s)
        return SupportSet(group, (e0, *basis))

    if kind == "remark-4.6.1":
        group, r = _named_group(group, r, lambda rr: (9,) * (rr - 1) + (27,),
                                kind, minimum_r=3)
        basis = [_basis_vector(group, i) for i in range(r)]
        g_sum = group.element([1] * r)
        triples = tuple(group.mul(3, e) for e in basis[:-1])
        return SupportSet(group, (*triples, basis[-1], g_sum))

    if kind == "remark-4.6.2":
        group, r = _named_group(group, r, lambda rr: (2,) * (rr - 2) + (4, 4),
                                kind, minimum_r=3)
        basis = [_basis_vector(group, i) for i in range(r)]
        g_mix = group.element([1] * (r - 2) + [0, 1])
        middle = group.add(basis[r - 3], basis[r - 2])
        return SupportSet(
            group, (*basis[:r - 3], middle, basis[r - 2], basis[r - 1], g_mix))

    raise ContractError(f"unknown named-set kind {kind!r}; "
                        f"expected one of {NAMED_SET_KINDS}")


def _named_group(group: FiniteAbelianGroup | None, r: int | None,
                 shape, kind: str, minimum_r: int) -> tuple[FiniteAbelianGroup, int]:
    if group is None and r is None:
        raise ContractError(f"kind {kind!r} needs a group or a rank parameter")
    if r is None:
        r = len(group.orders)
    if r < minimum_r:
        raise ContractError(f"kind {kind!r} needs r >= {minimum_r}, got {r}")
    expected = FiniteAbelianGroup(shape(r))
    if group is None:
        group = expected
    elif group.orders != expected.orders:
        raise ContractError(
            f"kind {kind!r} at r={r} needs the group {expected.spec_string()}, "
            f"got {group.spec_string()}")
    return group, r
