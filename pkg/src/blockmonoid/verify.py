"""Verification routines behind the `verify` CLI subcommands.

Each routine recomputes a published identity from scratch and reports one
line per check.  A failed check falsifies the implementation, not the
identity, and flips the process exit code.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .atoms import enumerate_atoms
from .classify import build_named_set, classify
from .groups import FiniteAbelianGroup, abelian_groups_of_order
from .kernel import min_delta
from .lengths import distances_oracle
from .sequences import SupportSet
from .sweep import SweepReport, delta_star


@dataclass
class VerifyResult:
    name: str
    ok: bool = True
    lines: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, label: str, passed: bool):
        self.lines.append(f"{label} {'OK' if passed else 'FAIL'}")
        self.ok = self.ok and passed


def expected_max_delta_star(group: FiniteAbelianGroup) -> int:
    """max{exp(G) - 2, r(G) - 1} with the max-of-empty-set-is-0 convention."""
    if group.size <= 2:
        return 0
    return max(group.exponent - 2, group.rank - 1)


def verify_main_theorem(max_order: int = 16, jobs: int = 1,
                        reports: dict | None = None) -> VerifyResult:
    """Sweep every abelian group of order <= max_order and compare
    max of the minimal distances against max{exp(G)-2, r(G)-1}
    (empty for orders <= 2)."""
    result = VerifyResult("thm-1.1")
    for order in range(1, max_order + 1):
        for group in abelian_groups_of_order(order):
            report = delta_star(group, sweep_max_group=None, jobs=jobs)
            if reports is not None:
                reports[group.orders] = report
            if order <= 2:
                result.check(
                    f"{group.spec_string()}: delta* = {{}} (order <= 2)",
                    report.delta_star == ())
                continue
            want = expected_max_delta_star(group)
            result.check(
                f"{group.spec_string()}: max delta* = {report.max_delta_star} "
                f"= max{{{group.exponent - 2},{group.rank - 1}}}",
                report.max_delta_star == want)
    return result


def verify_cyclic_second_maximum(report: SweepReport) -> bool:
    """For cyclic groups of order n > 3:
    max(delta* minus {n-2}) = floor(n/2) - 1."""
    n = report.group.size
    rest = [d for d in report.delta_star if d != n - 2]
    return max(rest, default=0) == n // 2 - 1


P_GROUP_M_CASES: tuple[tuple[int, ...], ...] = (
    (2, 2), (2, 2, 2), (2, 4), (4,), (8,), (9,), (3, 3))


def verify_p_group_m(jobs: int = 1) -> VerifyResult:
    """m(G) = r(G) - 1 for the fixed list of small p-groups."""
    result = VerifyResult("prop-3.2")
    for orders in P_GROUP_M_CASES:
        group = FiniteAbelianGroup(orders)
        report = delta_star(group, sweep_max_group=None, jobs=jobs)
        result.check(
            f"{group.spec_string()}: m(G) = {report.m_of_g} = r-1 = {group.rank - 1}",
            report.m_of_g == group.rank - 1)
    return result


def verify_extremal_structure(group: FiniteAbelianGroup, jobs: int = 1,
                              report: SweepReport | None = None) -> VerifyResult:
    """Structure of the minimal non-half-factorial sets attaining the maximum:

    r < n-1: every attainer is {g, -g} with ord(g) = n.
    r = n-1: attainers are either such pairs or LCN-sets of size r+1.
    r >= n:  every attainer is an LCN-set of size r+1 with the span-gap
             property, and (n odd) some element has an independent complement.
    LCN attainers additionally satisfy the atom-inventory bounds.
    """
    result = VerifyResult("thm-4.5")
    if report is None:
        report = delta_star(group, sweep_max_group=None, jobs=jobs)
    n = group.exponent
    r = group.rank
    name = group.spec_string()
    result.data["extremal_count"] = len(report.extremal)
    for ex in report.extremal:
        label = f"{name} {ex.subset}"
        if r < n - 1:
            result.check(f"{label}: pm pair of full order", ex.pm_pair_full_order)
        elif r == n - 1:
            result.check(
                f"{label}: pm pair or LCN of size r+1",
                ex.pm_pair_full_order or (
                    ex.lcn and ex.size_is_rank_plus_one
                    and ex.no_two_element_span_gap))
        else:
            result.check(
                f"{label}: LCN of size r+1 with span gaps",
                ex.lcn and ex.size_is_rank_plus_one and ex.no_two_element_span_gap)
        if ex.lcn:
            result.check(f"{label}: unit atoms have support <= n/2",
                         ex.unit_atoms_support_bound is True)
            result.check(f"{label}: heavy atoms have k < r and atom complement",
                         ex.heavy_atoms_complement_atom is True)
            if n % 2 == 1 and r >= n - 1:
                result.check(f"{label}: independent complement exists (n odd)",
                             ex.has_independent_complement)
    return result


def verify_pm_and_basis_families(max_n: int = 10) -> VerifyResult:
    """{g,-g} in C_n gives 3 atoms and min distance n-2 for n in [3, max_n];
    the basis-plus-sum set in C_p^s gives min distance s-1 for small (p, s)."""
    result = VerifyResult("lemma-3.1")
    for n in range(3, max_n + 1):
        group = FiniteAbelianGroup((n,))
        record = classify(build_named_set("pm", group))
        result.check(
            f"C{n} pm pair: atoms = {record.atom_count}, "
            f"min delta = {record.min_delta} (want {n - 2})",
            record.atom_count == 3 and record.min_delta == n - 2
            and record.minimal_non_hf)
    for p, s in ((2, 2), (2, 3), (3, 2), (5, 2)):
        group = FiniteAbelianGroup((p,) * s)
        record = classify(build_named_set("eps", group))
        result.check(
            f"C{p}^{s} basis-plus-sum: min delta = {record.min_delta} "
            f"(want {s - 1})",
            record.min_delta == s - 1)
    return result


# -- the two named example families -----------------------------------------------


def expected_family_atoms(which: int, support: SupportSet) -> dict[tuple[int, ...], Fraction]:
    """Expected atom inventory (exponent vector -> cross number), any r >= 3.

    Exponent positions follow the construction order of build_named_set.
    """
    r = len(support.group.orders)
    k = len(support)
    expected: dict[tuple[int, ...], Fraction] = {}

    def vec(assignments: dict[int, int]) -> tuple[int, ...]:
        out = [0] * k
        for pos, mult in assignments.items():
            out[pos] = mult
        return tuple(out)

    if which == 1:
        # support order: 3e_1 ... 3e_{r-1}, e_r, g
        e_r, g = k - 2, k - 1
        for i in range(r - 1):
            expected[vec({i: 3})] = Fraction(1)
        expected[vec({e_r: 27})] = Fraction(1)
        expected[vec({g: 27})] = Fraction(1)
        expected[vec({g: 9, e_r: 18})] = Fraction(1)
        expected[vec({g: 18, e_r: 9})] = Fraction(1)
        for a, c in ((3, 2), (6, 1), (12, 2), (15, 1), (21, 2), (24, 1)):
            entry = {i: c for i in range(r - 1)}
            entry.update({g: a, e_r: 27 - a})
            heavy = Fraction(2 * r + 1, 3) if c == 2 else Fraction(r + 2, 3)
            expected[vec(entry)] = heavy
    elif which == 2:
        # support order: e_1 ... e_{r-3}, e_{r-2}+e_{r-1}, e_{r-1}, e_r, g
        mid, e_r1, e_r, g = k - 4, k - 3, k - 2, k - 1
        for i in range(r - 3):
            expected[vec({i: 2})] = Fraction(1)
        for pos in (mid, e_r1, e_r, g):
            expected[vec({pos: 4})] = Fraction(1)
        expected[vec({mid: 2, e_r1: 2})] = Fraction(1)
        expected[vec({g: 2, e_r: 2})] = Fraction(1)
        for a, b in ((1, 1), (1, 3), (3, 1), (3, 3)):
            entry = {i: 1 for i in range(r - 3)}
            entry.update({g: a, e_r: 4 - a, mid: b, e_r1: 4 - b})
            expected[vec(entry)] = Fraction(r + 1, 2)
    else:
        raise ValueError(f"which must be 1 or 2, got {which}")
    return expected


def verify_named_family(which: int, r: int = 3,
                        oracle_max_len: int | None = None) -> VerifyResult:
    """Check the atom inventory, min distance, and structural flags of the
    named non-simple families; with an oracle pass for which=1."""
    result = VerifyResult(f"remark-4.6.{which}")
    support = build_named_set(f"remark-4.6.{which}", r=r)
    group = support.group
    atoms = enumerate_atoms(support)
    expected = expected_family_atoms(which, support)

    got = {a.exponents: kv for a, kv in zip(atoms.atoms, atoms.cross_numbers)}
    result.check(f"atom inventory matches ({len(expected)} atoms)", got == expected)

    d = min_delta(atoms)
    result.check(f"min delta = {d} = r-1", d == r - 1)

    record = classify(support, atoms=atoms)
    result.check("minimal non-half-factorial LCN-set",
                 record.minimal_non_hf and record.lcn)
    result.check("not simple", not record.simple)

    elems = support.elements
    if which == 1:
        g_sum, e_r = elems[-1], elems[-2]
        without = lambda x: tuple(e for e in elems if e != x)
        result.check("(e_r, g) dependent",
                     not group.is_independent((e_r, g_sum)))
        result.check("complements of g and e_r independent",
                     group.is_independent(without(g_sum))
                     and group.is_independent(without(e_r)))
        result.check("g and e_r outside their complement spans",
                     g_sum not in group.subgroup_closure(without(g_sum))
                     and e_r not in group.subgroup_closure(without(e_r)))
        max_len = oracle_max_len
        if max_len is None:
            max_len = 2 * atoms.davenport_constant()
        observed = distances_oracle(support, atoms, max_len)
        result.check(
            f"oracle at max_len={max_len} sees {observed}: multiples of {d}, "
            f"minimum {d}",
            bool(observed) and min(observed) == d
            and all(x % d == 0 for x in observed))
    else:
        result.check("no element has an independent complement",
                     not any(group.is_independent(elems[:i] + elems[i + 1:])
                             for i in range(len(elems))))
        result.check("min delta = max{exp-2, r-1}",
                     d == expected_max_delta_star(group))
    result.data["atom_count"] = len(atoms)
    result.data["min_delta"] = d
    return result
