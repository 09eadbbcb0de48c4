"""Command-line interface.

Exit codes: 0 success, 1 a verify command found a counterexample (which would
falsify the implementation), 2 parse or budget errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import report as rpt
from .atoms import enumerate_atoms
from .classify import classify, transfer_reduce
from .config import Budgets, default_enumeration_budget
from .errors import BudgetError, ContractError, ParseError
from .kernel import integer_kernel, is_half_factorial, min_delta, min_delta_witness
from .lengths import distances_oracle, length_set
from .sequences import SequenceVec
from .specparse import parse_sequence, parse_specs
from .sweep import delta_star
from .verify import (verify_extremal_structure, verify_main_theorem,
                     verify_named_family, verify_p_group_m,
                     verify_pm_and_basis_families)


def _add_common(p, subset=True, fmt=True, budget=True):
    p.add_argument("--group", required=True, help="group spec, e.g. C2^2xC4")
    if subset:
        p.add_argument("--subset", required=True,
                       help="subset spec, e.g. \"(1);(4)\"")
    if fmt:
        p.add_argument("--format", choices=rpt.FORMATS, default="text")
    if budget:
        p.add_argument("--budget", type=int, default=None,
                       help="atom enumeration budget "
                            "(grid size bound; default from environment)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockmonoid",
        description="Exact factorization invariants of zero-sum sequence "
                    "monoids over finite abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atoms", help="enumerate the minimal zero-sum sequences")
    _add_common(p)

    p = sub.add_parser("lengths", help="set of factorization lengths of one sequence")
    _add_common(p)
    p.add_argument("--sequence", required=True,
                   help="sequence spec, e.g. \"(1)^5*(4)^5\"")

    p = sub.add_parser("min-delta", help="exact min Delta via the kernel lattice")
    _add_common(p)
    p.add_argument("--explain", action="store_true",
                   help="print one kernel vector realizing the gcd")

    p = sub.add_parser("delta-observed",
                       help="distances observed among short zero-sum sequences")
    _add_common(p)
    p.add_argument("--max-len", type=int, required=True)

    p = sub.add_parser("classify", help="full classification of one subset")
    _add_common(p)

    p = sub.add_parser("delta-star", help="whole-group sweep of minimal distances")
    _add_common(p, subset=False, budget=False)
    p.add_argument("--budget", type=int, default=16,
                   help="largest |G| the sweep accepts (default 16)")
    p.add_argument("--symmetry", action="store_true",
                   help="reuse results across coordinate-permutation orbits")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("m-of-g", help="max of min Delta over non-HF LCN subsets")
    _add_common(p, subset=False, budget=False)
    p.add_argument("--budget", type=int, default=16)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("transfer-reduce",
                       help="reduce a minimal non-HF set to span form")
    _add_common(p)
    p.add_argument("--check", type=int, default=0, metavar="N",
                   help="probe cross-number preservation on N random sequences")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="re-derive published identities")
    vsub = p.add_subparsers(dest="target", required=True)

    v = vsub.add_parser("thm-1.1")
    v.add_argument("--max-order", type=int, default=16)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=rpt.FORMATS, default="text")

    v = vsub.add_parser("prop-3.2")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=rpt.FORMATS, default="text")

    v = vsub.add_parser("thm-4.5")
    v.add_argument("--group", required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=rpt.FORMATS, default="text")

    v = vsub.add_parser("remark-4.6")
    v.add_argument("--which", type=int, choices=(1, 2), required=True)
    v.add_argument("--r", type=int, default=3)
    v.add_argument("--max-len", type=int, default=None,
                   help="oracle length bound (default 2*D(G0))")
    v.add_argument("--format", choices=rpt.FORMATS, default="text")

    v = vsub.add_parser("lemma-3.1")
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--format", choices=rpt.FORMATS, default="text")

    return parser


def _enumeration_budget(args) -> int:
    return args.budget if args.budget is not None else default_enumeration_budget()


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout

    if args.command == "atoms":
        group, support = parse_specs(args.group, args.subset)
        atoms = enumerate_atoms(support, _enumeration_budget(args))
        out.write(rpt.emit_atoms(atoms, args.format))
        return 0

    if args.command == "lengths":
        group, support = parse_specs(args.group, args.subset)
        atoms = enumerate_atoms(support, _enumeration_budget(args))
        seq = parse_sequence(args.sequence, support)
        budgets = Budgets.from_environment()
        lengths = length_set(seq, atoms, memo_limit=budgets.memo_limit)
        out.write(rpt.emit_lengths(seq, lengths, args.format))
        return 0

    if args.command == "min-delta":
        group, support = parse_specs(args.group, args.subset)
        atoms = enumerate_atoms(support, _enumeration_budget(args))
        d = min_delta(atoms)
        hf = is_half_factorial(atoms)
        kernel_rank = len(integer_kernel(atoms.exponent_matrix))
        witness = min_delta_witness(atoms) if args.explain else None
        out.write(rpt.emit_min_delta(support, d, kernel_rank, hf, witness,
                                     args.format))
        return 0

    if args.command == "delta-observed":
        group, support = parse_specs(args.group, args.subset)
        atoms = enumerate_atoms(support, _enumeration_budget(args))
        budgets = Budgets.from_environment()
        observed = distances_oracle(
            support, atoms, args.max_len,
            vector_limit=budgets.oracle_vector_limit,
            memo_limit=budgets.memo_limit)
        out.write(rpt.emit_distances(support, args.max_len, observed, args.format))
        return 0

    if args.command == "classify":
        group, support = parse_specs(args.group, args.subset)
        record = classify(support, _enumeration_budget(args))
        out.write(rpt.emit_classify(record, args.format))
        return 0

    if args.command == "delta-star":
        group, _ = parse_specs(args.group, None)
        report = delta_star(group, sweep_max_group=args.budget,
                            jobs=args.jobs, symmetry=args.symmetry)
        out.write(rpt.emit_sweep(report, args.format))
        return 0

    if args.command == "m-of-g":
        group, _ = parse_specs(args.group, None)
        report = delta_star(group, sweep_max_group=args.budget, jobs=args.jobs)
        if args.format == "json":
            out.write(json.dumps({"group": group.spec_string(),
                                  "m_of_g": report.m_of_g}, indent=2) + "\n")
        elif args.format == "csv":
            out.write(f"group,m_of_g\n{group.spec_string()},{report.m_of_g}\n")
        else:
            out.write(f"m({group.spec_string()}) = {report.m_of_g}\n")
        return 0

    if args.command == "transfer-reduce":
        group, support = parse_specs(args.group, args.subset)
        atoms = enumerate_atoms(support, _enumeration_budget(args))
        reduction = transfer_reduce(support, atoms=atoms)
        probes = 0
        if args.check:
            rng = random.Random(args.seed)
            for _ in range(args.check):
                seq = SequenceVec.empty(support)
                for _ in range(rng.randint(1, 6)):
                    seq = seq * rng.choice(atoms.atoms)
                image = reduction.apply(seq)
                if image.cross_number() != seq.cross_number():
                    raise ContractError(
                        f"cross number not preserved on {seq.format()}")
                probes += 1
        out.write(rpt.emit_transfer(reduction, probes, args.format))
        return 0

    if args.command == "verify":
        if args.target == "thm-1.1":
            result = verify_main_theorem(args.max_order, jobs=args.jobs)
        elif args.target == "prop-3.2":
            result = verify_p_group_m(jobs=args.jobs)
        elif args.target == "thm-4.5":
            group, _ = parse_specs(args.group, None)
            result = verify_extremal_structure(group, jobs=args.jobs)
        elif args.target == "remark-4.6":
            result = verify_named_family(args.which, r=args.r,
                                         oracle_max_len=args.max_len)
        else:
            result = verify_pm_and_basis_families(args.max_n)
        out.write(rpt.emit_verify(result, args.format))
        return 0 if result.ok else 1

    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    try:
        sys.exit(run())
    except (ParseError, BudgetError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
