"""Command-line front end.

Exit codes: 0 success, 1 infeasible system, 2 input error, 3 audit failure.
In ``--output json`` mode stdout carries exactly one JSON document;
diagnostics always go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .algebra import DEFAULT_TOL
from .bnb import ROW_ORDERS
from .candidates import distinct_candidates, extract_minimal_solutions
from .errors import FuzzyRelationError
from .feasibility import check_consistency, first_violated_row, index_sets, max_solution, potential_sets
from .instance import generate_random, load_instance, serialize_instance
from .oracle import property_audit
from .solver import INFEASIBLE, SolverConfig, solve, split_costs

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_AUDIT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _fmt(v: float) -> str:
    return format(float(v), ".10g")


def _vec(values) -> str:
    return "[" + ", ".join(_fmt(v) for v in values) + "]"


def _cols(cols) -> str:
    return "{" + ", ".join(str(j) for j in cols) + "}"


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _infeasible_message(inst, xbar, tol) -> str:
    row = first_violated_row(inst, xbar, tol)
    if row is None:
        # X-bar satisfies every row, so a potential set must be empty
        row = next(i + 1 for i, s in enumerate(potential_sets(inst, tol)) if not s)
    return f"infeasible: constraint row {row} cannot be satisfied (no solution exists)"


def _cmd_solve(args) -> int:
    inst = load_instance(args.input)
    report = solve(inst, SolverConfig(tol=args.tol, row_order=args.order, trace=bool(args.trace)))
    if args.trace and report.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for rec in report.trace:
                fh.write(json.dumps(rec) + "\n")
    if args.output == "json":
        _emit_json(report.to_dict())
    if report.status == INFEASIBLE:
        if args.output == "human":
            print(f"Step 1  maximum solution     Xbar = {_vec(report.max_solution)}")
            print("Step 2  consistency          A o Xbar != b")
        print(_infeasible_message(inst, report.max_solution, args.tol), file=sys.stderr)
        return EXIT_INFEASIBLE
    if args.output == "human":
        sets = report.index_sets
        costs = split_costs(inst.c)
        print(f"instance: {inst.name or args.input}  (m={inst.m}, n={inst.n})")
        print(f"Step 1  maximum solution     Xbar = {_vec(report.max_solution)}")
        print("Step 2  consistency          A o Xbar = b, solution set is nonempty")
        print("Step 3  index sets")
        for i, (pot, tig) in enumerate(zip(sets.potential, sets.tight), start=1):
            print(f"          J_{i} = {_cols(pot):<20} tight J_{i} = {_cols(tig)}")
        print(f"          |E| = {sets.e_cardinality}   |E_tight| = {sets.tight_cardinality}")
        print(f"Step 4  cost split           c+ = {_vec(costs.plus)}")
        print(f"                             c- = {_vec(costs.minus)}")
        s = report.stats
        print(f"Step 5  branch and bound     e* = {list(report.e_star)}   Z1 = {_fmt(report.z1)}")
        print(f"          nodes visited {s.nodes_visited}, paths completed {s.paths_completed}, "
              f"pruned {s.nodes_pruned}, incumbent updates {s.incumbent_updates}")
        print(f"Step 6  optimum              x* = {_vec(report.x_star)}")
        print(f"          objective c.x* = {_fmt(report.objective)}   (Z1 = {_fmt(report.z1)}, Z2 = {_fmt(report.z2)})")
    return EXIT_OK


def _cmd_check(args) -> int:
    inst = load_instance(args.input)
    xbar = max_solution(inst).point
    ok = check_consistency(inst, xbar, args.tol)
    sets = index_sets(inst, xbar, args.tol, strict=False)
    if args.output == "json":
        _emit_json({
            "consistent": ok,
            "max_solution": xbar.tolist(),
            "first_violated_row": None if ok else first_violated_row(inst, xbar, args.tol),
            "index_sets": sets.to_dict(),
        })
    else:
        print(f"Xbar = {_vec(xbar)}")
        print(f"consistent: {'yes' if ok else 'no'}")
        for i, (pot, tig) in enumerate(zip(sets.potential, sets.tight), start=1):
            print(f"J_{i} = {_cols(pot):<20} tight J_{i} = {_cols(tig)}")
        print(f"|E| = {sets.e_cardinality}")
        print(f"|E_tight| = {sets.tight_cardinality}")
    if not ok:
        print(_infeasible_message(inst, xbar, args.tol), file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    inst = load_instance(args.input)
    xbar = max_solution(inst).point
    if not check_consistency(inst, xbar, args.tol):
        if args.output == "json":
            _emit_json({"consistent": False, "minimal_solutions": []})
        print(_infeasible_message(inst, xbar, args.tol), file=sys.stderr)
        return EXIT_INFEASIBLE
    sets = index_sets(inst, xbar, args.tol)
    distinct = distinct_candidates(inst, args.tol, sets)
    minimal = extract_minimal_solutions(inst, args.tol, sets)
    if args.output == "json":
        _emit_json({
            "consistent": True,
            "tight_cardinality": sets.tight_cardinality,
            "distinct_candidates": len(distinct),
            "minimal_solutions": [p.to_dict() for p in minimal],
        })
    else:
        print(f"|E_tight| = {sets.tight_cardinality}, distinct candidates = {len(distinct)}, "
              f"pairwise minimal = {len(minimal)}")
        for p in minimal:
            print(f"e = {list(p.origin)}  X(e) = {_vec(p.point)}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.m < 1 or args.n < 1:
        raise InputError("--m and --n must be at least 1")
    inst = generate_random(args.m, args.n, args.seed, consistent=args.consistent,
                           grid=args.grid, name=args.name)
    text = serialize_instance(inst) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = load_instance(args.input)
    report = property_audit(inst, tol=args.tol, samples=args.samples, seed=args.seed, row_order=args.order)
    if args.output == "json":
        _emit_json(report.to_dict())
    else:
        print(f"audit of {report.instance_name}: |E| = {report.e_cardinality}, "
              f"|E_tight| = {report.tight_cardinality}, oracle Z1 = {report.oracle_z1}")
        for c in report.checks:
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.name}"
            if c.note:
                line += f"  ({c.note})"
            if not c.passed:
                line += f"  witness: {c.witness}"
            print(line)
    if not report.passed:
        print(f"audit failed: {', '.join(c.name for c in report.failures())}", file=sys.stderr)
        return EXIT_AUDIT
    if not report.consistent:
        print("infeasible: the system has no solution", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=_positive, default=DEFAULT_TOL, help="comparison tolerance (default 1e-9)")
    common.add_argument("--order", choices=ROW_ORDERS, default="given", help="branching row order")
    common.add_argument("--output", choices=("human", "json"), default="human")

    parser = _Parser(prog="lukfre", description="Linear optimization over max-Lukasiewicz fuzzy relation equations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve min c.x subject to A o x = b")
    p.add_argument("input", help="instance JSON file")
    p.add_argument("--trace", metavar="PATH", help="write branch-and-bound node records (JSON lines) here")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", parents=[common], help="maximum solution, consistency and index sets")
    p.add_argument("input")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="pairwise-minimal candidate solutions")
    p.add_argument("input")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("gen", help="write a random instance")
    p.add_argument("--m", type=int, required=True, help="number of equations")
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--consistent", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--grid", type=int, default=None, help="snap grades to multiples of 1/GRID")
    p.add_argument("--name", default=None)
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="brute-force audit of one instance")
    p.add_argument("input")
    p.add_argument("--samples", type=int, default=1000, help="box samples for the optimality check")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InputError, FuzzyRelationError, OSError) as exc:
        print(f"lukfre: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())
