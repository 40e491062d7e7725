"""Command-line surface.

Commands: solve, verify, check-verifier, reduce, check-reduction,
search-via-oracle, simulate, scaling, list-problems.

Exit codes: 0 success or PASS, 1 FAIL or violations, 2 usage error,
3 budget or search-space exhaustion.  ``--records`` switches to
tab-separated rows behind a leading ``#`` schema comment, stable enough
to grade against; human mode prints the same payload without framing.
The NONDEC_MAX_STEPS environment variable overrides the default step
budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import nondet, problems, reductions, solvers, spaces, verifiers
from .encodings import (
    Malformed,
    encode_graph,
    make_graph,
    parse_cnf,
    parse_graph,
    parse_natural,
)
from .solvers import BudgetExceeded, StepBudget, UnknownProblem
from .verifiers import SearchSpaceTooLarge, UnknownKind, VerifierTimeout

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


def _default_budget(args) -> StepBudget:
    if getattr(args, "max_steps", None):
        return StepBudget(args.max_steps)
    env = os.environ.get("NONDEC_MAX_STEPS")
    if env is not None:
        try:
            return StepBudget(int(env))
        except ValueError as exc:
            raise _UsageError(f"NONDEC_MAX_STEPS must be a positive integer: {exc}")
    return StepBudget()


def _instance_from(args) -> str:
    if args.instance is not None and args.from_file is not None:
        raise _UsageError("give the instance with -w or -f, not both")
    if args.instance is not None:
        return args.instance
    if args.from_file is not None:
        try:
            with open(args.from_file, "r", encoding="ascii") as handle:
                text = handle.read()
        except OSError as exc:
            raise _UsageError(f"cannot read instance file: {exc}")
        return text.rstrip("\n")
    raise _UsageError("an instance is required (-w TEXT or -f FILE)")


def _add_instance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-w", dest="instance", default=None,
                        help="instance text, taken verbatim (quote it)")
    parser.add_argument("-f", dest="from_file", default=None,
                        help="read the instance from a file instead")


def _emit(out, records: bool, schema: str, rows: list[str]) -> None:
    if records:
        print(f"# {schema}", file=out)
    for row in rows:
        print(row, file=out)


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nondec",
        description="computational problems over ASCII strings: solve, "
                    "verify, certify, reduce, simulate")
    parser.add_argument("--records", action="store_true",
                        help="machine-readable output: tab rows behind a # schema line")
    parser.add_argument("--max-steps", type=int, default=None,
                        help="step budget per program/verifier call (default 10^6)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="print the full solution set, sorted")
    p.add_argument("-p", dest="problem", required=True)
    _add_instance_flags(p)

    p = sub.add_parser("verify", help="run a verifier on (instance, solution, hint)")
    p.add_argument("-p", dest="problem", required=True)
    _add_instance_flags(p)
    p.add_argument("-s", dest="solution", required=True)
    p.add_argument("-H", dest="hint", default="")

    p = sub.add_parser("check-verifier",
                       help="certify the three verifier axioms on a desk-scale space")
    p.add_argument("-p", dest="problem", required=True)
    p.add_argument("--adversarial", choices=verifiers.ADVERSARIAL_KINDS, default=None,
                   help="check a deliberately broken verifier instead of the shipped one")
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-m", type=int, default=60)
    p.add_argument("--max-clauses", type=int, default=2)
    p.add_argument("--hint-bound", type=int, default=verifiers.DEFAULT_STRING_BOUND)
    p.add_argument("--strict", action="store_true",
                   help="require every correct solution to be verifiable")

    p = sub.add_parser("reduce", help="apply a shipped reduction's instance map")
    p.add_argument("-r", dest="reduction", required=True,
                   choices=reductions.shipped_reduction_names())
    _add_instance_flags(p)

    p = sub.add_parser("check-reduction",
                       help="check a shipped reduction over a desk-scale space")
    p.add_argument("-r", dest="reduction", required=True,
                   choices=reductions.shipped_reduction_names())
    p.add_argument("--max-vertices", type=int, default=3)
    p.add_argument("--max-clauses", type=int, default=2)

    p = sub.add_parser("search-via-oracle",
                       help="solve a search problem with a decision oracle")
    p.add_argument("-p", dest="problem", required=True,
                   choices=("Factor", "HamCycle", "Sat"))
    _add_instance_flags(p)

    p = sub.add_parser("simulate",
                       help="explore a guess-and-verify computation tree")
    p.add_argument("-p", dest="problem", required=True)
    _add_instance_flags(p)
    p.add_argument("--order", choices=("lex", "reverse", "parallel"), default="lex")
    p.add_argument("--max-paths", type=int, default=nondet.DEFAULT_MAX_PATHS)

    p = sub.add_parser("scaling", help="measure step growth and fit both models")
    p.add_argument("--runner", required=True,
                   choices=("satd-bruteforce", "cycle-walk", "trial-division"))
    p.add_argument("--sizes", required=True,
                   help="comma-separated instance sizes, at least four")

    sub.add_parser("list-problems", help="list registered problem names")
    return parser


def _cmd_solve(args, out) -> int:
    problem = problems.get_problem(args.problem)
    solution_set = problems.solution_set(problem, _instance_from(args),
                                         _default_budget(args))
    _emit(out, args.records, "solution", sorted(solution_set))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    verifier = verifiers.verifier_for(args.problem)
    verdict = verifier.check(_instance_from(args), args.solution, args.hint,
                             _default_budget(args))
    _emit(out, args.records, "verdict", [verdict])
    return EXIT_OK if verdict == "yes" else EXIT_FAIL


def _verifier_space(problem: str, args) -> list[str]:
    name = solvers.canonical_problem_name(problem)
    if name in ("HamCycle", "HamCycleD", "HamCycleEdge"):
        return list(spaces.all_graphs(args.max_vertices))
    if name in ("DirectedHamCycle", "DirectedHamCycleD"):
        return list(spaces.all_graphs(args.max_vertices, directed=True))
    if name in ("Factor", "FactorD"):
        return list(spaces.naturals(1, args.max_m))
    if name == "FactorInRangeD":
        return list(spaces.factor_range_triples(min(args.max_m, 24)))
    return list(spaces.all_cnfs(args.max_clauses))


def _cmd_check_verifier(args, out) -> int:
    if args.adversarial is not None:
        verifier = verifiers.adversarial_verifier(args.adversarial)
    else:
        verifier = verifiers.verifier_for(args.problem)
    space = _verifier_space(args.problem, args)
    report = verifiers.check_verifier_axioms(
        verifier, args.problem, space, string_bound=args.hint_bound,
        strict=args.strict, budget=_default_budget(args))
    if args.records:
        print(report.to_records(), file=out)
    else:
        print(report.summary(), file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_reduce(args, out) -> int:
    reduction = reductions.get_reduction(args.reduction)
    _emit(out, args.records, "instance",
          [reductions.apply_polyreduction(reduction, _instance_from(args))])
    return EXIT_OK


def _reduction_space(reduction, args) -> list[str]:
    source = solvers.canonical_problem_name(reduction.source)
    if source.startswith("Directed"):
        return list(spaces.all_graphs(args.max_vertices, directed=True))
    if source.startswith("Sat"):
        return list(spaces.all_cnfs(args.max_clauses, ("x", "y")))
    return list(spaces.all_graphs(args.max_vertices))


def _cmd_check_reduction(args, out) -> int:
    reduction = reductions.get_reduction(args.reduction)
    space = _reduction_space(reduction, args)
    if isinstance(reduction, reductions.GeneralReduction):
        report = reductions.check_general_reduction(reduction, space)
    else:
        report = reductions.check_polyreduction(reduction, space)
    if args.records:
        print(report.to_records(), file=out)
    else:
        status = "PASS" if report.ok else "FAIL"
        print(f"{status}: {report.reduction} over {report.instances_checked} "
              f"instances, {len(report.mismatches)} mismatches", file=out)
        for mismatch in report.mismatches[:10]:
            print(f"  {mismatch.instance!r}: source {mismatch.source_verdict}, "
                  f"target {mismatch.target_verdict} ({mismatch.status})", file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_search_via_oracle(args, out) -> int:
    w = _instance_from(args)
    budget = _default_budget(args)
    if args.problem == "Factor":
        m = parse_natural(w)
        if m is None:
            raise _UsageError(f"{w!r} is not a decimal natural")
        oracle = reductions.exact_oracle("FactorInRangeD", budget)
        answer = reductions.factor_search_via_oracle(m, oracle)
    elif args.problem == "HamCycle":
        try:
            g = parse_graph(w)
        except Malformed as exc:
            raise _UsageError(f"bad graph instance: {exc}")
        oracle = reductions.exact_oracle("HamCycleD", budget)
        answer = reductions.hamcycle_search_via_oracle(g, oracle)
    else:
        try:
            f = parse_cnf(w)
        except Malformed as exc:
            raise _UsageError(f"bad CNF instance: {exc}")
        oracle = reductions.exact_oracle("SatD", budget)
        answer = reductions.sat_search_via_oracle(f, oracle)
    _emit(out, args.records, "solution\toracle_calls",
          [f"{answer}\t{oracle.call_count}" if args.records else answer])
    if not args.records:
        print(f"oracle calls: {oracle.call_count}", file=out)
    return EXIT_OK


def _cmd_simulate(args, out) -> int:
    name = solvers.canonical_problem_name(args.problem)
    try:
        program = nondet.guess_and_verify(name, verifiers.verifier_for(name),
                                          path_budget=_default_budget(args).max_steps)
    except ValueError as exc:
        raise _UsageError(str(exc))
    summary = nondet.run_nondet(program, _instance_from(args), order=args.order,
                                max_paths=args.max_paths)
    rows = sorted(summary.leaf_outputs)
    _emit(out, args.records, "leaf", rows)
    tail = (f"# paths={summary.paths_explored}"
            f"\tmax_steps={summary.max_steps_on_any_path}"
            f"\ttimeouts={summary.timeout_paths}")
    print(tail if args.records else
          f"paths explored: {summary.paths_explored}, max steps on a path: "
          f"{summary.max_steps_on_any_path}, timeouts: {summary.timeout_paths}",
          file=out)
    return EXIT_OK


def _scaling_family(runner: str):
    if runner == "satd-bruteforce":
        # v unit clauses plus a contradiction: forces the full 2^v scan.
        def family(v: int) -> str:
            names = [f"v{i:02d}" for i in range(1, v + 1)]
            return " ".join(names + ["!" + names[0]])
        return solvers.satd_bruteforce_program(), family
    if runner == "cycle-walk":
        def family(n: int) -> str:
            names = [spaces.GRAPH_LETTERS[i] for i in range(n)]
            edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
            return encode_graph(make_graph(names, edges))
        return solvers.cycle_walk_program(), family

    # Worst case for trial division: the largest prime below 10^d.
    largest_prime = {1: "7", 2: "97", 3: "997", 4: "9973", 5: "99991", 6: "999983"}

    def family(digits: int) -> str:
        if digits not in largest_prime:
            raise _UsageError("trial-division sizes are digit counts 1..6")
        return largest_prime[digits]
    return solvers.trial_division_program(), family


def _cmd_scaling(args, out) -> int:
    try:
        sizes = [int(part) for part in args.sizes.split(",")]
    except ValueError:
        raise _UsageError("--sizes wants comma-separated integers")
    if len(sizes) < 4:
        raise _UsageError("--sizes wants at least four sizes")
    program, family = _scaling_family(args.runner)
    report = nondet.scaling_report(program, family, sizes, _default_budget(args))
    print(report.to_csv(), file=out)
    return EXIT_OK


def _cmd_list_problems(args, out) -> int:
    rows = []
    for name in problems.registered_names():
        problem = problems.get_problem(name)
        kind = "decision" if problem.is_decision else "search"
        alias = "" if problem.name == name else f" (alias of {problem.name})"
        rows.append(f"{name}\t{kind}{alias}" if args.records
                    else f"{name:22s} {kind}{alias}")
    _emit(out, args.records, "problem\tkind", rows)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "check-verifier": _cmd_check_verifier,
    "reduce": _cmd_reduce,
    "check-reduction": _cmd_check_reduction,
    "search-via-oracle": _cmd_search_via_oracle,
    "simulate": _cmd_simulate,
    "scaling": _cmd_scaling,
    "list-problems": _cmd_list_problems,
}


def main(argv: Sequence[str] | None = None,
         out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its diagnostic; normalize the code.
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"nondec: {exc}", file=err)
        return EXIT_USAGE
    except (UnknownProblem, UnknownKind, KeyError) as exc:
        print(f"nondec: unknown name: {exc}", file=err)
        return EXIT_USAGE
    except (BudgetExceeded, SearchSpaceTooLarge, VerifierTimeout,
            nondet.ChoiceSpaceTooLarge) as exc:
        print(f"nondec: {exc}", file=err)
        return EXIT_BUDGET


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
