"""Nondeterministic programs as choice-tree computations.

A nondeterministic program is modeled by a deterministic transition
function of (input, choice string): each bit string of choices selects
one computation path, and the function either produces that path's output
or reports that it needs more choices.  Exploring every choice string up
to a bound realizes the whole computation tree, so "what can this
program output" becomes an enumerable set.

The central construction is guess-and-verify: decode the choice string
into a candidate (solution, hint) pair, run a verifier, and output the
solution exactly when the verifier accepts.  Its non-"no" leaf outputs
are then provably correct solutions, which is the whole point of pairing
nondeterminism with verifiers.

An empirical complexity probe rounds the module out: run a program over
an instance family of growing size and least-squares fit the step counts
against both a polynomial and an exponential model.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .encodings import encode_assignment, parse_cnf, parse_graph, parse_natural, Malformed
from .problems import canonicalize_solution
from .solvers import (
    NO,
    BudgetExceeded,
    Outcome,
    Program,
    SolvesReport,
    SolvesViolation,
    StepBudget,
    StepCounter,
    Timeout,
    _OutOfSteps,
    canonical_problem_name,
    check_solution,
    is_positive,
    run_program,
)
from .verifiers import Verifier

DEFAULT_MAX_PATHS = 2**20

_POOL: ThreadPoolExecutor | None = None


def _shared_pool() -> ThreadPoolExecutor:
    global _POOL
    if _POOL is None:
        _POOL = ThreadPoolExecutor(max_workers=4,
                                   thread_name_prefix="nondet-path")
    return _POOL


class ChoiceSpaceTooLarge(RuntimeError):
    """Exploration would exceed the configured number of paths."""

    def __init__(self, max_paths: int):
        super().__init__(f"choice tree exceeds {max_paths} paths")
        self.max_paths = max_paths


class _NeedMoreChoices:
    """Sentinel: the choice string is too short to determine a path."""

    def __repr__(self):
        return "NEED_MORE_CHOICES"


NEED_MORE_CHOICES = _NeedMoreChoices()

# A transition returns an output string or NEED_MORE_CHOICES.
Transition = Callable[[str, str, StepCounter], "str | _NeedMoreChoices"]


@dataclass(frozen=True)
class NProgram:
    """A nondeterministic program: transition, depth bound, path budget."""

    name: str
    transition: Transition
    choice_bound: Callable[[int], int]
    path_budget: int = StepBudget().max_steps


@dataclass(frozen=True)
class ComputationSummary:
    """Everything the bounded computation tree of one input produced."""

    leaf_outputs: frozenset[str]
    paths_explored: int
    max_steps_on_any_path: int
    timeout_paths: int
    incomplete_paths: int


def _explore(np_prog: NProgram, w: str, prefixes: Iterable[str], bound: int,
             order: str, budget_left: list[int]) -> tuple[set[str], int, int, int, int]:
    """Depth-first exploration of the subtrees rooted at the prefixes."""
    leaves: set[str] = set()
    paths = 0
    max_steps = 0
    timeouts = 0
    incomplete = 0
    children = ("0", "1") if order != "reverse" else ("1", "0")
    stack = list(reversed(list(prefixes)))

    def count_path():
        nonlocal paths
        paths += 1
        budget_left[0] -= 1
        if budget_left[0] < 0:
            raise ChoiceSpaceTooLarge(budget_left[1])

    while stack:
        prefix = stack.pop()
        counter = StepCounter(np_prog.path_budget)
        try:
            result = np_prog.transition(w, prefix, counter)
        except _OutOfSteps:
            count_path()
            timeouts += 1
            max_steps = max(max_steps, counter.used)
            continue
        max_steps = max(max_steps, counter.used)
        if result is NEED_MORE_CHOICES:
            if len(prefix) >= bound:
                count_path()
                incomplete += 1
            else:
                stack.extend(prefix + bit for bit in reversed(children))
            continue
        count_path()
        leaves.add(result)
    return leaves, paths, max_steps, timeouts, incomplete


def run_nondet(np_prog: NProgram, w: str, order: str = "lex",
               max_paths: int = DEFAULT_MAX_PATHS) -> ComputationSummary:
    """Explore every choice string up to the program's bound.

    ``order`` selects the exploration schedule: "lex", "reverse", or
    "parallel" (the tree is split across worker threads).  The summary is
    identical for every schedule; only the work order differs.
    """
    if order not in ("lex", "reverse", "parallel"):
        raise ValueError(f"unknown exploration order {order!r}")
    bound = np_prog.choice_bound(len(w))
    budget_left = [max_paths, max_paths]
    if order in ("lex", "reverse"):
        leaves, paths, max_steps, timeouts, incomplete = _explore(
            np_prog, w, [""], bound, order, budget_left)
        return ComputationSummary(frozenset(leaves), paths, max_steps,
                                  timeouts, incomplete)

    # Parallel: materialize the frontier at a small depth, then fan out.
    split = min(bound, 3)
    frontier = [""]
    leaves: set[str] = set()
    paths = max_steps = timeouts = incomplete = 0
    for depth in range(split):
        next_frontier = []
        for prefix in frontier:
            counter = StepCounter(np_prog.path_budget)
            try:
                result = np_prog.transition(w, prefix, counter)
            except _OutOfSteps:
                paths += 1
                timeouts += 1
                max_steps = max(max_steps, counter.used)
                continue
            max_steps = max(max_steps, counter.used)
            if result is NEED_MORE_CHOICES:
                next_frontier.extend((prefix + "0", prefix + "1"))
            else:
                paths += 1
                leaves.add(result)
        frontier = next_frontier
    results = list(_shared_pool().map(
        lambda p: _explore(np_prog, w, [p], bound, "lex", budget_left),
        frontier))
    for part_leaves, part_paths, part_steps, part_timeouts, part_inc in results:
        leaves |= part_leaves  # merging is a pure set union
        paths += part_paths
        max_steps = max(max_steps, part_steps)
        timeouts += part_timeouts
        incomplete += part_inc
    if paths > max_paths:  # the shared decrement races; recheck the exact total
        raise ChoiceSpaceTooLarge(max_paths)
    return ComputationSummary(frozenset(leaves), paths, max_steps,
                              timeouts, incomplete)


# ---------------------------------------------------------------------------
# decoders: choice strings -> candidate (solution, hint) pairs

# A decoder returns NEED_MORE_CHOICES, None (dead path -> "no" leaf), or (s, h).
Decoder = Callable[[str, str, StepCounter], "tuple[str, str] | None | _NeedMoreChoices"]


def decode_factor(w: str, choices: str, counter: StepCounter):
    """Interpret the choices as the binary digits of a factor candidate."""
    m = parse_natural(w)
    if m is None or m < 2:
        return None
    needed = m.bit_length()
    if len(choices) < needed:
        return NEED_MORE_CHOICES
    counter.tick()
    return str(int(choices, 2)), ""


def factor_choice_bound(instance_len: int) -> int:
    # A decimal of L digits is below 10^L < 2^(4L).
    return 4 * max(instance_len, 1)


def make_permutation_decoder(directed: bool) -> Decoder:
    """Choices pick a vertex permutation, smallest vertex pinned first.

    Each pick consumes just enough bits to index the vertices remaining;
    out-of-range indices kill the path.
    """

    def decode(w: str, choices: str, counter: StepCounter):
        try:
            graph = parse_graph(w, directed)
        except Malformed:
            return None
        n = len(graph.vertices)
        if n < (2 if directed else 3):
            return None
        seq = [graph.vertices[0]]
        remaining = list(graph.vertices[1:])
        pos = 0
        while remaining:
            counter.tick()
            width = (len(remaining) - 1).bit_length()
            if len(choices) - pos < width:
                return NEED_MORE_CHOICES
            index = int(choices[pos:pos + width], 2) if width else 0
            pos += width
            if index >= len(remaining):
                return None
            seq.append(remaining.pop(index))
        return ",".join(seq), ""

    return decode


def permutation_choice_bound(instance_len: int) -> int:
    limit = instance_len // 2 + 2  # names take at least "x " or "x,"
    return sum((k - 1).bit_length() for k in range(2, limit + 1)) + 1


def decode_assignment(w: str, choices: str, counter: StepCounter):
    """One choice bit per variable, variables in lexicographic order."""
    try:
        formula = parse_cnf(w)
    except Malformed:
        return None
    variables = formula.variables
    if len(choices) < len(variables):
        return NEED_MORE_CHOICES
    counter.tick()
    assignment = {v: bit == "1" for v, bit in zip(variables, choices)}
    return encode_assignment(assignment, variables), ""


def assignment_choice_bound(instance_len: int) -> int:
    return instance_len // 2 + 2


def make_decision_decoder(underlying: Decoder) -> Decoder:
    """Wrap a search decoder: guess the certificate, claim "yes"."""

    def decode(w: str, choices: str, counter: StepCounter):
        result = underlying(w, choices, counter)
        if result is NEED_MORE_CHOICES or result is None:
            return result
        s, _ = result
        return "yes", s

    return decode


def standard_decoder(problem: str) -> tuple[Decoder, Callable[[int], int]]:
    """The shipped decoder and choice bound for a registered problem."""
    name = canonical_problem_name(problem)
    table: dict[str, tuple[Decoder, Callable[[int], int]]] = {
        "Factor": (decode_factor, factor_choice_bound),
        "HamCycle": (make_permutation_decoder(False), permutation_choice_bound),
        "DirectedHamCycle": (make_permutation_decoder(True), permutation_choice_bound),
        "Sat": (decode_assignment, assignment_choice_bound),
    }
    if name in table:
        return table[name]
    decision_to_search = {
        "FactorD": "Factor",
        "HamCycleD": "HamCycle",
        "DirectedHamCycleD": "DirectedHamCycle",
        "SatD": "Sat",
    }
    if name in decision_to_search:
        decoder, bound = standard_decoder(decision_to_search[name])
        return make_decision_decoder(decoder), bound
    raise ValueError(f"no standard decoder for {problem}")


def guess_and_verify(problem: str, verifier: Verifier,
                     decoder: Decoder | None = None,
                     choice_bound: Callable[[int], int] | None = None,
                     path_budget: int | None = None) -> NProgram:
    """The nondeterministic program that guesses (s, h) and verifies.

    Each path decodes its choices into a candidate, runs the verifier,
    and outputs the solution on acceptance and "no" otherwise, so the
    set of non-"no" leaves is exactly the set of verifier-approved
    solutions the decoder can spell.
    """
    name = canonical_problem_name(problem)
    if decoder is None:
        decoder, standard_bound = standard_decoder(name)
        choice_bound = choice_bound or standard_bound
    elif choice_bound is None:
        choice_bound = lambda n: 4 * max(n, 1) + 4

    def transition(w: str, choices: str, counter: StepCounter):
        result = decoder(w, choices, counter)
        if result is NEED_MORE_CHOICES:
            return NEED_MORE_CHOICES
        if result is None:
            return NO
        s, h = result
        verdict = verifier.check_counted(w, s, h, counter)
        return s if verdict == "yes" else NO

    return NProgram(
        name=f"guess-and-verify-{name}",
        transition=transition,
        choice_bound=choice_bound,
        path_budget=path_budget or StepBudget().max_steps,
    )


def nondet_solves(np_prog: NProgram, problem: str, space: Iterable[str],
                  order: str = "lex", max_paths: int = DEFAULT_MAX_PATHS,
                  budget: StepBudget | None = None) -> SolvesReport:
    """Check the nondeterministic solving contract over a finite space.

    Violations: (a) a non-"no" leaf that is not a solution, (b) a
    positive instance whose leaves are all "no", (c) a negative instance
    with a non-"no" leaf.  Leaves are canonicalized before the membership
    test, so spelling variants of a correct solution do not count against
    the program.  Timed-out paths also violate: an incompletely explored
    tree certifies nothing.
    """
    name = canonical_problem_name(problem)
    violations = []
    checked = 0
    for w in space:
        checked += 1
        summary = run_nondet(np_prog, w, order=order, max_paths=max_paths)
        if summary.timeout_paths:
            violations.append(SolvesViolation(
                w, "timeout", f"{summary.timeout_paths} paths timed out"))
            continue
        answers = {s for s in summary.leaf_outputs if s != NO}
        positive = is_positive(name, w, budget)
        if positive and not answers:
            violations.append(SolvesViolation(w, "missed-positive", "all leaves no"))
        for s in sorted(answers):
            canonical = canonicalize_solution(name, s)
            if not positive:
                violations.append(SolvesViolation(w, "accepted-negative", s))
            elif not check_solution(name, w, canonical, budget):
                violations.append(SolvesViolation(w, "wrong-solution", s))
    return SolvesReport(np_prog.name, name, checked, tuple(violations))


# ---------------------------------------------------------------------------
# empirical scaling reports


@dataclass(frozen=True)
class ScalingReport:
    """Worst-case step counts against instance size, with two fits.

    The polynomial model fits log2(steps) against log2(size); its slope
    is the apparent exponent.  The exponential model fits log2(steps)
    against size; its rate is the apparent bits-per-unit growth.  The
    model with the smaller residual wins.
    """

    runner: str
    samples: tuple[tuple[int, int], ...]
    loglog_slope: float
    loglog_residual: float
    loglinear_rate: float
    loglinear_residual: float

    @property
    def better_fit(self) -> str:
        return ("polynomial" if self.loglog_residual <= self.loglinear_residual
                else "exponential")

    def to_csv(self) -> str:
        lines = ["size,steps"]
        lines.extend(f"{size},{steps}" for size, steps in self.samples)
        lines.append(f"# polynomial fit: slope={self.loglog_slope:.4f} "
                     f"residual={self.loglog_residual:.4f}")
        lines.append(f"# exponential fit: rate={self.loglinear_rate:.4f} "
                     f"residual={self.loglinear_residual:.4f}; "
                     f"better fit: {self.better_fit}")
        return "\n".join(lines)


def _fit(xs: np.ndarray, ys: np.ndarray) -> tuple[float, float]:
    coeffs, residuals, *_ = np.polyfit(xs, ys, 1, full=True)
    residual = float(residuals[0]) if len(residuals) else 0.0
    return float(coeffs[0]), residual


def scaling_report(runner: Program | NProgram, family: Callable[[int], str],
                   sizes: Iterable[int],
                   budget: StepBudget | None = None) -> ScalingReport:
    """Measure steps across an instance family and fit both growth models."""
    size_list = sorted(sizes)
    if len(size_list) < 4:
        raise ValueError("need at least four sizes for a meaningful fit")
    if size_list[0] < 1:
        raise ValueError("sizes must be positive")
    samples = []
    for size in size_list:
        w = family(size)
        if isinstance(runner, NProgram):
            summary = run_nondet(runner, w)
            if summary.timeout_paths:
                raise _budget_error(runner, budget)
            steps = summary.max_steps_on_any_path
        else:
            outcome: Outcome = run_program(runner, w, budget)
            if isinstance(outcome, Timeout):
                raise _budget_error(runner, budget)
            steps = outcome.steps_used
        samples.append((size, max(steps, 1)))
    xs = np.array([s for s, _ in samples], dtype=float)
    ys = np.log2(np.array([t for _, t in samples], dtype=float))
    loglog_slope, loglog_residual = _fit(np.log2(xs), ys)
    rate, loglinear_residual = _fit(xs, ys)
    return ScalingReport(runner.name, tuple(samples), loglog_slope,
                         loglog_residual, rate, loglinear_residual)


def _budget_error(runner, budget):
    return BudgetExceeded((budget or StepBudget()).max_steps)
