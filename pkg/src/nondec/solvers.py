"""Step-counted programs and exhaustive brute-force solution oracles.

A Program is a deterministic map from an input string to an output string,
instrumented with a step counter: one tick per elementary operation (loop
iteration, recursive call, candidate examined).  Running out of steps is
an observable Timeout outcome, not an exception, so "runs too long" is
something tests can assert about.

The oracles in this module enumerate *complete* solution sets for every
registered problem by plain exhaustion: trial division, permutation
backtracking, assignment enumeration.  They are deliberately unclever so
they can serve as ground truth for everything else in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .encodings import (
    CnfFormula,
    Graph,
    Malformed,
    canonical_cycle,
    encode_assignment,
    evaluate_cnf,
    parse_assignment,
    parse_cnf,
    parse_graph,
    parse_natural,
    parse_vertex_sequence,
)

DEFAULT_MAX_STEPS = 10**6

NO = "no"
YES = "yes"


class UnknownProblem(KeyError):
    """No problem is registered under the requested name."""


class BudgetExceeded(RuntimeError):
    """An oracle-side enumeration ran out of its step budget."""

    def __init__(self, max_steps: int):
        super().__init__(f"step budget of {max_steps} exceeded")
        self.max_steps = max_steps


class _OutOfSteps(Exception):
    """Internal signal raised by StepCounter.tick on exhaustion."""


@dataclass(frozen=True)
class StepBudget:
    """An upper bound on elementary steps for one run."""

    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.max_steps <= 0:
            raise ValueError("max_steps must be positive")


class StepCounter:
    """Mutable tick accounting for a single run under a StepBudget."""

    __slots__ = ("used", "max_steps")

    def __init__(self, max_steps: int = DEFAULT_MAX_STEPS):
        self.used = 0
        self.max_steps = max_steps

    def tick(self, n: int = 1) -> None:
        used = self.used + n
        if used > self.max_steps:
            self.used = self.max_steps
            raise _OutOfSteps()
        self.used = used


@dataclass(frozen=True)
class Output:
    """A program halted and produced a string."""

    text: str
    steps_used: int = 0


@dataclass(frozen=True)
class Timeout:
    """A program exhausted its budget; steps_used equals that budget."""

    steps_used: int


Outcome = Output | Timeout


@dataclass(frozen=True)
class Program:
    """A named deterministic program body working under a step counter."""

    name: str
    body: Callable[[str, StepCounter], str]


def run_program(prog: Program, w: str, budget: StepBudget | None = None) -> Outcome:
    """Execute prog on w; Timeout is returned as a value, never raised."""
    budget = budget or StepBudget()
    counter = StepCounter(budget.max_steps)
    try:
        text = prog.body(w, counter)
    except _OutOfSteps:
        return Timeout(steps_used=budget.max_steps)
    if not all(32 <= ord(ch) <= 126 for ch in text):
        raise ValueError(f"program {prog.name} emitted non-ASCII output")
    return Output(text=text, steps_used=counter.used)


def accepts(outcome: Outcome) -> bool | None:
    """Accept/reject reading of an outcome: reject iff output is "no".

    None when the outcome is a Timeout (behavior undefined).
    """
    if isinstance(outcome, Timeout):
        return None
    return outcome.text != NO


# ---------------------------------------------------------------------------
# core search routines (shared by oracles, verifiers, and programs)


def nontrivial_factors(m: int, counter: StepCounter) -> list[int]:
    """All factors of m other than 1 and m, by trial division 2..m-1."""
    found = []
    for d in range(2, m):
        counter.tick()
        if m % d == 0:
            found.append(d)
    return found


def has_nontrivial_factor(m: int, counter: StepCounter) -> bool:
    if m < 4:
        return False
    d = 2
    while d * d <= m:
        counter.tick()
        if m % d == 0:
            return True
        d += 1
    return False


def has_factor_in_range(m: int, lo: int, hi: int, counter: StepCounter) -> bool:
    """Is there a factor of m (excluding 1 and m) inside [lo, hi]?"""
    lo = max(lo, 2)
    hi = min(hi, m - 1)
    if m < 4 or lo > hi:
        return False
    d = 1
    while d * d <= m:
        counter.tick()
        if m % d == 0:
            for f in (d, m // d):
                if f not in (1, m) and lo <= f <= hi:
                    return True
        d += 1
    return False


def _cycle_search(graph: Graph, counter: StepCounter, collect: bool):
    """Backtracking Hamilton-cycle search from the smallest vertex.

    Yields each cycle exactly once, already in canonical form: the start
    is the smallest vertex, and for undirected graphs the second vertex is
    forced below the last one, which kills the mirrored traversal.
    With collect=False, returns True as soon as one cycle exists.
    """
    n = len(graph.vertices)
    minimum = 3 if not graph.directed else 2
    if n < minimum:
        return False if not collect else []
    order = graph.vertices  # sorted by construction
    index = {v: i for i, v in enumerate(order)}
    succ = [0] * n  # adjacency as bitmasks over vertex indices
    pred = [0] * n
    for u, v in graph.edges:
        iu, iv = index[u], index[v]
        succ[iu] |= 1 << iv
        pred[iv] |= 1 << iu
        if not graph.directed:
            succ[iv] |= 1 << iu
            pred[iu] |= 1 << iv
    start = 0
    full = (1 << n) - 1
    results: list[str] = []

    path = [start]
    visited = 1 << start

    def extend() -> bool:
        nonlocal visited
        counter.tick()
        last = path[-1]
        if visited == full:
            if pred[start] >> last & 1:
                if not graph.directed and len(path) > 2 and path[1] > path[-1]:
                    return False
                if collect:
                    results.append(",".join(order[i] for i in path))
                    return False
                return True
            return False
        options = succ[last] & ~visited
        while options:
            nxt = options & -options
            options ^= nxt
            path.append(nxt.bit_length() - 1)
            visited |= nxt
            if extend():
                return True
            path.pop()
            visited ^= nxt
        return False

    found = extend()
    if collect:
        return results
    return found


def hamilton_cycles(graph: Graph, counter: StepCounter) -> list[str]:
    """Every Hamilton cycle, canonically encoded, sorted."""
    return sorted(_cycle_search(graph, counter, collect=True))


def has_hamilton_cycle(graph: Graph, counter: StepCounter) -> bool:
    return bool(_cycle_search(graph, counter, collect=False))


def has_hamilton_cycle_through(graph: Graph, u: str, v: str,
                               counter: StepCounter) -> bool:
    """Does some Hamilton cycle use edge (u, v)?  Undirected graphs only."""
    if graph.directed or not graph.has_edge(u, v):
        return False
    n = len(graph.vertices)
    if n < 3:
        return False
    index = {name: i for i, name in enumerate(graph.vertices)}
    adj = [0] * n
    for a, b in graph.edges:
        ia, ib = index[a], index[b]
        adj[ia] |= 1 << ib
        adj[ib] |= 1 << ia
    iu, iv = index[u], index[v]
    full = (1 << n) - 1

    # Grow a path u-v-...-x covering all vertices; edge (x, u) closes it.
    def extend(last: int, visited: int) -> bool:
        counter.tick()
        if visited == full:
            return bool(adj[last] >> iu & 1)
        options = adj[last] & ~visited
        while options:
            nxt = options & -options
            options ^= nxt
            if extend(nxt.bit_length() - 1, visited | nxt):
                return True
        return False

    return extend(iv, (1 << iu) | (1 << iv))


def satisfying_assignments(formula: CnfFormula, counter: StepCounter) -> list[str]:
    """All satisfying assignments as canonical strings, sorted."""
    variables = formula.variables
    v = len(variables)
    if v == 0:
        # No clauses means the empty assignment vacuously satisfies.
        return [""] if not formula.clauses else []
    pos_masks = []
    neg_masks = []
    for clause in formula.clauses:
        pos = neg = 0
        for name, positive in clause:
            bit = 1 << variables.index(name)
            if positive:
                pos |= bit
            else:
                neg |= bit
        pos_masks.append(pos)
        neg_masks.append(neg)
    found = []
    for bits in range(1 << v):
        counter.tick()
        ok = True
        for pos, neg in zip(pos_masks, neg_masks):
            counter.tick()
            if not (bits & pos) and (bits & neg) == neg:
                ok = False
                break
        if ok:
            assignment = {name: bool(bits >> i & 1) for i, name in enumerate(variables)}
            found.append(encode_assignment(assignment, variables))
    return sorted(found)


def has_satisfying_assignment(formula: CnfFormula, counter: StepCounter) -> bool:
    if not formula.clauses:
        return True
    variables = formula.variables
    for values in itertools.product((False, True), repeat=len(variables)):
        counter.tick()
        assignment = dict(zip(variables, values))
        if all(any(assignment[n] == p for n, p in clause) for clause in formula.clauses):
            return True
    return False


# ---------------------------------------------------------------------------
# problem oracles


def _parse_graph_or_none(w: str, directed: bool) -> Graph | None:
    try:
        return parse_graph(w, directed)
    except Malformed:
        return None


def _parse_cnf_or_none(w: str) -> CnfFormula | None:
    try:
        return parse_cnf(w)
    except Malformed:
        return None


def _parse_range_instance(w: str) -> tuple[int, int, int] | None:
    parts = w.split(" ")
    if len(parts) != 3:
        return None
    values = [parse_natural(p) for p in parts]
    if any(v is None for v in values):
        return None
    return values[0], values[1], values[2]  # type: ignore[return-value]


def _factor_solutions(w: str, counter: StepCounter) -> frozenset[str]:
    m = parse_natural(w)
    if m is None or m < 4:
        return frozenset({NO})
    found = nontrivial_factors(m, counter)
    return frozenset(str(f) for f in found) or frozenset({NO})


def _factor_positive(w: str, counter: StepCounter) -> bool:
    m = parse_natural(w)
    return m is not None and has_nontrivial_factor(m, counter)


def _factor_range_positive(w: str, counter: StepCounter) -> bool:
    triple = _parse_range_instance(w)
    if triple is None:
        return False
    m, lo, hi = triple
    return has_factor_in_range(m, lo, hi, counter)


def _hamcycle_solutions(w: str, counter: StepCounter) -> frozenset[str]:
    g = _parse_graph_or_none(w, directed=False)
    if g is None:
        return frozenset({NO})
    return frozenset(hamilton_cycles(g, counter)) or frozenset({NO})


def _hamcycle_positive(w: str, counter: StepCounter) -> bool:
    g = _parse_graph_or_none(w, directed=False)
    return g is not None and has_hamilton_cycle(g, counter)


def _directed_hamcycle_solutions(w: str, counter: StepCounter) -> frozenset[str]:
    g = _parse_graph_or_none(w, directed=True)
    if g is None:
        return frozenset({NO})
    return frozenset(hamilton_cycles(g, counter)) or frozenset({NO})


def _directed_hamcycle_positive(w: str, counter: StepCounter) -> bool:
    g = _parse_graph_or_none(w, directed=True)
    return g is not None and has_hamilton_cycle(g, counter)


def _hamcycle_edge_solutions(w: str, counter: StepCounter) -> frozenset[str]:
    g = _parse_graph_or_none(w, directed=False)
    if g is None:
        return frozenset({NO})
    edges: set[str] = set()
    for cycle in hamilton_cycles(g, counter):
        names = cycle.split(",")
        for u, v in zip(names, names[1:] + names[:1]):
            edges.add(f"{min(u, v)},{max(u, v)}")
    return frozenset(edges) or frozenset({NO})


def _sat_solutions(w: str, counter: StepCounter) -> frozenset[str]:
    f = _parse_cnf_or_none(w)
    if f is None:
        return frozenset({NO})
    return frozenset(satisfying_assignments(f, counter)) or frozenset({NO})


def _sat_positive(w: str, counter: StepCounter) -> bool:
    f = _parse_cnf_or_none(w)
    return f is not None and has_satisfying_assignment(f, counter)


def _decision(positive: Callable[[str, StepCounter], bool]):
    def solve(w: str, counter: StepCounter) -> frozenset[str]:
        return frozenset({YES}) if positive(w, counter) else frozenset({NO})
    return solve


# name -> (solution enumerator, positivity predicate, is_decision)
_ORACLES: dict[str, tuple[Callable, Callable, bool]] = {
    "Factor": (_factor_solutions, _factor_positive, False),
    "FactorD": (_decision(_factor_positive), _factor_positive, True),
    "FactorInRangeD": (_decision(_factor_range_positive), _factor_range_positive, True),
    "HamCycle": (_hamcycle_solutions, _hamcycle_positive, False),
    "HamCycleD": (_decision(_hamcycle_positive), _hamcycle_positive, True),
    "DirectedHamCycle": (_directed_hamcycle_solutions, _directed_hamcycle_positive, False),
    "DirectedHamCycleD": (_decision(_directed_hamcycle_positive), _directed_hamcycle_positive, True),
    "HamCycleEdge": (_hamcycle_edge_solutions, _hamcycle_positive, False),
    "Sat": (_sat_solutions, _sat_positive, False),
    "SatD": (_decision(_sat_positive), _sat_positive, True),
}
_ALIASES = {"UndirectedHamCycleD": "HamCycleD"}


def canonical_problem_name(problem: str) -> str:
    name = _ALIASES.get(problem, problem)
    if name not in _ORACLES:
        raise UnknownProblem(problem)
    return name


def registered_problem_names() -> tuple[str, ...]:
    return tuple(sorted(_ORACLES)) + tuple(sorted(_ALIASES))


def problem_is_decision(problem: str) -> bool:
    return _ORACLES[canonical_problem_name(problem)][2]


def enumerate_solutions(problem: str, w: str,
                        budget: StepBudget | None = None) -> frozenset[str]:
    """The complete solution set of w, computed by brute force.

    Raises BudgetExceeded when the instance is too large to exhaust under
    the budget; the answer is never silently truncated.
    """
    solve = _ORACLES[canonical_problem_name(problem)][0]
    budget = budget or StepBudget()
    counter = StepCounter(budget.max_steps)
    try:
        return solve(w, counter)
    except _OutOfSteps:
        raise BudgetExceeded(budget.max_steps) from None


def is_positive(problem: str, w: str, budget: StepBudget | None = None) -> bool:
    """Positivity of w, via an early-exit search (no full enumeration)."""
    positive = _ORACLES[canonical_problem_name(problem)][1]
    budget = budget or StepBudget()
    counter = StepCounter(budget.max_steps)
    try:
        return positive(w, counter)
    except _OutOfSteps:
        raise BudgetExceeded(budget.max_steps) from None


# ---------------------------------------------------------------------------
# direct solution checking (no enumeration)


def _check_factor(w: str, s: str, counter: StepCounter) -> bool:
    m = parse_natural(w)
    v = parse_natural(s)
    if m is None or v is None:
        return False
    counter.tick()
    return 2 <= v <= m - 1 and m % v == 0


def _check_cycle(w: str, s: str, counter: StepCounter, directed: bool) -> bool:
    g = _parse_graph_or_none(w, directed)
    if g is None:
        return False
    seq = parse_vertex_sequence(s)
    minimum = 2 if directed else 3
    if not seq or len(seq) < minimum or set(seq) != set(g.vertices):
        return False
    for u, v in zip(seq, seq[1:] + seq[:1]):
        counter.tick()
        if not g.has_edge(u, v):
            return False
    # Only the canonical representative is the set member.
    return canonical_cycle(seq, directed) == s


def _check_hamcycle_edge(w: str, s: str, counter: StepCounter) -> bool:
    g = _parse_graph_or_none(w, directed=False)
    if g is None:
        return False
    parts = s.split(",")
    if len(parts) != 2:
        return False
    u, v = parts
    if not (u < v and g.has_edge(u, v)):
        return False
    return has_hamilton_cycle_through(g, u, v, counter)


def _check_sat(w: str, s: str, counter: StepCounter) -> bool:
    f = _parse_cnf_or_none(w)
    if f is None:
        return False
    assignment = parse_assignment(s)
    if assignment is None or tuple(sorted(assignment)) != f.variables:
        return False
    counter.tick(max(1, len(f.clauses)))
    return evaluate_cnf(f, assignment)


def check_solution(problem: str, w: str, s: str,
                   budget: StepBudget | None = None) -> bool:
    """Is s a member of the solution set of w?  Decided directly.

    The sentinel "no" is a member exactly when w is a negative instance.
    """
    name = canonical_problem_name(problem)
    budget = budget or StepBudget()
    counter = StepCounter(budget.max_steps)
    try:
        if s == NO:
            return not _ORACLES[name][1](w, counter)
        if problem_is_decision(name):
            return s == YES and _ORACLES[name][1](w, counter)
        checker = {
            "Factor": _check_factor,
            "HamCycle": lambda w_, s_, c: _check_cycle(w_, s_, c, directed=False),
            "DirectedHamCycle": lambda w_, s_, c: _check_cycle(w_, s_, c, directed=True),
            "HamCycleEdge": _check_hamcycle_edge,
            "Sat": _check_sat,
        }[name]
        return checker(w, s, counter)
    except _OutOfSteps:
        raise BudgetExceeded(budget.max_steps) from None


# ---------------------------------------------------------------------------
# "does this program solve this problem" on a finite space


@dataclass(frozen=True)
class SolvesViolation:
    instance: str
    verdict: str  # "wrong-output" | "timeout" | "missed-positive" | "accepted-negative"
    detail: str


@dataclass(frozen=True)
class SolvesReport:
    """Outcome of checking a program against an oracle over a space."""

    program: str
    problem: str
    instances_checked: int
    violations: tuple[SolvesViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_records(self) -> str:
        lines = ["# instance\tverdict\tdetail"]
        lines.extend(f"{v.instance}\t{v.verdict}\t{v.detail}" for v in self.violations)
        lines.append(f"# checked {self.instances_checked} instances, "
                     f"{len(self.violations)} violations")
        return "\n".join(lines)


def solves_on_space(prog: Program, problem: str, space: Iterable[str],
                    budget: StepBudget | None = None) -> SolvesReport:
    """Check P(w) in F(w) for every w in the space.

    An empty violation list certifies that the program solves the problem
    on this space (and nothing beyond it).
    """
    name = canonical_problem_name(problem)
    violations = []
    checked = 0
    for w in space:
        checked += 1
        outcome = run_program(prog, w, budget)
        if isinstance(outcome, Timeout):
            violations.append(SolvesViolation(w, "timeout", f"steps={outcome.steps_used}"))
            continue
        if not check_solution(name, w, outcome.text):
            violations.append(SolvesViolation(w, "wrong-output", outcome.text))
    return SolvesReport(prog.name, name, checked, tuple(violations))


# ---------------------------------------------------------------------------
# shipped programs


def _read_input(w: str, counter: StepCounter) -> None:
    # Reading the input costs one step per byte plus one to get going, so
    # no shipped program can answer a nonempty input within one step.
    counter.tick(len(w) + 1)


def trial_division_program() -> Program:
    """Outputs the smallest nontrivial factor of the input, or "no"."""

    def body(w: str, counter: StepCounter) -> str:
        _read_input(w, counter)
        m = parse_natural(w)
        if m is None:
            return NO
        for d in range(2, m):
            counter.tick()
            if m % d == 0:
                return str(d)
        return NO

    return Program("trial-division", body)


def constant_program(text: str) -> Program:
    def body(w: str, counter: StepCounter) -> str:
        _read_input(w, counter)
        return text

    return Program(f"constant-{text or 'empty'}", body)


def always_no_program() -> Program:
    return Program("always-no", constant_program(NO).body)


def echo_yes_program() -> Program:
    return Program("echo-yes", constant_program(YES).body)


def satd_bruteforce_program() -> Program:
    """Decides satisfiability by enumerating every assignment.

    Ticks once per (assignment, clause) pair, so the step count scales as
    2^v times the clause count: the package's standing example of an
    exponential-time program.
    """

    def body(w: str, counter: StepCounter) -> str:
        _read_input(w, counter)
        f = _parse_cnf_or_none(w)
        if f is None:
            return NO
        if not f.clauses:
            return YES
        for values in itertools.product((False, True), repeat=len(f.variables)):
            assignment = dict(zip(f.variables, values))
            satisfied = True
            for clause in f.clauses:
                counter.tick()
                if not any(assignment[n] == p for n, p in clause):
                    satisfied = False
                    break
            if satisfied:
                return YES
        return NO

    return Program("satd-bruteforce", body)


def cycle_walk_program() -> Program:
    """Verifies that visiting the sorted vertices in order is a Hamilton
    cycle of the input graph: a linear-time walk, the package's standing
    example of a polynomial-time program."""

    def body(w: str, counter: StepCounter) -> str:
        _read_input(w, counter)
        g = _parse_graph_or_none(w, directed=False)
        if g is None or len(g.vertices) < 3:
            return NO
        seq = g.vertices
        for u, v in zip(seq, seq[1:] + seq[:1]):
            counter.tick()
            if not g.has_edge(u, v):
                return NO
        return YES

    return Program("cycle-walk", body)


SHIPPED_PROGRAMS: dict[str, Callable[[], Program]] = {
    "trial-division": trial_division_program,
    "always-no": always_no_program,
    "echo-yes": echo_yes_program,
    "satd-bruteforce": satd_bruteforce_program,
    "cycle-walk": cycle_walk_program,
}
