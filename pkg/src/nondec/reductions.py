"""Polyreductions, oracle-backed self-reductions, and their checkers.

Two flavors of mapping reduction live here.  A Polyreduction carries a
decision problem to a general problem through an instance map r that
preserves positivity in both directions.  A GeneralReduction adds a
solution map back: r' must carry *any* solution of the mapped instance
to a solution of the original, so the checker quantifies over every
solution the target oracle can produce.

The self-reductions go the other way around: they solve a search problem
using only a yes/no oracle for a decision problem, with a strict budget
of oracle calls (binary range-splitting for factors, edge deletion for
Hamilton cycles, variable fixing for satisfiability).  An oracle whose
answers contradict the search invariants is reported, not trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .encodings import (
    CnfFormula,
    Graph,
    Malformed,
    canonical_cycle,
    encode_assignment,
    encode_cnf,
    encode_graph,
    evaluate_cnf,
    make_graph,
    parse_graph,
    parse_vertex_sequence,
)
from .solvers import (
    NO,
    YES,
    StepBudget,
    StepCounter,
    _OutOfSteps,
    BudgetExceeded,
    canonical_problem_name,
    check_solution,
    enumerate_solutions,
    is_positive,
    problem_is_decision,
)


class OracleInconsistent(RuntimeError):
    """The decision oracle's answers violate the search invariants."""


class SourceNotCertified(ValueError):
    """NP-hardness judgments only accept the shipped certified sources."""


class ReductionCheckFailed(RuntimeError):
    """A hardness judgment was requested for a reduction that fails its check."""

    def __init__(self, report: "ReductionReport"):
        super().__init__(f"reduction check failed with {len(report.mismatches)} mismatches")
        self.report = report


@dataclass(frozen=True)
class PolynomialBudget:
    """A step allowance of the form c * n^k for inputs of length n."""

    coefficient: int = 1000
    exponent: int = 2

    def steps_for(self, length: int) -> int:
        return self.coefficient * max(length, 1) ** self.exponent


@dataclass(frozen=True)
class Polyreduction:
    """An instance map from a decision problem to a general problem."""

    name: str
    source: str
    target: str
    map_r: Callable[[str, StepCounter], str]
    budget: PolynomialBudget = PolynomialBudget()

    def __post_init__(self):
        if not problem_is_decision(self.source):
            raise ValueError(f"polyreduction source {self.source} must be a decision problem")
        canonical_problem_name(self.target)


@dataclass(frozen=True)
class GeneralReduction:
    """An instance map plus a solution map back (general to general)."""

    name: str
    source: str
    target: str
    map_r: Callable[[str, StepCounter], str]
    map_r_back: Callable[[str, StepCounter], str]
    budget: PolynomialBudget = PolynomialBudget()


def apply_polyreduction(red: Polyreduction | GeneralReduction, w: str,
                        budget: PolynomialBudget | None = None) -> str:
    """Compute r(w) under the polynomial step budget."""
    budget = budget or red.budget
    counter = StepCounter(budget.steps_for(len(w)))
    try:
        return red.map_r(w, counter)
    except _OutOfSteps:
        raise BudgetExceeded(counter.max_steps) from None


def apply_solution_map(red: GeneralReduction, g_solution: str,
                       budget: PolynomialBudget | None = None) -> str:
    """Compute r'(g) under the polynomial step budget."""
    budget = budget or red.budget
    counter = StepCounter(budget.steps_for(max(len(g_solution), 1)))
    try:
        return red.map_r_back(g_solution, counter)
    except _OutOfSteps:
        raise BudgetExceeded(counter.max_steps) from None


def apply_general_reduction(red: GeneralReduction, target_solver: Callable[[str], str],
                            w: str) -> str:
    """Solve w by mapping it, solving the image, and mapping back."""
    return apply_solution_map(red, target_solver(apply_polyreduction(red, w)))


# ---------------------------------------------------------------------------
# reduction checking


@dataclass(frozen=True)
class ReductionMismatch:
    instance: str
    source_verdict: str
    target_verdict: str
    status: str
    detail: str = ""


@dataclass(frozen=True)
class ReductionReport:
    """Positivity comparison of source and mapped instances over a space."""

    reduction: str
    source: str
    target: str
    instances_checked: int
    mismatches: tuple[ReductionMismatch, ...]
    oracle_calls: int
    max_steps_observed: int

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_records(self) -> str:
        lines = ["# instance\tsource_verdict\ttarget_verdict\tstatus"]
        lines.extend(
            f"{m.instance}\t{m.source_verdict}\t{m.target_verdict}\t{m.status}"
            for m in self.mismatches)
        lines.append(f"# checked {self.instances_checked} instances, "
                     f"{len(self.mismatches)} mismatches, "
                     f"{self.oracle_calls} oracle calls, "
                     f"max {self.max_steps_observed} map steps")
        return "\n".join(lines)


def _verdict(positive: bool) -> str:
    return "positive" if positive else "negative"


def check_polyreduction(red: Polyreduction | GeneralReduction, space: Iterable[str],
                        budget: StepBudget | None = None) -> ReductionReport:
    """Verify positivity agreement of w and r(w) for every w in the space."""
    mismatches = []
    checked = 0
    oracle_calls = 0
    max_steps = 0
    for w in space:
        checked += 1
        counter = StepCounter(red.budget.steps_for(len(w)))
        try:
            image = red.map_r(w, counter)
        except _OutOfSteps:
            raise BudgetExceeded(counter.max_steps) from None
        max_steps = max(max_steps, counter.used)
        src = is_positive(red.source, w, budget)
        tgt = is_positive(red.target, image, budget)
        oracle_calls += 2
        if src != tgt:
            mismatches.append(ReductionMismatch(
                w, _verdict(src), _verdict(tgt), "positivity-mismatch", image))
    return ReductionReport(red.name, red.source, red.target, checked,
                           tuple(mismatches), oracle_calls, max_steps)


def check_general_reduction(red: GeneralReduction, space: Iterable[str],
                            budget: StepBudget | None = None) -> ReductionReport:
    """Verify the full solution-mapping contract over a finite space.

    For positive w, every solution g of r(w) must map back to a solution
    of w; negative instances must stay negative (so any correct target
    solver answers "no", and r' of "no" is "no").
    """
    mismatches = []
    checked = 0
    oracle_calls = 0
    max_steps = 0
    for w in space:
        checked += 1
        counter = StepCounter(red.budget.steps_for(len(w)))
        try:
            image = red.map_r(w, counter)
        except _OutOfSteps:
            raise BudgetExceeded(counter.max_steps) from None
        max_steps = max(max_steps, counter.used)
        src = is_positive(red.source, w, budget)
        image_solutions = enumerate_solutions(red.target, image, budget)
        tgt = image_solutions != frozenset({NO})
        oracle_calls += 2
        if src != tgt:
            mismatches.append(ReductionMismatch(
                w, _verdict(src), _verdict(tgt), "positivity-mismatch", image))
            continue
        if not src:
            back = apply_solution_map(red, NO)
            if back != NO:
                mismatches.append(ReductionMismatch(
                    w, "negative", "negative", "bad-backmap", f"r'(no)={back!r}"))
            continue
        for g_solution in sorted(image_solutions):
            back = apply_solution_map(red, g_solution)
            oracle_calls += 1
            if not check_solution(red.source, w, back, budget):
                mismatches.append(ReductionMismatch(
                    w, "positive", "positive", "bad-backmap",
                    f"r'({g_solution!r})={back!r}"))
    return ReductionReport(red.name, red.source, red.target, checked,
                           tuple(mismatches), oracle_calls, max_steps)


# ---------------------------------------------------------------------------
# shipped reductions


def _identity_map(w: str, counter: StepCounter) -> str:
    counter.tick(max(len(w), 1))
    return w


def identity_reduction(source: str, target: str) -> Polyreduction:
    """The do-nothing map; sound whenever both problems share positivity."""
    return Polyreduction(f"{source}->{target}-identity", source, target, _identity_map)


_GADGET_ROLES = ("in", "mid", "out")


def _gadget_names(vertex: str) -> tuple[str, str, str]:
    # The length digit keeps the mapping injective for names up to 9 chars.
    if len(vertex) > 9:
        raise ValueError(f"vertex name {vertex!r} too long for gadget naming")
    prefix = str(len(vertex)) + vertex
    return tuple(prefix + role for role in _GADGET_ROLES)  # type: ignore[return-value]


def _split_gadget_name(name: str) -> tuple[str, str] | None:
    """Inverse of _gadget_names: (original vertex, role) or None."""
    if not name or not name[0].isdigit():
        return None
    length = int(name[0])
    vertex = name[1:1 + length]
    role = name[1 + length:]
    if len(vertex) != length or role not in _GADGET_ROLES:
        return None
    return vertex, role


def _directed_to_undirected_map(w: str, counter: StepCounter) -> str:
    """Split every vertex into an in-mid-out path; arcs join out to in.

    A Hamilton cycle of the image must run through each gadget in one
    direction, which recovers an orientation, so the image has an
    (undirected) Hamilton cycle exactly when the source digraph has a
    directed one.  Unparseable sources map to the empty graph, which
    keeps the map total and negativity aligned.
    """
    try:
        digraph = parse_graph(w, directed=True)
    except Malformed:
        return ""
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for v in digraph.vertices:
        counter.tick()
        v_in, v_mid, v_out = _gadget_names(v)
        vertices.extend((v_in, v_mid, v_out))
        edges.append((v_in, v_mid))
        edges.append((v_mid, v_out))
    for u, v in sorted(digraph.edges):
        counter.tick()
        edges.append((_gadget_names(u)[2], _gadget_names(v)[0]))
    return encode_graph(make_graph(vertices, edges, directed=False))


def _contract_gadget_cycle(solution: str, counter: StepCounter) -> str:
    """Map a Hamilton cycle of the gadget graph back to a directed cycle.

    Orientation is recovered from the out->in adjacencies, which encode
    the original arcs regardless of the traversal direction of the
    undirected cycle.  Anything unparseable maps to "no".
    """
    if solution == NO:
        return NO
    seq = parse_vertex_sequence(solution)
    if not seq or len(seq) % 3 != 0:
        return NO
    decoded = []
    for name in seq:
        counter.tick()
        parts = _split_gadget_name(name)
        if parts is None:
            return NO
        decoded.append(parts)
    arcs: dict[str, str] = {}
    n = len(decoded)
    for i in range(n):
        counter.tick()
        (u, role_u), (v, role_v) = decoded[i], decoded[(i + 1) % n]
        if role_u == "out" and role_v == "in":
            arcs[u] = v
        elif role_u == "in" and role_v == "out":
            arcs[v] = u
    originals = sorted({vertex for vertex, _ in decoded})
    if len(arcs) != len(originals) or len(originals) < 2:
        return NO
    # Follow the recovered arcs once around.
    cycle = [originals[0]]
    while True:
        counter.tick()
        nxt = arcs.get(cycle[-1])
        if nxt is None:
            return NO
        if nxt == cycle[0]:
            break
        if nxt in cycle:
            return NO
        cycle.append(nxt)
    if len(cycle) != len(originals):
        return NO
    return canonical_cycle(cycle, directed=True)


def directed_to_undirected_reduction() -> Polyreduction:
    return Polyreduction(
        "DirectedHamCycleD->UndirectedHamCycleD-gadget",
        "DirectedHamCycleD", "UndirectedHamCycleD",
        _directed_to_undirected_map)


def directed_to_undirected_general() -> GeneralReduction:
    return GeneralReduction(
        "DirectedHamCycle->HamCycle-gadget",
        "DirectedHamCycle", "HamCycle",
        _directed_to_undirected_map, _contract_gadget_cycle)


def compose_polyreductions(first: Polyreduction, second: Polyreduction) -> Polyreduction:
    """r2 after r1; requires the intermediate problems to line up."""
    if canonical_problem_name(first.target) != canonical_problem_name(second.source):
        raise ValueError(
            f"cannot compose: {first.name} targets {first.target}, "
            f"{second.name} starts from {second.source}")

    def composed(w: str, counter: StepCounter) -> str:
        return second.map_r(first.map_r(w, counter), counter)

    return Polyreduction(f"{first.name}+{second.name}", first.source,
                         second.target, composed)


_SHIPPED_REDUCTIONS: dict[str, Callable[[], Polyreduction | GeneralReduction]] = {
    "HamCycleD->HamCycle": lambda: identity_reduction("HamCycleD", "HamCycle"),
    "SatD->SatD": lambda: identity_reduction("SatD", "SatD"),
    "SatD->Sat": lambda: identity_reduction("SatD", "Sat"),
    "DirectedHamCycleD->UndirectedHamCycleD": directed_to_undirected_reduction,
    "DirectedHamCycle->HamCycle": directed_to_undirected_general,
}


def shipped_reduction_names() -> tuple[str, ...]:
    return tuple(sorted(_SHIPPED_REDUCTIONS))


def get_reduction(name: str) -> Polyreduction | GeneralReduction:
    try:
        return _SHIPPED_REDUCTIONS[name]()
    except KeyError:
        raise KeyError(f"unknown reduction {name!r}") from None


# ---------------------------------------------------------------------------
# NP-hardness via polyreduction from a certified NP-complete source

CERTIFIED_NP_COMPLETE = ("HamCycleD", "SatD")


@dataclass(frozen=True)
class HardnessJudgment:
    target: str
    source: str
    statement: str
    report: ReductionReport


def np_hard_via(red: Polyreduction, certified_npc_source: str,
                space: Iterable[str] | None = None) -> HardnessJudgment:
    """Judge red.target NP-hard by checking a reduction from a certified
    NP-complete decision problem over a desk-scale space.

    The judgment is an exhaustive small-space certification, not a proof,
    and its statement says so.
    """
    source = canonical_problem_name(certified_npc_source)
    if source not in CERTIFIED_NP_COMPLETE:
        raise SourceNotCertified(
            f"{certified_npc_source} is not in the certified list {CERTIFIED_NP_COMPLETE}")
    if canonical_problem_name(red.source) != source:
        raise SourceNotCertified(
            f"reduction source {red.source} does not match {certified_npc_source}")
    if space is None:
        from . import spaces

        space = (spaces.all_graphs(4) if source == "HamCycleD"
                 else spaces.all_cnfs(2, ("x", "y")))
    report = check_polyreduction(red, space)
    if not report.ok:
        raise ReductionCheckFailed(report)
    statement = (
        f"{red.target} is NP-hard relative to shipped certifications: "
        f"{source} polyreduces to it (desk-scale certification over "
        f"{report.instances_checked} instances, not a proof)")
    return HardnessJudgment(red.target, source, statement, report)


# ---------------------------------------------------------------------------
# decision oracles and search-to-decision self-reductions


class DecisionOracle:
    """A yes/no answerer with an exact query counter."""

    def __init__(self, answer_fn: Callable[[str], str], name: str = "oracle"):
        self._answer_fn = answer_fn
        self.name = name
        self.call_count = 0

    def answer(self, w: str) -> str:
        self.call_count += 1
        return self._answer_fn(w)


def exact_oracle(problem: str, budget: StepBudget | None = None,
                 memo: dict[str, str] | None = None) -> DecisionOracle:
    """A brute-force-backed oracle for any registered problem's positivity."""
    name = canonical_problem_name(problem)

    def answer(w: str) -> str:
        if memo is not None and w in memo:
            return memo[w]
        verdict = YES if is_positive(name, w, budget) else NO
        if memo is not None:
            memo[w] = verdict
        return verdict

    return DecisionOracle(answer, name=f"exact-{name}")


def factor_search_via_oracle(m: int, oracle: DecisionOracle) -> str:
    """Find a nontrivial factor of m with a FactorInRangeD oracle.

    Keeps a range [lo, hi] known to contain a factor and halves it per
    query, so the call count stays within 2*ceil(log2 m) + 2.
    """
    if m < 4:
        return NO
    lo, hi = 2, m - 1
    if oracle.answer(f"{m} {lo} {hi}") != YES:
        return NO
    while lo < hi:
        mid = (lo + hi) // 2
        if oracle.answer(f"{m} {lo} {mid}") == YES:
            hi = mid
        else:
            lo = mid + 1
    if m % lo != 0 or lo in (1, m):
        raise OracleInconsistent(
            f"range oracle for {m} narrowed to {lo}, which is not a factor")
    return str(lo)


def hamcycle_search_via_oracle(g: Graph, oracle: DecisionOracle) -> str:
    """Recover a Hamilton cycle using only a HamCycleD oracle.

    Greedy edge deletion in lexicographic order: an edge goes whenever
    the rest of the graph still has a Hamilton cycle.  What survives is
    exactly one Hamilton cycle, read off and canonicalized.  Uses at most
    |E| + 1 oracle calls.
    """
    if oracle.answer(encode_graph(g)) != YES:
        return NO
    current = g
    for edge in sorted(g.edges):
        pruned = current.without_edge(edge)
        if oracle.answer(encode_graph(pruned)) == YES:
            current = pruned
    # The survivor must be a single cycle through every vertex.
    adjacency = current.adjacency
    if not all(len(adjacency[v]) == 2 for v in current.vertices):
        raise OracleInconsistent("surviving edge set is not 2-regular")
    start = current.vertices[0]
    cycle = [start]
    previous = None
    while True:
        candidates = [v for v in sorted(adjacency[cycle[-1]]) if v != previous]
        if not candidates:
            raise OracleInconsistent("walk of surviving edges got stuck")
        previous = cycle[-1]
        nxt = candidates[0]
        if nxt == start:
            break
        if nxt in cycle:
            raise OracleInconsistent("surviving edges contain a short cycle")
        cycle.append(nxt)
    if len(cycle) != len(current.vertices):
        raise OracleInconsistent("surviving cycle misses vertices")
    return canonical_cycle(cycle, directed=False)


def _assign_literal(formula: CnfFormula, name: str, value: bool) -> CnfFormula | None:
    """Substitute one variable; None when an empty clause appears."""
    new_clauses = []
    for clause in formula.clauses:
        literals = set(clause)
        satisfied = False
        for positive in (True, False):
            if (name, positive) in literals:
                if positive == value:
                    satisfied = True
                literals.discard((name, positive))
        if satisfied:
            continue
        if not literals:
            return None
        new_clauses.append(frozenset(literals))
    variables = tuple(sorted({n for c in new_clauses for n, _ in c}))
    return CnfFormula(variables, tuple(new_clauses))


def sat_search_via_oracle(f: CnfFormula, oracle: DecisionOracle) -> str:
    """Recover a satisfying assignment using only a SatD oracle.

    Variables are fixed in lexicographic order, trying 1 first; satisfied
    clauses disappear, falsified literals drop out, and an empty clause
    forces the other value without a query.  Uses at most |vars| + 1
    oracle calls.
    """
    if f.clauses and oracle.answer(encode_cnf(f)) != YES:
        return NO
    assignment: dict[str, bool] = {}
    current = f
    for name in f.variables:
        if name not in current.variables:
            assignment[name] = True  # unconstrained once simplified away
            continue
        tried = _assign_literal(current, name, True)
        if tried is not None and (
                not tried.clauses or oracle.answer(encode_cnf(tried)) == YES):
            assignment[name] = True
            current = tried
            continue
        fallback = _assign_literal(current, name, False)
        if fallback is None:
            raise OracleInconsistent(
                f"both values of {name} yield an empty clause in a formula "
                f"the oracle called satisfiable")
        assignment[name] = False
        current = fallback
    if current.clauses:
        raise OracleInconsistent("variables exhausted but clauses remain")
    if f.clauses and not evaluate_cnf(f, assignment):
        raise OracleInconsistent("final assignment does not satisfy the formula")
    return encode_assignment(assignment, f.variables)
