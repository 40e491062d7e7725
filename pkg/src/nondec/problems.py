"""The registry of computational problems.

A computational problem is a *total* map from ASCII strings to finite,
nonempty sets of ASCII strings.  The singleton {"no"} marks a negative
instance; every other solution set belongs to a positive instance and
never contains "no".  Decision problems are the special case whose
solution sets are always {"yes"} or {"no"}.

Strings that do not parse are not errors: a total problem must answer
them, and it answers "no".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from . import solvers
from .encodings import (
    canonical_cycle,
    encode_assignment,
    parse_assignment,
    parse_natural,
    parse_vertex_sequence,
)
from .solvers import NO, YES, StepBudget, UnknownProblem

SolutionSet = frozenset[str]

NEGATIVE_SOLUTIONS: SolutionSet = frozenset({NO})


class Classification(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


def validate_solution_set(members: frozenset[str]) -> SolutionSet:
    """Enforce the solution-set shape: nonempty, and "no" only alone."""
    if not members:
        raise ValueError("solution sets are never empty")
    if NO in members and members != NEGATIVE_SOLUTIONS:
        raise ValueError('"no" cannot appear alongside other solutions')
    return members


@dataclass(frozen=True)
class ComputationalProblem:
    """A named total map from strings to solution sets."""

    name: str
    is_decision: bool
    classify: Callable[[str], Classification]
    solutions: Callable[..., SolutionSet]  # (w, budget=None) -> SolutionSet


@dataclass(frozen=True)
class MembershipPredicate:
    """The language view of a decision problem: a set of strings."""

    name: str
    contains: Callable[[str], bool]


class NotADecisionProblem(TypeError):
    """as_language only applies to decision problems."""


def _build(name: str) -> ComputationalProblem:
    def classify(w: str, budget: StepBudget | None = None) -> Classification:
        if solvers.is_positive(name, w, budget):
            return Classification.POSITIVE
        return Classification.NEGATIVE

    def solutions(w: str, budget: StepBudget | None = None) -> SolutionSet:
        return validate_solution_set(solvers.enumerate_solutions(name, w, budget))

    return ComputationalProblem(
        name=name,
        is_decision=solvers.problem_is_decision(name),
        classify=classify,
        solutions=solutions,
    )


_REGISTRY: dict[str, ComputationalProblem] = {
    name: _build(name) for name in solvers.registered_problem_names()
    if name == solvers.canonical_problem_name(name)
}


def registered_names() -> tuple[str, ...]:
    """All accepted problem names, aliases included."""
    return solvers.registered_problem_names()


def get_problem(name: str) -> ComputationalProblem:
    """Look up a registered problem; aliases resolve to their target."""
    try:
        return _REGISTRY[solvers.canonical_problem_name(name)]
    except UnknownProblem:
        raise UnknownProblem(name) from None


def classify_instance(p: ComputationalProblem, w: str,
                      budget: StepBudget | None = None) -> Classification:
    """Positive iff the solution set of w is not {"no"}.  Total: strings
    outside the instance grammar classify negative."""
    return p.classify(w, budget)


def solution_set(p: ComputationalProblem, w: str,
                 budget: StepBudget | None = None) -> SolutionSet:
    """The complete, canonical, finite solution set of w."""
    return p.solutions(w, budget)


def decision_variant(p: ComputationalProblem) -> ComputationalProblem:
    """The yes/no problem with the same positive instances.

    Registered problems map to their registered decision partners;
    decision problems return themselves.
    """
    if p.is_decision:
        return p
    partner = p.name + "D"
    try:
        return get_problem(partner)
    except UnknownProblem:
        pass

    def classify(w: str, budget: StepBudget | None = None) -> Classification:
        return p.classify(w, budget)

    def solutions(w: str, budget: StepBudget | None = None) -> SolutionSet:
        if p.classify(w, budget) is Classification.POSITIVE:
            return frozenset({YES})
        return NEGATIVE_SOLUTIONS

    return ComputationalProblem(partner, True, classify, solutions)


def as_language(d: ComputationalProblem) -> MembershipPredicate:
    """The set of positive instances, as a membership predicate."""
    if not d.is_decision:
        raise NotADecisionProblem(f"{d.name} is not a decision problem")

    def contains(w: str) -> bool:
        return d.classify(w) is Classification.POSITIVE

    return MembershipPredicate(name=d.name, contains=contains)


def from_language(m: MembershipPredicate,
                  name: str | None = None) -> ComputationalProblem:
    """The decision problem answering "yes" exactly on members."""
    problem_name = name or f"decides-{m.name}"

    def classify(w: str, budget: StepBudget | None = None) -> Classification:
        return Classification.POSITIVE if m.contains(w) else Classification.NEGATIVE

    def solutions(w: str, budget: StepBudget | None = None) -> SolutionSet:
        return frozenset({YES}) if m.contains(w) else NEGATIVE_SOLUTIONS

    return ComputationalProblem(problem_name, True, classify, solutions)


def canonicalize_solution(problem: str, s: str) -> str:
    """Best-effort rewrite of s into the canonical form its problem uses.

    Unparseable strings come back unchanged; this never turns a
    non-solution into a solution, it only merges spelling variants
    (cycle rotations, unsorted assignments, leading zeros).
    """
    name = solvers.canonical_problem_name(problem)
    if name in ("HamCycle", "DirectedHamCycle"):
        seq = parse_vertex_sequence(s)
        if seq and len(seq) >= 2:
            return canonical_cycle(seq, directed=name == "DirectedHamCycle")
        return s
    if name == "HamCycleEdge":
        seq = parse_vertex_sequence(s)
        if seq and len(seq) == 2:
            return f"{min(seq)},{max(seq)}"
        return s
    if name == "Factor":
        value = s.lstrip("0") or "0"
        return value if parse_natural(value) is not None else s
    if name == "Sat":
        tokens = s.split(" ") if s else []
        pairs = {}
        for token in tokens:
            var, sep, bit = token.partition("=")
            if not sep or bit not in ("0", "1") or var in pairs:
                return s
            pairs[var] = bit == "1"
        if parse_assignment(s) is not None or pairs:
            try:
                return encode_assignment(pairs, pairs.keys())
            except Exception:
                return s
    return s
