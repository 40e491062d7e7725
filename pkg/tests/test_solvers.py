import itertools

import pytest

from nondec import spaces
from nondec.encodings import canonical_cycle, parse_graph
from nondec.solvers import (
    BudgetExceeded,
    Output,
    StepBudget,
    StepCounter,
    Timeout,
    UnknownProblem,
    always_no_program,
    check_solution,
    constant_program,
    cycle_walk_program,
    echo_yes_program,
    enumerate_solutions,
    run_program,
    satd_bruteforce_program,
    solves_on_space,
    trial_division_program,
)


class TestEnumerateSolutions:
    def test_factor_35(self):
        assert enumerate_solutions("Factor", "35") == {"5", "7"}

    def test_factor_29_negative(self):
        assert enumerate_solutions("Factor", "29") == {"no"}

    def test_factor_12(self):
        # Trial division over 2..11 by hand: 2, 3, 4, 6.
        assert enumerate_solutions("Factor", "12") == {"2", "3", "4", "6"}

    @pytest.mark.parametrize("w", ["0", "1", "2", "3", "banana", "007", ""])
    def test_factor_degenerate_inputs_negative(self, w):
        assert enumerate_solutions("Factor", w) == {"no"}

    def test_hamcycle_triangle(self):
        assert enumerate_solutions("HamCycle", "a,b b,c c,a") == {"a,b,c"}

    def test_hamcycle_path_negative(self):
        assert enumerate_solutions("HamCycle", "a,b b,c") == {"no"}

    def test_hamcycle_malformed_negative(self):
        assert enumerate_solutions("HamCycle", "xx--yy") == {"no"}

    def test_hamcycle_edge_k4(self):
        # K4 has three Hamilton cycles; together they cover all six edges.
        k4 = "a,b a,c a,d b,c b,d c,d"
        assert enumerate_solutions("HamCycle", k4) == {"a,b,c,d", "a,b,d,c", "a,c,b,d"}
        assert enumerate_solutions("HamCycleEdge", k4) == {
            "a,b", "a,c", "a,d", "b,c", "b,d", "c,d"}

    def test_hamcycle_edge_five_cycle(self):
        five = "a,b b,p p,q q,r r,a"
        assert enumerate_solutions("HamCycleEdge", five) == {
            "a,b", "b,p", "p,q", "q,r", "a,r"}

    def test_sat(self):
        assert enumerate_solutions("Sat", "x,!y y,z") == {
            "x=0 y=0 z=1", "x=1 y=0 z=1", "x=1 y=1 z=0", "x=1 y=1 z=1"}

    def test_sat_unsat(self):
        assert enumerate_solutions("Sat", "x !x") == {"no"}

    def test_sat_empty_formula_vacuous(self):
        assert enumerate_solutions("Sat", "") == {""}

    def test_decision_problems_yes_no(self):
        assert enumerate_solutions("FactorD", "35") == {"yes"}
        assert enumerate_solutions("FactorD", "29") == {"no"}
        assert enumerate_solutions("SatD", "x !x") == {"no"}
        assert enumerate_solutions("HamCycleD", "a,b b,c c,a") == {"yes"}

    def test_factor_in_range(self):
        assert enumerate_solutions("FactorInRangeD", "35 2 6") == {"yes"}
        assert enumerate_solutions("FactorInRangeD", "35 8 34") == {"no"}
        assert enumerate_solutions("FactorInRangeD", "35 6") == {"no"}  # malformed

    def test_directed_two_cycle(self):
        assert enumerate_solutions("DirectedHamCycle", "a,b b,a") == {"a,b"}
        assert enumerate_solutions("DirectedHamCycle", "a,b") == {"no"}

    def test_alias(self):
        assert enumerate_solutions("UndirectedHamCycleD", "a,b b,c c,a") == {"yes"}

    def test_unknown_problem(self):
        with pytest.raises(UnknownProblem):
            enumerate_solutions("Banana", "1")

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            enumerate_solutions("Factor", "999983", StepBudget(1000))


def _hamilton_cycles_reference(text):
    """Independent oracle: filter all vertex permutations by edge walks."""
    g = parse_graph(text)
    n = len(g.vertices)
    if n < 3:
        return frozenset()
    found = set()
    for perm in itertools.permutations(g.vertices):
        if all(g.has_edge(u, v) for u, v in zip(perm, perm[1:] + perm[:1])):
            found.add(canonical_cycle(perm, directed=False))
    return frozenset(found)


class TestOracleCompleteness:
    def test_hamcycle_matches_permutation_enumeration(self):
        # Two independent enumeration orders agree on every graph <= 5
        # vertices (the backtracking oracle vs brute permutation filtering).
        for w in spaces.all_graphs(5):
            expected = _hamilton_cycles_reference(w) or frozenset({"no"})
            assert enumerate_solutions("HamCycle", w) == expected

    def test_soundness_link_hamcycle(self):
        # s is enumerated iff check_solution accepts it, over a candidate
        # pool rich enough to include wrong and non-canonical strings.
        for w in spaces.all_graphs(4):
            solutions = enumerate_solutions("HamCycle", w)
            g = parse_graph(w)
            pool = {",".join(p)
                    for k in (2, 3, 4)
                    for p in itertools.permutations(g.vertices, k)}
            pool |= solutions | {"no", "", "a"}
            for s in pool:
                assert check_solution("HamCycle", w, s) == (s in solutions)

    def test_soundness_link_factor(self):
        for m in range(1, 120):
            w = str(m)
            solutions = enumerate_solutions("Factor", w)
            for s in [str(v) for v in range(0, m + 2)] + ["no", "07", ""]:
                assert check_solution("Factor", w, s) == (s in solutions)

    def test_soundness_link_sat(self):
        for w in spaces.all_cnfs(2, ("x", "y")):
            solutions = enumerate_solutions("Sat", w)
            pool = set(solutions) | {
                "x=0", "x=1", "y=0", "y=1", "x=0 y=0", "x=0 y=1",
                "x=1 y=0", "x=1 y=1", "y=1 x=0", "", "no", "x=2"}
            for s in pool:
                assert check_solution("Sat", w, s) == (s in solutions)

    def test_soundness_link_hamcycle_edge(self):
        for w in spaces.all_graphs(4):
            solutions = enumerate_solutions("HamCycleEdge", w)
            g = parse_graph(w)
            pool = {f"{u},{v}" for u in g.vertices for v in g.vertices if u != v}
            pool |= {"no", "", "a,b,c"}
            for s in pool:
                assert check_solution("HamCycleEdge", w, s) == (s in solutions)


class TestRunProgram:
    def test_trial_division_smallest_factor_first(self):
        outcome = run_program(trial_division_program(), "35")
        assert isinstance(outcome, Output) and outcome.text == "5"

    def test_trial_division_prime(self):
        assert run_program(trial_division_program(), "29").text == "no"

    def test_timeout_budget_one(self):
        for prog in (trial_division_program(), constant_program("q"),
                     echo_yes_program(), satd_bruteforce_program(),
                     cycle_walk_program()):
            outcome = run_program(prog, "35", StepBudget(1))
            assert outcome == Timeout(steps_used=1)

    def test_monotone_budgets(self):
        base = run_program(trial_division_program(), "91", StepBudget(200))
        assert isinstance(base, Output)
        for extra in (201, 1000, 10**6):
            again = run_program(trial_division_program(), "91", StepBudget(extra))
            assert again.text == base.text
            assert again.steps_used == base.steps_used

    def test_step_count_tracks_input_magnitude(self):
        # Trial division on a prime m runs ~m division candidates.
        for m in (101, 211, 401, 809):
            outcome = run_program(trial_division_program(), str(m))
            assert isinstance(outcome, Output)
            assert m - 2 <= outcome.steps_used <= 3 * m

    def test_step_counter_exact_exhaustion(self):
        counter = StepCounter(5)
        counter.tick(5)
        assert counter.used == 5
        from nondec.solvers import _OutOfSteps
        with pytest.raises(_OutOfSteps):
            counter.tick()
        assert counter.used == 5

    def test_non_ascii_output_rejected(self):
        from nondec.solvers import Program

        bad = Program("emits-bytes", lambda w, c: "café")
        with pytest.raises(ValueError):
            run_program(bad, "x")


class TestSolvesOnSpace:
    def test_trial_division_solves_factor(self):
        report = solves_on_space(trial_division_program(), "Factor",
                                 spaces.naturals(1, 200))
        assert report.ok
        assert report.instances_checked == 200

    def test_always_no_fails_exactly_on_composites(self):
        report = solves_on_space(always_no_program(), "Factor",
                                 spaces.naturals(1, 200))
        composites = {str(m) for m in range(4, 201)
                      if any(m % d == 0 for d in range(2, m))}
        assert {v.instance for v in report.violations} == composites

    def test_echo_yes_on_singleton(self):
        report = solves_on_space(echo_yes_program(), "FactorD", ["4"])
        assert report.ok

    def test_records_format(self):
        report = solves_on_space(always_no_program(), "FactorD", ["4", "5"])
        lines = report.to_records().splitlines()
        assert lines[0] == "# instance\tverdict\tdetail"
        assert lines[1] == "4\twrong-output\tno"
        assert lines[-1].startswith("# checked 2 instances")
