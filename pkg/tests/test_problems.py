import itertools

import pytest

from nondec import spaces
from nondec.problems import (
    Classification,
    NotADecisionProblem,
    as_language,
    canonicalize_solution,
    classify_instance,
    decision_variant,
    from_language,
    get_problem,
    registered_names,
    solution_set,
    validate_solution_set,
)
from nondec.solvers import StepBudget, UnknownProblem

POSITIVE = Classification.POSITIVE
NEGATIVE = Classification.NEGATIVE


class TestRegistry:
    def test_all_names_registered(self):
        expected = {"Factor", "FactorD", "FactorInRangeD", "HamCycle", "HamCycleD",
                    "DirectedHamCycleD", "UndirectedHamCycleD", "HamCycleEdge",
                    "Sat", "SatD"}
        assert expected <= set(registered_names())

    def test_alias(self):
        assert get_problem("UndirectedHamCycleD") is get_problem("HamCycleD")

    def test_unknown(self):
        with pytest.raises(UnknownProblem):
            get_problem("Banana")

    def test_decision_flags(self):
        assert get_problem("FactorD").is_decision
        assert not get_problem("Factor").is_decision
        assert get_problem("FactorInRangeD").is_decision
        assert not get_problem("HamCycleEdge").is_decision


class TestClassify:
    def test_factor_positive(self):
        assert classify_instance(get_problem("Factor"), "35") is POSITIVE

    def test_factor_negative(self):
        assert classify_instance(get_problem("Factor"), "29") is NEGATIVE

    def test_malformed_is_negative(self):
        assert classify_instance(get_problem("HamCycleD"), "xx--yy") is NEGATIVE

    def test_classification_matches_solutions_exhaustively(self):
        # classify(w) is negative exactly when the solution set is {"no"},
        # over a bounded space rich in malformed strings.
        probe_strings = list(spaces.all_strings("a, b", 5))
        graph_space = list(spaces.all_graphs(4))
        for name in ("HamCycle", "HamCycleD", "HamCycleEdge"):
            p = get_problem(name)
            for w in itertools.chain(probe_strings, graph_space):
                negative = solution_set(p, w) == {"no"}
                assert (classify_instance(p, w) is NEGATIVE) == negative

    def test_classification_matches_solutions_factor(self):
        p = get_problem("Factor")
        for w in list(spaces.naturals(0, 300)) + ["", "007", "x", "1 2"]:
            negative = solution_set(p, w) == {"no"}
            assert (classify_instance(p, w) is NEGATIVE) == negative

    def test_classification_matches_solutions_sat(self):
        for name in ("Sat", "SatD"):
            p = get_problem(name)
            for w in spaces.all_cnfs(2, ("x", "y")):
                negative = solution_set(p, w) == {"no"}
                assert (classify_instance(p, w) is NEGATIVE) == negative


class TestSolutionSets:
    def test_factor_values(self):
        p = get_problem("Factor")
        assert solution_set(p, "35") == {"5", "7"}
        assert solution_set(p, "29") == {"no"}
        assert solution_set(p, "12") == {"2", "3", "4", "6"}

    def test_budget_independence(self):
        p = get_problem("Factor")
        assert solution_set(p, "96", StepBudget(10_000)) == \
            solution_set(p, "96", StepBudget(10**7))

    def test_function_problem_distinction(self):
        # FactorD always has singleton solutions; Factor does not.
        factor, factord = get_problem("Factor"), get_problem("FactorD")
        for m in range(1, 101):
            assert len(solution_set(factord, str(m))) == 1
        assert len(solution_set(factor, "12")) == 4

    def test_positivity_agreement_with_decision_partner(self):
        factor, factord = get_problem("Factor"), get_problem("FactorD")
        for m in range(1, 201):
            assert classify_instance(factor, str(m)) is classify_instance(factord, str(m))

    def test_validate_solution_set(self):
        assert validate_solution_set(frozenset({"no"})) == {"no"}
        with pytest.raises(ValueError):
            validate_solution_set(frozenset())
        with pytest.raises(ValueError):
            validate_solution_set(frozenset({"no", "5"}))


class TestDecisionVariant:
    def test_hamcycle(self):
        d = decision_variant(get_problem("HamCycle"))
        assert d is get_problem("HamCycleD")
        assert solution_set(d, "a,b b,c c,a") == {"yes"}

    def test_idempotent(self):
        d = get_problem("FactorD")
        assert decision_variant(d) is d

    def test_sat_decision(self):
        d = decision_variant(get_problem("Sat"))
        assert solution_set(d, "x !x") == {"no"}

    def test_constructed_for_unpartnered_problem(self):
        d = decision_variant(get_problem("HamCycleEdge"))
        assert d.is_decision
        assert solution_set(d, "a,b b,c c,a") == {"yes"}
        assert solution_set(d, "a,b") == {"no"}

    def test_agreement_exhaustive(self):
        for name in ("Factor", "HamCycle", "Sat", "HamCycleEdge"):
            p = get_problem(name)
            d = decision_variant(p)
            space = {
                "Factor": [str(m) for m in range(0, 120)],
                "HamCycle": list(spaces.all_graphs(4)),
                "HamCycleEdge": list(spaces.all_graphs(4)),
                "Sat": list(spaces.all_cnfs(2, ("x", "y"))),
            }[name]
            for w in space:
                assert classify_instance(p, w) is classify_instance(d, w)


class TestLanguageCorrespondence:
    def test_as_language_contains(self):
        lang = as_language(get_problem("FactorD"))
        assert lang.contains("35")
        assert not lang.contains("29")
        assert not lang.contains("banana")

    def test_rejects_search_problems(self):
        with pytest.raises(NotADecisionProblem):
            as_language(get_problem("Factor"))

    def test_round_trip_matches_original(self):
        # from_language(as_language(D)) classifies a bounded string space
        # identically to D, including malformed strings.
        d = get_problem("HamCycleD")
        rebuilt = from_language(as_language(d))
        assert rebuilt.is_decision
        pool = itertools.chain(spaces.all_strings("ab, ", 6), spaces.all_graphs(4))
        for w in pool:
            assert classify_instance(rebuilt, w) is classify_instance(d, w)
            assert solution_set(rebuilt, w) == solution_set(d, w)


class TestCanonicalizeSolution:
    def test_cycle_rotation(self):
        assert canonicalize_solution("HamCycle", "a,c,b") == "a,b,c"
        assert canonicalize_solution("HamCycle", "b,c,a") == "a,b,c"

    def test_directed_keeps_orientation(self):
        assert canonicalize_solution("DirectedHamCycle", "c,a,b") == "a,b,c"
        assert canonicalize_solution("DirectedHamCycle", "a,c,b") == "a,c,b"

    def test_factor_leading_zeros(self):
        assert canonicalize_solution("Factor", "007") == "7"

    def test_assignment_reordering(self):
        assert canonicalize_solution("Sat", "y=0 x=1") == "x=1 y=0"

    def test_edge_sorting(self):
        assert canonicalize_solution("HamCycleEdge", "b,a") == "a,b"

    def test_garbage_unchanged(self):
        for s in ("", "no", "???", "a,a"):
            assert canonicalize_solution("HamCycle", s) == s
