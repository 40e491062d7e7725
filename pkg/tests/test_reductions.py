import math

import pytest

from nondec import spaces
from nondec.encodings import parse_cnf, parse_graph
from nondec.reductions import (
    DecisionOracle,
    GeneralReduction,
    OracleInconsistent,
    Polyreduction,
    ReductionCheckFailed,
    SourceNotCertified,
    apply_general_reduction,
    apply_polyreduction,
    apply_solution_map,
    check_general_reduction,
    check_polyreduction,
    compose_polyreductions,
    directed_to_undirected_general,
    directed_to_undirected_reduction,
    exact_oracle,
    factor_search_via_oracle,
    get_reduction,
    hamcycle_search_via_oracle,
    identity_reduction,
    np_hard_via,
    sat_search_via_oracle,
)
from nondec.solvers import check_solution, enumerate_solutions, is_positive

DIRECTED_TRIANGLE = "a,b b,c c,a"


class TestPolyreductions:
    def test_identity_application(self):
        red = get_reduction("HamCycleD->HamCycle")
        assert apply_polyreduction(red, DIRECTED_TRIANGLE) == DIRECTED_TRIANGLE
        assert apply_polyreduction(red, "") == ""

    def test_source_must_be_decision(self):
        with pytest.raises(ValueError):
            identity_reduction("Factor", "Factor")

    def test_identity_check_clean(self):
        report = check_polyreduction(get_reduction("HamCycleD->HamCycle"),
                                     spaces.all_graphs(4))
        assert report.ok and report.instances_checked == 76

    def test_gadget_on_directed_triangle(self):
        red = directed_to_undirected_reduction()
        image = apply_polyreduction(red, DIRECTED_TRIANGLE)
        g = parse_graph(image)
        assert len(g.vertices) == 9
        # Each vertex gadget is an in-mid-out path; arcs join out to in.
        assert g.has_edge("1ain", "1amid") and g.has_edge("1amid", "1aout")
        assert g.has_edge("1aout", "1bin")
        assert g.has_edge("1cout", "1ain")
        assert is_positive("HamCycleD", image)

    def test_gadget_totality_on_malformed(self):
        red = directed_to_undirected_reduction()
        assert apply_polyreduction(red, "not a graph!") == ""

    def test_gadget_check_exhaustive(self):
        report = check_polyreduction(directed_to_undirected_reduction(),
                                     spaces.all_graphs(4, directed=True))
        assert report.ok
        assert report.instances_checked == 4166

    def test_broken_reduction_reports_mismatch(self):
        # Dropping the lexicographically last arc turns the directed
        # triangle negative while the source stays positive.
        def broken(w, counter):
            counter.tick(max(len(w), 1))
            good = directed_to_undirected_reduction()
            tokens = w.split(" ") if w else []
            if len(tokens) > 1:
                w = " ".join(tokens[:-1])
            return good.map_r(w, counter)

        red = Polyreduction("broken-drop-arc", "DirectedHamCycleD",
                            "UndirectedHamCycleD", broken)
        report = check_polyreduction(red, [DIRECTED_TRIANGLE])
        assert not report.ok
        mismatch = report.mismatches[0]
        assert mismatch.source_verdict == "positive"
        assert mismatch.target_verdict == "negative"

    def test_composition(self):
        composite = compose_polyreductions(
            get_reduction("DirectedHamCycleD->UndirectedHamCycleD"),
            identity_reduction("UndirectedHamCycleD", "HamCycle"))
        report = check_polyreduction(composite, spaces.all_graphs(3, directed=True))
        assert report.ok
        assert composite.source == "DirectedHamCycleD"
        assert composite.target == "HamCycle"

    def test_composition_requires_matching_interface(self):
        with pytest.raises(ValueError):
            compose_polyreductions(get_reduction("HamCycleD->HamCycle"),
                                   get_reduction("SatD->Sat"))

    def test_records_format(self):
        report = check_polyreduction(get_reduction("HamCycleD->HamCycle"), ["a,b"])
        lines = report.to_records().splitlines()
        assert lines[0] == "# instance\tsource_verdict\ttarget_verdict\tstatus"
        assert lines[-1].startswith("# checked 1 instances")
        assert "oracle calls" in lines[-1]


class TestGeneralReduction:
    def test_identity_general(self):
        red = GeneralReduction(
            "hamcycle-identity", "HamCycle", "HamCycle",
            lambda w, c: w, lambda s, c: s)
        report = check_general_reduction(red, spaces.all_graphs(4))
        assert report.ok

    def test_gadget_backmap_on_triangle(self):
        red = directed_to_undirected_general()
        image = apply_polyreduction(red, DIRECTED_TRIANGLE)
        for g_solution in sorted(enumerate_solutions("HamCycle", image)):
            back = apply_solution_map(red, g_solution)
            assert check_solution("DirectedHamCycle", DIRECTED_TRIANGLE, back)

    def test_gadget_backmap_exhaustive(self):
        report = check_general_reduction(directed_to_undirected_general(),
                                         spaces.all_graphs(4, directed=True))
        assert report.ok
        assert report.instances_checked == 4166

    def test_two_cycle_contracts(self):
        red = directed_to_undirected_general()
        image = apply_polyreduction(red, "a,b b,a")
        solutions = enumerate_solutions("HamCycle", image)
        assert solutions != {"no"}
        for g_solution in solutions:
            assert apply_solution_map(red, g_solution) == "a,b"

    def test_no_maps_to_no(self):
        red = directed_to_undirected_general()
        assert apply_solution_map(red, "no") == "no"

    def test_broken_backmap_detected(self):
        good = directed_to_undirected_general()

        def reversed_names(s, counter):
            counter.tick()
            out = good.map_r_back(s, counter)
            if out == "no":
                return out
            return ",".join(reversed(out.split(",")))

        red = GeneralReduction("broken-reverse", "DirectedHamCycle", "HamCycle",
                               good.map_r, reversed_names)
        # The directed triangle's reversed cycle is not a directed cycle of
        # the asymmetric instance.
        report = check_general_reduction(red, [DIRECTED_TRIANGLE])
        assert not report.ok
        assert report.mismatches[0].status == "bad-backmap"

    def test_apply_general_reduction_end_to_end(self):
        red = directed_to_undirected_general()

        def solver(w):
            return sorted(enumerate_solutions("HamCycle", w))[0]

        assert apply_general_reduction(red, solver, DIRECTED_TRIANGLE) == "a,b,c"


class TestNpHardness:
    def test_identity_judgment(self):
        judgment = np_hard_via(get_reduction("HamCycleD->HamCycle"), "HamCycleD")
        assert judgment.target == "HamCycle"
        assert "NP-hard relative to shipped certifications" in judgment.statement
        assert "desk-scale certification" in judgment.statement
        assert judgment.report.ok

    def test_satd_reflexive(self):
        judgment = np_hard_via(get_reduction("SatD->SatD"), "SatD")
        assert judgment.target == "SatD"

    def test_uncertified_source_rejected(self):
        red = identity_reduction("FactorD", "Factor")
        with pytest.raises(SourceNotCertified):
            np_hard_via(red, "FactorD")

    def test_failing_reduction_rejected(self):
        def swap(w, counter):
            counter.tick()
            return "a,b b,c c,a" if w == "" else ""

        red = Polyreduction("broken-swap", "HamCycleD", "HamCycle", swap)
        with pytest.raises(ReductionCheckFailed):
            np_hard_via(red, "HamCycleD")


class TestFactorSearch:
    def test_m35(self):
        oracle = exact_oracle("FactorInRangeD")
        assert factor_search_via_oracle(35, oracle) == "5"
        assert oracle.call_count <= 12

    def test_m29_single_call(self):
        oracle = exact_oracle("FactorInRangeD")
        assert factor_search_via_oracle(29, oracle) == "no"
        assert oracle.call_count == 1

    def test_m4(self):
        oracle = exact_oracle("FactorInRangeD")
        assert factor_search_via_oracle(4, oracle) == "2"

    def test_call_budget_up_to_500(self):
        for m in range(1, 501):
            oracle = exact_oracle("FactorInRangeD")
            answer = factor_search_via_oracle(m, oracle)
            assert oracle.call_count <= 2 * math.ceil(math.log2(max(m, 2))) + 2
            if answer == "no":
                assert enumerate_solutions("Factor", str(m)) == {"no"}
            else:
                assert check_solution("Factor", str(m), answer)

    def test_inconsistent_oracle_detected(self):
        lying = DecisionOracle(lambda w: "yes", name="always-yes")
        with pytest.raises(OracleInconsistent):
            factor_search_via_oracle(29, lying)


class TestHamCycleSearch:
    def test_triangle(self):
        oracle = exact_oracle("HamCycleD")
        g = parse_graph("a,b b,c c,a")
        assert hamcycle_search_via_oracle(g, oracle) == "a,b,c"
        assert oracle.call_count <= 4

    def test_k4_lexicographic_deletion(self):
        # Hand trace: a,b and c,d get deleted, the surviving 4-cycle reads
        # off as a,c,b,d; one initial call plus one per edge.
        oracle = exact_oracle("HamCycleD")
        g = parse_graph("a,b a,c a,d b,c b,d c,d")
        answer = hamcycle_search_via_oracle(g, oracle)
        assert answer == "a,c,b,d"
        assert oracle.call_count == 7
        assert check_solution("HamCycle", "a,b a,c a,d b,c b,d c,d", answer)

    def test_two_path_single_call(self):
        oracle = exact_oracle("HamCycleD")
        assert hamcycle_search_via_oracle(parse_graph("a,b b,c"), oracle) == "no"
        assert oracle.call_count == 1

    def test_inconsistent_oracle_detected(self):
        lying = DecisionOracle(lambda w: "yes", name="always-yes")
        with pytest.raises(OracleInconsistent):
            hamcycle_search_via_oracle(parse_graph("a,b b,c"), lying)


class TestSatSearch:
    def test_worked_example(self):
        oracle = exact_oracle("SatD")
        assert sat_search_via_oracle(parse_cnf("x,!y y,z"), oracle) == "x=1 y=1 z=1"
        assert oracle.call_count <= 4

    def test_unsat_single_call(self):
        oracle = exact_oracle("SatD")
        assert sat_search_via_oracle(parse_cnf("x !x"), oracle) == "no"
        assert oracle.call_count == 1

    def test_single_clause(self):
        oracle = exact_oracle("SatD")
        assert sat_search_via_oracle(parse_cnf("x"), oracle) == "x=1"
        assert oracle.call_count <= 2

    def test_empty_formula(self):
        oracle = exact_oracle("SatD")
        assert sat_search_via_oracle(parse_cnf(""), oracle) == ""
        assert oracle.call_count == 0

    def test_exhaustive_small_formulas(self):
        for w in spaces.all_cnfs(2, ("x", "y")):
            formula = parse_cnf(w)
            oracle = exact_oracle("SatD")
            answer = sat_search_via_oracle(formula, oracle)
            assert oracle.call_count <= len(formula.variables) + 1
            solutions = enumerate_solutions("Sat", w)
            if answer == "no":
                assert solutions == {"no"}
            else:
                assert answer in solutions

    def test_inconsistent_oracle_detected(self):
        lying = DecisionOracle(lambda w: "yes", name="always-yes")
        with pytest.raises(OracleInconsistent):
            sat_search_via_oracle(parse_cnf("x !x"), lying)


class TestDecisionOracle:
    def test_call_count_increments_by_one(self):
        oracle = exact_oracle("FactorD")
        assert oracle.call_count == 0
        oracle.answer("35")
        assert oracle.call_count == 1
        oracle.answer("35")
        assert oracle.call_count == 2

    def test_memo_shares_answers_not_counts(self):
        memo = {}
        first = exact_oracle("HamCycleD", memo=memo)
        second = exact_oracle("HamCycleD", memo=memo)
        assert first.answer("a,b b,c c,a") == "yes"
        assert second.answer("a,b b,c c,a") == "yes"
        assert first.call_count == 1 and second.call_count == 1
