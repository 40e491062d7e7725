import pytest

from nondec import spaces
from nondec.solvers import StepBudget, UnknownProblem
from nondec.verifiers import (
    ACCEPTS_NEGATIVE_INSTANCE,
    SearchSpaceTooLarge,
    UnknownKind,
    VerifierTimeout,
    adversarial_verifier,
    check_verifier_axioms,
    verifier_for,
    verify,
)

FIVE_CYCLE = "a,b b,p p,q q,r r,a"
TRIANGLE = "a,b b,c c,a"


class TestShippedVerifiers:
    def test_hamcycle_accepts_solution_without_hint(self):
        v = verifier_for("HamCycle")
        assert verify(v, TRIANGLE, "a,b,c", "") == "yes"

    def test_hamcycle_rejects_non_cycle(self):
        v = verifier_for("HamCycle")
        assert verify(v, TRIANGLE, "a,c", "") == "no"

    def test_hamcycle_rejects_non_canonical_spelling(self):
        # Only the canonical representative is the solution-set member.
        v = verifier_for("HamCycle")
        assert verify(v, TRIANGLE, "a,c,b") == "no"
        assert verify(v, TRIANGLE, "b,c,a") == "no"

    def test_hamcycle_hint_irrelevant(self):
        v = verifier_for("HamCycle")
        for h in ("", "a", "b,c", "zz", "no", "yes", "a,b,c"):
            assert verify(v, TRIANGLE, "a,b,c", h) == "yes"
            assert verify(v, TRIANGLE, "a,c", h) == "no"
        assert not v.reads_hint

    def test_factor(self):
        v = verifier_for("Factor")
        assert verify(v, "35", "7") == "yes"
        assert verify(v, "35", "5") == "yes"
        assert verify(v, "35", "6") == "no"
        assert verify(v, "35", "1") == "no"
        assert verify(v, "35", "35") == "no"
        assert verify(v, "35", "05") == "no"

    def test_factor_prime_rejects_all_short_strings(self):
        # 29 is prime: no (s, h) up to 4 bytes over the digit alphabet
        # gets verified.  Exhaustive.
        v = verifier_for("Factor")
        for s in spaces.all_strings("0123456789", 4):
            assert verify(v, "29", s, "") == "no"

    def test_sat(self):
        v = verifier_for("Sat")
        assert verify(v, "x,!y y,z", "x=1 y=1 z=1") == "yes"
        assert verify(v, "x,!y y,z", "x=0 y=1 z=1") == "no"
        assert verify(v, "x,!y y,z", "y=1 x=1 z=1") == "no"  # not canonical
        assert verify(v, "x,!y y,z", "x=1 y=1") == "no"  # partial

    def test_satd_unsat_rejects_all_hints(self):
        v = verifier_for("SatD")
        for h in spaces.all_strings("x=01 ", 8):
            assert verify(v, "x !x", "yes", h) == "no"

    def test_hamcycle_edge_needs_hint(self):
        v = verifier_for("HamCycleEdge")
        assert verify(v, FIVE_CYCLE, "a,b", "p,q,r") == "yes"
        assert verify(v, FIVE_CYCLE, "a,b", "") == "no"
        assert verify(v, FIVE_CYCLE, "a,b", "q,p,r") == "no"  # wrong order
        assert verify(v, FIVE_CYCLE, "a,q", "p,q,r") == "no"  # not an edge
        assert v.reads_hint

    def test_decision_verifiers_take_certificate_in_hint(self):
        assert verify(verifier_for("HamCycleD"), TRIANGLE, "yes", "a,b,c") == "yes"
        assert verify(verifier_for("HamCycleD"), TRIANGLE, "yes", "b,c,a") == "yes"
        assert verify(verifier_for("HamCycleD"), TRIANGLE, "yes", "a,b") == "no"
        assert verify(verifier_for("HamCycleD"), TRIANGLE, "no", "a,b,c") == "no"
        assert verify(verifier_for("FactorD"), "35", "yes", "5") == "yes"
        assert verify(verifier_for("FactorD"), "35", "yes", "6") == "no"
        assert verify(verifier_for("FactorInRangeD"), "35 2 6", "yes", "5") == "yes"
        assert verify(verifier_for("FactorInRangeD"), "35 6 6", "yes", "5") == "no"
        assert verify(verifier_for("SatD"), "x,y", "yes", "x=0 y=1") == "yes"

    def test_malformed_instance_rejects_everything(self):
        for name in ("Factor", "HamCycle", "Sat", "HamCycleD"):
            v = verifier_for(name)
            assert verify(v, "--bad--", "yes", "") == "no"
            assert verify(v, "--bad--", "", "") == "no"

    def test_never_accepts_the_no_sentinel(self):
        for name in ("Factor", "HamCycle", "Sat", "FactorD", "SatD"):
            v = verifier_for(name)
            assert verify(v, "29", "no", "") == "no"

    def test_unknown_problem(self):
        with pytest.raises(UnknownProblem):
            verifier_for("Banana")

    def test_timeout_is_an_error_not_a_verdict(self):
        v = verifier_for("HamCycle")
        with pytest.raises(VerifierTimeout):
            verify(v, TRIANGLE, "a,b,c", "", StepBudget(1))

    def test_acceptance_implies_solution(self):
        # Whenever a shipped verifier accepts, check_solution agrees.
        from nondec.solvers import check_solution

        v = verifier_for("HamCycle")
        for w in spaces.all_graphs(4):
            for s in v.solution_space(w, 8):
                if verify(v, w, s) == "yes":
                    assert check_solution("HamCycle", w, s)


class TestAxiomChecker:
    def test_hamcycle_passes_small_space(self):
        report = check_verifier_axioms(
            verifier_for("HamCycle"), "HamCycle", spaces.all_graphs(4))
        assert report.passed
        assert report.positives == 11
        assert report.axiom1_covered == 11

    def test_factor_passes(self):
        report = check_verifier_axioms(
            verifier_for("Factor"), "Factor", spaces.naturals(1, 60),
            string_bound=3, alphabet="0123456789")
        assert report.passed

    def test_hamcycle_edge_passes(self):
        report = check_verifier_axioms(
            verifier_for("HamCycleEdge"), "HamCycleEdge", spaces.all_graphs(4))
        assert report.passed

    def test_strict_mode_covers_every_solution(self):
        report = check_verifier_axioms(
            verifier_for("HamCycle"), "HamCycle", spaces.all_graphs(4), strict=True)
        assert report.passed
        # One witness per (instance, solution) pair in strict mode.
        k4_solutions = {r.s for r in report.axiom1_witnesses
                        if r.instance == "a,b a,c a,d b,c b,d c,d"}
        assert k4_solutions == {"a,b,c,d", "a,b,d,c", "a,c,b,d"}

    def test_search_space_ceiling(self):
        with pytest.raises(SearchSpaceTooLarge):
            check_verifier_axioms(
                verifier_for("HamCycle"), "HamCycle", spaces.all_graphs(4),
                max_calls=10)

    def test_records_format(self):
        report = check_verifier_axioms(
            verifier_for("Factor"), "Factor", ["4", "5"], string_bound=2,
            alphabet="0123456789")
        lines = report.to_records().splitlines()
        assert lines[0] == "# axiom\tinstance\ts\th\tverdict"
        assert lines[1] == "1\t4\t2\t\tverified"
        assert lines[-1].startswith("# verdict\tPASS")


class TestAdversarialVerifiers:
    def test_partial_cycle_fails_axiom3_only(self):
        report = check_verifier_axioms(
            adversarial_verifier("partial-cycle-as-solution"), "HamCycle",
            spaces.all_graphs(4))
        assert not report.passed
        assert not report.axiom1_failures
        assert not report.axiom2_violations
        assert report.axiom3_violations
        # The documented witness: "a,b" accepted on the triangle (the
        # space spells it canonically).
        assert any(r.instance == "a,b a,c b,c" and r.s == "a,b"
                   for r in report.axiom3_violations)

    def test_partial_cycle_witness_directly(self):
        bad = adversarial_verifier("partial-cycle-as-solution")
        assert verify(bad, TRIANGLE, "a,b", "") == "yes"
        from nondec.solvers import check_solution
        assert not check_solution("HamCycle", TRIANGLE, "a,b")

    def test_accepts_negative_fails_axiom2(self):
        report = check_verifier_axioms(
            adversarial_verifier("accepts-negative"), "HamCycle",
            spaces.all_graphs(3))
        assert not report.passed
        assert report.axiom2_violations
        assert any(r.instance == ACCEPTS_NEGATIVE_INSTANCE and r.s == ""
                   for r in report.axiom2_violations)

    def test_rejects_everything_fails_axiom1(self):
        report = check_verifier_axioms(
            adversarial_verifier("rejects-everything"), "HamCycle",
            spaces.all_graphs(4))
        assert not report.passed
        assert len(report.axiom1_failures) == 11
        assert not report.axiom2_violations
        assert not report.axiom3_violations

    def test_unknown_kind(self):
        with pytest.raises(UnknownKind):
            adversarial_verifier("banana")


class TestHintIrrelevanceExhaustive:
    def test_verdict_constant_across_hint_space(self):
        # For hint-free verifiers the verdict is the same for every hint;
        # compare across an enumerated hint space.
        v = verifier_for("HamCycle")
        hints = list(spaces.all_strings("abc, ", 4))
        for s in ("a,b,c", "a,b", "c", ""):
            verdicts = {verify(v, TRIANGLE, s, h) for h in hints}
            assert len(verdicts) == 1
