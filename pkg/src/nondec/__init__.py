"""nondec: computational problems over ASCII strings, at desk scale.

A computational problem here is a total map from strings to finite sets
of strings, with {"no"} marking negative instances.  The package ships
brute-force oracles for factoring, Hamilton cycles, and satisfiability,
three-argument (instance, solution, hint) verifiers with an exhaustive
axiom checker, a nondeterministic guess-and-verify simulator, mapping
reductions with oracle-checked soundness, and search-to-decision
self-reductions with strict oracle-call budgets.
"""

from .encodings import (
    CnfFormula,
    DuplicateVertex,
    Graph,
    Malformed,
    MissingVariable,
    canonical_cycle,
    encode_assignment,
    encode_cnf,
    encode_graph,
    make_graph,
    parse_assignment,
    parse_cnf,
    parse_graph,
    parse_natural,
)
from .problems import (
    Classification,
    ComputationalProblem,
    MembershipPredicate,
    NotADecisionProblem,
    as_language,
    canonicalize_solution,
    classify_instance,
    decision_variant,
    from_language,
    get_problem,
    registered_names,
    solution_set,
)
from .solvers import (
    NO,
    YES,
    BudgetExceeded,
    Outcome,
    Output,
    Program,
    SolvesReport,
    StepBudget,
    StepCounter,
    Timeout,
    UnknownProblem,
    check_solution,
    enumerate_solutions,
    run_program,
    solves_on_space,
)
from .verifiers import (
    AxiomReport,
    SearchSpaceTooLarge,
    UnknownKind,
    Verifier,
    VerifierTimeout,
    adversarial_verifier,
    check_verifier_axioms,
    verifier_for,
    verify,
)
from .nondet import (
    ChoiceSpaceTooLarge,
    ComputationSummary,
    NProgram,
    ScalingReport,
    guess_and_verify,
    nondet_solves,
    run_nondet,
    scaling_report,
)
from .reductions import (
    DecisionOracle,
    GeneralReduction,
    HardnessJudgment,
    OracleInconsistent,
    Polyreduction,
    ReductionCheckFailed,
    ReductionReport,
    SourceNotCertified,
    apply_general_reduction,
    apply_polyreduction,
    check_general_reduction,
    check_polyreduction,
    compose_polyreductions,
    exact_oracle,
    factor_search_via_oracle,
    get_reduction,
    hamcycle_search_via_oracle,
    np_hard_via,
    sat_search_via_oracle,
)

__version__ = "0.1.0"
