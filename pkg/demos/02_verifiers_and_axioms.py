#!/usr/bin/env python3
"""Verifiers take (instance, solution, hint) and must obey three axioms.

1. Every positive instance is verifiable with some correct solution and
   some hint.
2. Negative instances are never verifiable.
3. Incorrect proposed solutions are never verifiable.

The hint is auxiliary: most verifiers ignore it, but HamCycleEdge shows
why it exists - an edge alone cannot be checked quickly, the rest of the
cycle can.
"""

from nondec import adversarial_verifier, check_verifier_axioms, verifier_for
from nondec.spaces import all_graphs

triangle = "a,b b,c c,a"
v = verifier_for("HamCycle")
print("the HamCycle verifier ignores hints; the solution speaks for itself:")
print(f"  V({triangle!r}, 'a,b,c', '') = {v.check(triangle, 'a,b,c')}")
print(f"  V({triangle!r}, 'a,c', '')   = {v.check(triangle, 'a,c')}")
print(f"  V({triangle!r}, 'a,c,b', '') = {v.check(triangle, 'a,c,b')}"
      "   <- only the canonical spelling is the solution")
print()

five_cycle = "a,b b,p p,q q,r r,a"
ve = verifier_for("HamCycleEdge")
print("HamCycleEdge: the solution is one edge, the hint completes the cycle:")
print(f"  V({five_cycle!r}, 'a,b', 'p,q,r') = {ve.check(five_cycle, 'a,b', 'p,q,r')}")
print(f"  V({five_cycle!r}, 'a,b', '')      = {ve.check(five_cycle, 'a,b', '')}")
print()

print("certifying the axioms exhaustively over every graph on <= 4 vertices:")
report = check_verifier_axioms(v, "HamCycle", all_graphs(4))
print(report.summary())
print()

print("a deliberately loose verifier that accepts partial cycles:")
bad = adversarial_verifier("partial-cycle-as-solution")
print(f"  bad({triangle!r}, 'a,b', '') = {bad.check(triangle, 'a,b')}"
      "   <- 'a,b' is not a Hamilton cycle!")
bad_report = check_verifier_axioms(bad, "HamCycle", all_graphs(4))
print(bad_report.summary(limit=3))
