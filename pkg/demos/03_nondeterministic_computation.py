#!/usr/bin/env python3
"""Nondeterminism as a tree of choice strings.

A nondeterministic program is a deterministic function of (input, choice
string).  Exploring all bounded choice strings realizes the computation
tree; the set of leaf outputs is what the program "can" produce.  The
guess-and-verify pattern makes the non-"no" leaves provably correct:
decode the choices into a candidate, run a verifier, emit the solution
only on acceptance.
"""

from nondec import guess_and_verify, nondet_solves, run_nondet, verifier_for
from nondec.spaces import all_graphs

prog = guess_and_verify("Factor", verifier_for("Factor"))
for w in ("35", "29"):
    summary = run_nondet(prog, w)
    print(f"Factor guess-and-verify on {w!r}: "
          f"{summary.paths_explored} paths, leaves {sorted(summary.leaf_outputs)}")
print()

prog = guess_and_verify("Sat", verifier_for("Sat"))
summary = run_nondet(prog, "x,!y y,z")
print(f"Sat guess-and-verify on 'x,!y y,z': leaves {sorted(summary.leaf_outputs)}")
print("every non-'no' leaf is a satisfying assignment, and all of them appear.")
print()

print("the leaf set does not depend on the exploration schedule:")
for order in ("lex", "reverse", "parallel"):
    summary = run_nondet(prog, "x,!y y,z", order=order)
    print(f"  {order:9s} -> {sorted(summary.leaf_outputs)}")
print()

prog = guess_and_verify("HamCycleD", verifier_for("HamCycleD"))
summary = run_nondet(prog, "a,b b,c c,a")
print(f"a decision problem collapses to the classical picture: "
      f"leaves {sorted(summary.leaf_outputs)}")
print()

print("checking the solving contract over every graph on <= 4 vertices:")
prog = guess_and_verify("HamCycle", verifier_for("HamCycle"))
report = nondet_solves(prog, "HamCycle", all_graphs(4))
print(f"  {report.instances_checked} instances, "
      f"{len(report.violations)} violations -> "
      f"{'solves on this space' if report.ok else 'FAILS'}")
