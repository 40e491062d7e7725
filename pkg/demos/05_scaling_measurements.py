#!/usr/bin/env python3
"""Empirical complexity: step counts against instance size.

Programs here count their own elementary steps, so growth rates are
deterministic and machine-independent.  Fitting log2(steps) against
log2(size) and against size decides which story - polynomial or
exponential - the data tells.
"""

from nondec import scaling_report
from nondec.encodings import encode_graph, make_graph
from nondec.solvers import cycle_walk_program, satd_bruteforce_program
from nondec.spaces import GRAPH_LETTERS


def unsat_family(v):
    """v unit clauses plus one contradiction: forces the full 2^v scan."""
    names = [f"v{i:02d}" for i in range(1, v + 1)]
    return " ".join(names + ["!" + names[0]])


def ring_family(n):
    names = [GRAPH_LETTERS[i] for i in range(n)]
    return encode_graph(make_graph(
        names, [(names[i], names[(i + 1) % n]) for i in range(n)]))


print("brute-force SatD over 4..10 variables (worst case: unsatisfiable):")
report = scaling_report(satd_bruteforce_program(), unsat_family, range(4, 11))
print(report.to_csv())
print(f"=> steps roughly double per added variable "
      f"(rate {report.loglinear_rate:.2f} bits/variable)")
print()

print("Hamilton-cycle walk verification over rings of 4..12 vertices:")
report = scaling_report(cycle_walk_program(), ring_family, range(4, 13))
print(report.to_csv())
print(f"=> a straight line on the log-log plot with slope "
      f"{report.loglog_slope:.2f}: linear-time work")
