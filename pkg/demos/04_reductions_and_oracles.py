#!/usr/bin/env python3
"""Reductions in both directions.

Mapping reductions carry instances of a decision problem to instances of
a general problem, preserving positivity; the general form adds a map
carrying solutions back.  Self-reductions go the other way: they solve a
search problem by interrogating a yes/no oracle within a strict call
budget, which is why "only the decision version is tractable" is a
weaker excuse than it sounds.
"""

from nondec import (
    apply_polyreduction,
    check_general_reduction,
    check_polyreduction,
    exact_oracle,
    factor_search_via_oracle,
    get_reduction,
    hamcycle_search_via_oracle,
    np_hard_via,
    sat_search_via_oracle,
)
from nondec.encodings import parse_cnf, parse_graph
from nondec.spaces import all_graphs

directed_triangle = "a,b b,c c,a"
gadget = get_reduction("DirectedHamCycleD->UndirectedHamCycleD")
image = apply_polyreduction(gadget, directed_triangle)
print("the directed-to-undirected gadget splits each vertex in three:")
print(f"  r({directed_triangle!r}) =\n    {image}")
report = check_polyreduction(gadget, all_graphs(4, directed=True))
print(f"  positivity preserved on all {report.instances_checked} digraphs "
      f"<= 4 vertices: {report.ok}")
print()

general = get_reduction("DirectedHamCycle->HamCycle")
report = check_general_reduction(general, all_graphs(3, directed=True))
print(f"the general form also maps every solution back: checked on "
      f"{report.instances_checked} digraphs, ok={report.ok}")
print()

judgment = np_hard_via(get_reduction("HamCycleD->HamCycle"), "HamCycleD")
print(judgment.statement)
print()

print("factoring with a range oracle (binary search):")
oracle = exact_oracle("FactorInRangeD")
answer = factor_search_via_oracle(35, oracle)
print(f"  factor(35) = {answer} in {oracle.call_count} oracle calls")
oracle = exact_oracle("FactorInRangeD")
answer = factor_search_via_oracle(29, oracle)
print(f"  factor(29) = {answer} in {oracle.call_count} oracle call")
print()

print("finding a Hamilton cycle by greedy edge deletion:")
k4 = parse_graph("a,b a,c a,d b,c b,d c,d")
oracle = exact_oracle("HamCycleD")
answer = hamcycle_search_via_oracle(k4, oracle)
print(f"  K4 -> {answer} in {oracle.call_count} oracle calls "
      f"(budget: |E|+1 = {len(k4.edges) + 1})")
print()

print("finding a satisfying assignment by fixing variables:")
formula = parse_cnf("x,!y y,z")
oracle = exact_oracle("SatD")
answer = sat_search_via_oracle(formula, oracle)
print(f"  'x,!y y,z' -> {answer!r} in {oracle.call_count} oracle calls "
      f"(budget: |vars|+1 = {len(formula.variables) + 1})")
