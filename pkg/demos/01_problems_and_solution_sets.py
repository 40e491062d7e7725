#!/usr/bin/env python3
"""Computational problems as maps from strings to solution sets.

Every problem in this package is total: hand it any ASCII string and it
answers with a finite set of strings.  The singleton {"no"} marks a
negative instance; anything else belongs to a positive instance.
"""

from nondec import (
    as_language,
    classify_instance,
    decision_variant,
    from_language,
    get_problem,
    registered_names,
    solution_set,
)

print("registered problems:", ", ".join(registered_names()))
print()

factor = get_problem("Factor")
print("Factor asks for a factor other than 1 and the number itself:")
for w in ("35", "29", "12", "banana"):
    verdict = classify_instance(factor, w)
    print(f"  Factor({w!r}) = {sorted(solution_set(factor, w))}  [{verdict.value}]")
print("note: the unparseable string is simply a negative instance.")
print()

hamcycle = get_problem("HamCycle")
triangle = "a,b b,c c,a"
print("HamCycle asks for a Hamilton cycle, one canonical spelling per cycle:")
print(f"  HamCycle({triangle!r}) = {sorted(solution_set(hamcycle, triangle))}")
k4 = "a,b a,c a,d b,c b,d c,d"
print(f"  HamCycle({k4!r}) = {sorted(solution_set(hamcycle, k4))}")
print()

print("decision variants forget the solutions and keep the verdict:")
factord = decision_variant(factor)
print(f"  {factord.name}('35') = {sorted(solution_set(factord, '35'))}")
print(f"  {factord.name}('29') = {sorted(solution_set(factord, '29'))}")
print("a decision problem always has a one-element solution set, while")
print(f"  Factor('12') has {len(solution_set(factor, '12'))} solutions.")
print()

print("decision problems and languages are two views of one thing:")
language = as_language(factord)
print(f"  '35' in L? {language.contains('35')};  '29' in L? {language.contains('29')}")
rebuilt = from_language(language)
agree = all(
    classify_instance(rebuilt, w) is classify_instance(factord, w)
    for w in map(str, range(100)))
print(f"  rebuilding the decision problem from the language agrees on 0..99: {agree}")
