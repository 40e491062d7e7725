"""Desk-scale instance spaces: every graph, formula, or number up to a bound.

All of the certification machinery in this package quantifies over finite
spaces and these generators define them.  Everything is emitted in a
deterministic order as canonical instance encodings.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .encodings import CnfFormula, encode_cnf, encode_graph, make_graph

GRAPH_LETTERS = "abcdefghijkl"
CNF_LETTERS = ("x", "y", "z")


def all_graphs(max_vertices: int, directed: bool = False) -> Iterator[str]:
    """Every labeled simple graph (or digraph) on vertex-set prefixes of
    a, b, c, ...: for each n up to the bound, all 2^C(n,2) edge subsets
    (2^(n(n-1)) arc subsets when directed)."""
    for n in range(max_vertices + 1):
        names = list(GRAPH_LETTERS[:n])
        if directed:
            slots = [(u, v) for u in names for v in names if u != v]
        else:
            slots = list(itertools.combinations(names, 2))
        for k in range(len(slots) + 1):
            for chosen in itertools.combinations(slots, k):
                yield encode_graph(make_graph(names, chosen, directed))


def all_clauses(variables: tuple[str, ...] = CNF_LETTERS) -> list[str]:
    """All nonempty clauses over the variables, as canonical clause tokens."""
    literals = sorted(
        name if positive else "!" + name
        for name in variables
        for positive in (True, False)
    )
    tokens = []
    for k in range(1, len(literals) + 1):
        for chosen in itertools.combinations(literals, k):
            tokens.append(",".join(sorted(chosen)))
    return sorted(tokens)


def all_cnfs(max_clauses: int = 3,
             variables: tuple[str, ...] = CNF_LETTERS) -> Iterator[str]:
    """Every CNF with up to max_clauses distinct clauses over the variables,
    one canonical encoding per clause set (clause tokens sorted)."""
    clause_tokens = all_clauses(variables)
    for k in range(max_clauses + 1):
        for chosen in itertools.combinations(clause_tokens, k):
            yield " ".join(chosen)


def naturals(lo: int, hi: int) -> Iterator[str]:
    """Decimal encodings of lo..hi inclusive."""
    for m in range(lo, hi + 1):
        yield str(m)


def factor_range_triples(max_m: int) -> Iterator[str]:
    """All well-formed "m lo hi" instances with m, lo, hi <= max_m, lo <= hi."""
    for m in range(1, max_m + 1):
        for lo in range(1, max_m + 1):
            for hi in range(lo, max_m + 1):
                yield f"{m} {lo} {hi}"


def all_strings(alphabet: str, max_len: int) -> Iterator[str]:
    """Shortlex enumeration of every string over the alphabet up to max_len."""
    symbols = sorted(set(alphabet))
    for length in range(max_len + 1):
        for chars in itertools.product(symbols, repeat=length):
            yield "".join(chars)


def random_cnfs(count: int, max_variables: int = 10, max_clauses: int = 8,
                max_clause_size: int = 3, seed: int = 0) -> Iterator[str]:
    """Deterministic pseudo-random CNF instances for soak testing."""
    rng = random.Random(seed)
    pool = [chr(ord("a") + i) for i in range(max_variables)]
    for _ in range(count):
        names = rng.sample(pool, rng.randint(1, max_variables))
        clauses = []
        for _ in range(rng.randint(1, max_clauses)):
            size = rng.randint(1, min(max_clause_size, len(names)))
            chosen = rng.sample(names, size)
            clause = frozenset((name, rng.random() < 0.5) for name in chosen)
            clauses.append(clause)
        variables = tuple(sorted({n for c in clauses for n, _ in c}))
        yield encode_cnf(CnfFormula(variables, tuple(clauses)))
