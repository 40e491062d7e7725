"""Canonical ASCII encodings for graphs, CNF formulas, integers and cycles.

Every object this library manipulates is ultimately a printable-ASCII
string, so that a "computational problem" can literally be a map from
strings to sets of strings.  This module fixes the grammars, bit-exact:

* graph:       edge and vertex tokens separated by single spaces, an edge
               token is ``u,v`` and an isolated vertex is a bare name,
               e.g. ``a,b b,c c,a`` is a triangle.  Undirected edges are
               stored and emitted with endpoints in lexicographic order.
* CNF formula: clauses separated by single spaces, literals inside a
               clause separated by commas, ``!`` negates, e.g.
               ``x,!y y,z`` means (x OR NOT y) AND (y OR z).
* natural:     decimal with no leading zeros (``0`` itself allowed).
* assignment:  ``v1=b1 v2=b2 ...`` with variables in lexicographic order
               and bits in {0,1}.
* cycle:       comma-separated vertex names; the canonical form starts at
               the lexicographically smallest vertex and, for undirected
               cycles, continues toward its smaller neighbor, so every
               mathematical cycle has exactly one encoding.

Vertex and variable names are nonempty strings over [a-z0-9]; this keeps
space and comma free to act as structural delimiters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

NAME_RE = re.compile(r"[a-z0-9]+\Z")
DECIMAL_RE = re.compile(r"(?:0|[1-9][0-9]*)\Z")


class Malformed(ValueError):
    """A string does not match the grammar it was parsed against.

    Carries the byte offset of the offending region and a short reason.
    Callers that implement total problems treat Malformed input as a
    negative instance rather than an error.
    """

    def __init__(self, position: int, reason: str):
        super().__init__(f"malformed at byte {position}: {reason}")
        self.position = position
        self.reason = reason


class DuplicateVertex(ValueError):
    """A cycle or path mentions the same vertex twice."""


class MissingVariable(ValueError):
    """An assignment does not cover every requested variable."""


def is_printable_ascii(text: str) -> bool:
    """True when every character is printable ASCII (codes 32-126)."""
    return all(32 <= ord(ch) <= 126 for ch in text)


def _check_printable(text: str) -> None:
    for i, ch in enumerate(text):
        if not 32 <= ord(ch) <= 126:
            raise Malformed(i, f"non-printable byte {ord(ch)}")


def _check_spacing(text: str) -> None:
    if text.startswith(" "):
        raise Malformed(0, "leading space")
    if text.endswith(" "):
        raise Malformed(len(text) - 1, "trailing space")
    double = text.find("  ")
    if double >= 0:
        raise Malformed(double, "double space")


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """A simple graph or digraph with sorted vertex storage.

    ``edges`` holds pairs of vertex names; undirected pairs are normalized
    with endpoints in lexicographic order, directed pairs are (tail, head).
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    directed: bool

    def __post_init__(self):
        seen = set(self.vertices)
        if len(seen) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        if tuple(sorted(self.vertices)) != self.vertices:
            raise ValueError("vertices must be stored sorted")
        for name in self.vertices:
            if not NAME_RE.match(name):
                raise ValueError(f"bad vertex name {name!r}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in seen or v not in seen:
                raise ValueError(f"edge ({u},{v}) leaves the vertex set")
            if not self.directed and u > v:
                raise ValueError(f"undirected edge ({u},{v}) not normalized")

    @property
    def adjacency(self) -> dict[str, frozenset[str]]:
        """Neighbor map; for digraphs this maps tail -> heads."""
        cached = self.__dict__.get("_adjacency")
        if cached is None:
            nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
            for u, v in self.edges:
                nbrs[u].add(v)
                if not self.directed:
                    nbrs[v].add(u)
            cached = {v: frozenset(ns) for v, ns in nbrs.items()}
            self.__dict__["_adjacency"] = cached
        return cached

    def has_edge(self, u: str, v: str) -> bool:
        if self.directed:
            return (u, v) in self.edges
        return (min(u, v), max(u, v)) in self.edges

    def without_edge(self, edge: tuple[str, str]) -> "Graph":
        """Same vertices, one edge removed (endpoints may become isolated)."""
        return Graph(self.vertices, self.edges - {edge}, self.directed)


def make_graph(vertices: Iterable[str], edges: Iterable[tuple[str, str]],
               directed: bool = False) -> Graph:
    """Build a Graph, normalizing undirected edge orientation."""
    if directed:
        normalized = frozenset(edges)
    else:
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
    return Graph(tuple(sorted(set(vertices))), normalized, directed)


def parse_graph(text: str, directed: bool = False) -> Graph:
    """Parse the space-separated edge-list grammar.

    Raises Malformed on anything outside the grammar: bad names,
    self-loops, duplicate edges, stray spacing.  The empty string is the
    empty graph.
    """
    _check_printable(text)
    if text == "":
        return Graph((), frozenset(), directed)
    _check_spacing(text)
    vertices: set[str] = set()
    edges: set[tuple[str, str]] = set()
    isolated_tokens: set[str] = set()
    pos = 0
    for token in text.split(" "):
        parts = token.split(",")
        if len(parts) == 1:
            name = parts[0]
            if not NAME_RE.match(name):
                raise Malformed(pos, f"bad vertex name {name!r}")
            if name in isolated_tokens:
                raise Malformed(pos, f"duplicate vertex token {name!r}")
            isolated_tokens.add(name)
            vertices.add(name)
        elif len(parts) == 2:
            u, v = parts
            if not NAME_RE.match(u):
                raise Malformed(pos, f"bad vertex name {u!r}")
            if not NAME_RE.match(v):
                raise Malformed(pos + len(u) + 1, f"bad vertex name {v!r}")
            if u == v:
                raise Malformed(pos, f"self-loop {token!r}")
            pair = (u, v) if directed else (min(u, v), max(u, v))
            if pair in edges:
                raise Malformed(pos, f"duplicate edge {token!r}")
            edges.add(pair)
            vertices.add(u)
            vertices.add(v)
        else:
            raise Malformed(pos, f"token {token!r} is neither a vertex nor an edge")
        pos += len(token) + 1
    return Graph(tuple(sorted(vertices)), frozenset(edges), directed)


def encode_graph(g: Graph) -> str:
    """Canonical text: sorted edge tokens, then sorted isolated vertices."""
    tokens = [f"{u},{v}" for u, v in sorted(g.edges)]
    covered = {u for e in g.edges for u in e}
    tokens.extend(v for v in g.vertices if v not in covered)
    return " ".join(tokens)


# ---------------------------------------------------------------------------
# CNF formulas

Literal = tuple[str, bool]  # (variable name, polarity); True means positive


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula: a sequence of clauses, each a set of literals."""

    variables: tuple[str, ...]
    clauses: tuple[frozenset[Literal], ...]

    def __post_init__(self):
        occurring: set[str] = set()
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for name, _ in clause:
                if not NAME_RE.match(name):
                    raise ValueError(f"bad variable name {name!r}")
                occurring.add(name)
        if tuple(sorted(occurring)) != self.variables:
            raise ValueError("variables must equal the sorted occurring set")


def parse_cnf(text: str) -> CnfFormula:
    """Parse the clause grammar; duplicates inside a clause collapse."""
    _check_printable(text)
    if text == "":
        return CnfFormula((), ())
    _check_spacing(text)
    clauses: list[frozenset[Literal]] = []
    pos = 0
    for token in text.split(" "):
        literals: set[Literal] = set()
        lit_pos = pos
        for lit in token.split(","):
            positive = not lit.startswith("!")
            name = lit if positive else lit[1:]
            if not NAME_RE.match(name):
                raise Malformed(lit_pos, f"bad literal {lit!r}")
            literals.add((name, positive))
            lit_pos += len(lit) + 1
        clauses.append(frozenset(literals))
        pos += len(token) + 1
    variables = tuple(sorted({name for clause in clauses for name, _ in clause}))
    return CnfFormula(variables, tuple(clauses))


def literal_text(lit: Literal) -> str:
    name, positive = lit
    return name if positive else "!" + name


def encode_cnf(formula: CnfFormula) -> str:
    """Clause order preserved; literals inside a clause sorted by text."""
    return " ".join(
        ",".join(sorted(literal_text(lit) for lit in clause))
        for clause in formula.clauses
    )


def evaluate_cnf(formula: CnfFormula, assignment: Mapping[str, bool]) -> bool:
    return all(
        any(assignment[name] == positive for name, positive in clause)
        for clause in formula.clauses
    )


# ---------------------------------------------------------------------------
# naturals, assignments, cycles


def parse_natural(text: str) -> int | None:
    """Canonical decimal only: no signs, no leading zeros.  None if not."""
    if not DECIMAL_RE.match(text):
        return None
    return int(text)


def encode_natural(value: int) -> str:
    if value < 0:
        raise ValueError("naturals are nonnegative")
    return str(value)


def encode_assignment(assignment: Mapping[str, bool], variables: Iterable[str]) -> str:
    """``v=b`` tokens for every requested variable, lexicographic order."""
    tokens = []
    for name in sorted(set(variables)):
        if name not in assignment:
            raise MissingVariable(name)
        tokens.append(f"{name}={int(bool(assignment[name]))}")
    return " ".join(tokens)


def parse_assignment(text: str) -> dict[str, bool] | None:
    """Strict inverse of encode_assignment; None unless canonical."""
    if text == "":
        return {}
    if text.startswith(" ") or text.endswith(" ") or "  " in text:
        return None
    result: dict[str, bool] = {}
    previous = ""
    for token in text.split(" "):
        name, sep, bit = token.partition("=")
        if not sep or bit not in ("0", "1") or not NAME_RE.match(name):
            return None
        if name <= previous:  # enforces sorted order and no duplicates
            return None
        result[name] = bit == "1"
        previous = name
    return result


def parse_vertex_sequence(text: str) -> tuple[str, ...] | None:
    """Comma-separated distinct vertex names, or None.  Empty text is ()."""
    if text == "":
        return ()
    names = text.split(",")
    seen = set()
    for name in names:
        if not NAME_RE.match(name) or name in seen:
            return None
        seen.add(name)
    return tuple(names)


def canonical_cycle(seq: Iterable[str], directed: bool) -> str:
    """One encoding per cycle: rotate (and maybe reflect) to canonical form.

    The smallest vertex comes first; in the undirected case the traversal
    continues toward the smaller of its two cycle neighbors, which folds
    the two traversal directions together.
    """
    names = tuple(seq)
    if len(names) < 2:
        raise ValueError("a cycle needs at least two vertices")
    if len(set(names)) != len(names):
        raise DuplicateVertex(f"repeated vertex in {names!r}")
    n = len(names)
    start = names.index(min(names))
    rotated = names[start:] + names[:start]
    if not directed:
        # rotated[1] and rotated[-1] are the two neighbors of the minimum.
        if rotated[-1] < rotated[1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return ",".join(rotated)
