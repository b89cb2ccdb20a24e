"""Pattern grammar, standard graph generators, the expansion operator,
and the two exact coloring quantities it interacts with.

A pattern is a small tree: leaves name standard graphs, `+` takes
vertex-disjoint unions, and `expandR(...)` lifts a graph to an
r-uniform hypergraph by giving every edge r-2 fresh vertices.  The
text syntax accepted by the CLI looks like::

    path:5
    star:2+star:2
    expand3(path:5+cycle:6)

Leaf parameters count edges for path/cycle/star/matching and vertices
for complete/edgeless.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Union as TUnion

from .errors import (
    BadParameters,
    BadUniformity,
    MalformedSpec,
    NotAGraph,
    TooLarge,
)
from .hypergraph import Hypergraph, disjoint_union

LEAF_KINDS = ("path", "cycle", "star", "complete", "matching", "edgeless")


@dataclass(frozen=True)
class Leaf:
    kind: str
    param: int


@dataclass(frozen=True)
class UnionSpec:
    parts: tuple["PatternSpec", ...]


@dataclass(frozen=True)
class ExpandSpec:
    r: int
    inner: "PatternSpec"


PatternSpec = TUnion[Leaf, UnionSpec, ExpandSpec]


def validate_spec(spec: PatternSpec) -> None:
    if isinstance(spec, Leaf):
        if spec.kind not in LEAF_KINDS:
            raise MalformedSpec(f"unknown pattern kind {spec.kind!r}")
        low = {"path": 1, "star": 1, "matching": 1, "cycle": 3, "complete": 1,
               "edgeless": 0}[spec.kind]
        if spec.param < low:
            raise MalformedSpec(f"{spec.kind} parameter must be >= {low}")
    elif isinstance(spec, UnionSpec):
        if len(spec.parts) < 2:
            raise MalformedSpec("union needs at least two parts")
        for p in spec.parts:
            validate_spec(p)
    elif isinstance(spec, ExpandSpec):
        if spec.r < 2:
            raise MalformedSpec("expansion uniformity must be >= 2")
        if _contains_expand(spec.inner):
            raise MalformedSpec("expand applies only to a 2-uniform subtree")
        validate_spec(spec.inner)
    else:
        raise MalformedSpec(f"not a pattern spec: {spec!r}")


def _contains_expand(spec: PatternSpec) -> bool:
    if isinstance(spec, ExpandSpec):
        return True
    if isinstance(spec, UnionSpec):
        return any(_contains_expand(p) for p in spec.parts)
    return False


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(expand\d+\(|[a-z]+:\d+|[()+])")


def parse_pattern(text: str) -> PatternSpec:
    """Parse the CLI pattern syntax into a PatternSpec."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise MalformedSpec(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    spec, rest = _parse_union(tokens)
    if rest:
        raise MalformedSpec(f"trailing tokens {rest!r} in {text!r}")
    validate_spec(spec)
    return spec


def _parse_union(tokens: list[str]) -> tuple[PatternSpec, list[str]]:
    part, tokens = _parse_term(tokens)
    parts = [part]
    while tokens and tokens[0] == "+":
        part, tokens = _parse_term(tokens[1:])
        parts.append(part)
    if len(parts) == 1:
        return parts[0], tokens
    return UnionSpec(tuple(parts)), tokens


def _parse_term(tokens: list[str]) -> tuple[PatternSpec, list[str]]:
    if not tokens:
        raise MalformedSpec("unexpected end of pattern")
    tok = tokens[0]
    if tok == "(":
        inner, rest = _parse_union(tokens[1:])
        if not rest or rest[0] != ")":
            raise MalformedSpec("unbalanced parentheses")
        return inner, rest[1:]
    if tok.startswith("expand"):
        r = int(tok[len("expand"):-1])
        inner, rest = _parse_union(tokens[1:])
        if not rest or rest[0] != ")":
            raise MalformedSpec("unbalanced parentheses in expand(...)")
        return ExpandSpec(r, inner), rest[1:]
    if ":" in tok:
        kind, num = tok.split(":")
        return Leaf(kind, int(num)), tokens[1:]
    raise MalformedSpec(f"unexpected token {tok!r}")


def format_pattern(spec: PatternSpec) -> str:
    if isinstance(spec, Leaf):
        return f"{spec.kind}:{spec.param}"
    if isinstance(spec, UnionSpec):
        return "+".join(
            f"({format_pattern(p)})" if isinstance(p, UnionSpec) else format_pattern(p)
            for p in spec.parts
        )
    return f"expand{spec.r}({format_pattern(spec.inner)})"


# -- realization -------------------------------------------------------------

def realize(spec: PatternSpec) -> Hypergraph:
    """Build the canonical labeled hypergraph a spec describes."""
    validate_spec(spec)
    return _realize(spec)


def _realize(spec: PatternSpec) -> Hypergraph:
    if isinstance(spec, Leaf):
        return _realize_leaf(spec)
    if isinstance(spec, UnionSpec):
        out = _realize(spec.parts[0])
        for part in spec.parts[1:]:
            out = disjoint_union(out, _realize(part))
        return out
    return expand(_realize(spec.inner), spec.r)


def _realize_leaf(leaf: Leaf) -> Hypergraph:
    k, p = leaf.kind, leaf.param
    if k == "path":
        return Hypergraph(2, p + 1, tuple((i, i + 1) for i in range(p)))
    if k == "star":
        return Hypergraph(2, p + 1, tuple((0, i) for i in range(1, p + 1)))
    if k == "cycle":
        return Hypergraph(2, p, tuple(tuple(sorted((i, (i + 1) % p))) for i in range(p)))
    if k == "complete":
        return Hypergraph(2, p, tuple(itertools.combinations(range(p), 2)))
    if k == "matching":
        return Hypergraph(2, 2 * p, tuple((2 * i, 2 * i + 1) for i in range(p)))
    if k == "edgeless":
        return Hypergraph(2, p, ())
    raise MalformedSpec(f"unknown pattern kind {k!r}")


def expand(graph: Hypergraph, r: int) -> Hypergraph:
    """r-uniform expansion: each graph edge gains r-2 fresh vertices.

    Original vertices keep their ids; fresh vertices are appended in
    edge order, so the output labeling is deterministic.
    """
    if graph.r != 2:
        raise NotAGraph(f"expansion starts from a 2-uniform graph, got r={graph.r}")
    if r < 2:
        raise BadUniformity(f"target uniformity must be >= 2, got {r}")
    if r == 2:
        return graph
    fresh = graph.n
    edges = []
    for e in graph.edges:
        extra = range(fresh, fresh + r - 2)
        edges.append(tuple(e) + tuple(extra))
        fresh += r - 2
    return Hypergraph(r, fresh, tuple(edges))


def ensure_hypergraph(pattern) -> Hypergraph:
    """Accept a Hypergraph, PatternSpec, or pattern text."""
    if isinstance(pattern, Hypergraph):
        return pattern
    if isinstance(pattern, str):
        return realize(parse_pattern(pattern))
    return realize(pattern)


# -- exact colorings ---------------------------------------------------------

def chromatic_number(graph: Hypergraph, max_vertices: int = 80,
                     node_budget: int = 10**8) -> int:
    """Exact chromatic number of a 2-uniform graph.

    Backtracking between a greedy-clique lower bound and a greedy-coloring
    upper bound; intended for small instances.
    """
    if graph.r != 2:
        raise NotAGraph(f"chromatic_number needs a 2-uniform graph, got r={graph.r}")
    if graph.n < 1:
        raise BadParameters("chromatic_number needs at least one vertex")
    return _chromatic_from_adj(list(graph.cooc), max_vertices, node_budget)


def strong_chromatic_number(h: Hypergraph, max_vertices: int = 80,
                            node_budget: int = 10**8) -> int:
    """Fewest colors such that no color repeats inside any edge.

    Computed by reduction: color the 2-graph whose edges are all pairs
    co-occurring in some hyperedge.
    """
    if h.n < 1:
        raise BadParameters("strong_chromatic_number needs at least one vertex")
    return _chromatic_from_adj(list(h.cooc), max_vertices, node_budget)


def _chromatic_from_adj(adj: list[int], max_vertices: int, node_budget: int) -> int:
    n = len(adj)
    if n > max_vertices:
        raise TooLarge(f"coloring solver capped at {max_vertices} vertices, got {n}")
    lb = len(_greedy_clique(adj))
    ub, _ = _greedy_coloring(adj)
    if lb == ub:
        return lb
    for k in range(lb, ub):
        if _colorable(adj, k, node_budget):
            return k
    return ub


def _greedy_clique(adj: list[int]) -> list[int]:
    n = len(adj)
    order = sorted(range(n), key=lambda v: adj[v].bit_count(), reverse=True)
    best: list[int] = []
    for start in order[: min(n, 8)]:
        clique = [start]
        cand = adj[start]
        while cand:
            v = max(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _greedy_coloring(adj: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    order = sorted(range(n), key=lambda v: adj[v].bit_count(), reverse=True)
    color = [-1] * n
    used = 0
    for v in order:
        taken = {color[u] for u in _bits(adj[v]) if color[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used, color


def _colorable(adj: list[int], k: int, node_budget: int) -> bool:
    """Exact k-colorability by saturation-guided backtracking."""
    n = len(adj)
    if k >= n:
        return True
    color = [-1] * n
    neighbor_colors = [0] * n  # bitset over colors seen in the neighborhood
    nodes = 0

    def pick() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if color[v] >= 0:
                continue
            key = (neighbor_colors[v].bit_count(), adj[v].bit_count())
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def assign(v: int, c: int) -> list[int]:
        color[v] = c
        touched = []
        bit = 1 << c
        for u in _bits(adj[v]):
            if color[u] < 0 and not neighbor_colors[u] & bit:
                neighbor_colors[u] |= bit
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        color[v] = -1
        bit = 1 << c
        for u in touched:
            neighbor_colors[u] &= ~bit

    def rec(depth: int, max_used: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        nodes += 1
        if nodes > node_budget:
            raise TooLarge(f"coloring budget of {node_budget} nodes exceeded")
        v = pick()
        limit = min(k, max_used + 1)
        for c in range(limit):
            if neighbor_colors[v] & (1 << c):
                continue
            touched = assign(v, c)
            if rec(depth + 1, max(max_used, c + 1)):
                return True
            undo(v, c, touched)
        return False

    return rec(0, 0)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
