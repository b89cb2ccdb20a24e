"""Immutable r-uniform hypergraphs with canonical edge storage.

Vertices are dense 0-based integers.  Edges are stored as strictly
increasing tuples, sorted lexicographically, so two structurally equal
hypergraphs compare equal and serialize identically.  Incidence and
co-occurrence data are arbitrary-precision integer bitsets, which puts
no fixed ceiling on the vertex count.

All operations are pure: a Hypergraph is never mutated after
construction, so values are safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadParameters,
    DuplicateEdge,
    EdgeWrongSize,
    HgParseError,
    TooLarge,
    UniformityMismatch,
    UniformityUnderflow,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices 0..n-1.

    The constructor canonicalizes and validates: every edge must have
    exactly ``r`` distinct in-range vertices and no edge may repeat.
    """

    r: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise BadParameters(f"uniformity must be >= 1, got {self.r}")
        if self.n < 0:
            raise BadParameters(f"vertex count must be >= 0, got {self.n}")
        canon = []
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != self.r or len(set(t)) != self.r:
                raise EdgeWrongSize(f"edge {e!r} is not {self.r} distinct vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise VertexOutOfRange(f"edge {e!r} not within [0, {self.n})")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a!r} supplied more than once")
        object.__setattr__(self, "edges", tuple(canon))

    # -- derived, cached -------------------------------------------------

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        """Per-vertex bitset over edge indices."""
        inc = [0] * self.n
        for j, e in enumerate(self.edges):
            bit = 1 << j
            for v in e:
                inc[v] |= bit
        return tuple(inc)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Per-edge bitset over vertices, for O(1) subset tests."""
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def cooc(self) -> tuple[int, ...]:
        """Per-vertex bitset of *other* vertices sharing some edge."""
        masks = [0] * self.n
        for e, em in zip(self.edges, self.edge_masks):
            for v in e:
                masks[v] |= em
        return tuple(m & ~(1 << v) for v, m in enumerate(masks))

    @cached_property
    def ext(self) -> dict[Edge, int]:
        """Completion table: (r-1)-subset -> bitset of vertices closing an edge."""
        table: dict[Edge, int] = {}
        for e in self.edges:
            for i in range(self.r):
                key = e[:i] + e[i + 1:]
                table[key] = table.get(key, 0) | (1 << e[i])
        return table

    @cached_property
    def swap_classes(self) -> tuple[int, ...]:
        """Vertex classes under transposition automorphisms.

        Two vertices share a class when exchanging them (fixing everything
        else) maps the edge set to itself; such vertices are
        interchangeable as embedding images.  The relation is transitive,
        so the classes are sound.  Skipped (all-singleton) for hosts too
        large to scan.
        """
        n = self.n
        if n * n * max(1, len(self.edges)) > 5_000_000:
            return tuple(range(n))
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        es = self.edge_set
        degs = [self.degree(v) for v in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                if degs[u] != degs[v] or find(u) == find(v):
                    continue
                touched = self.incidence[u] | self.incidence[v]
                ok = True
                while touched:
                    low = touched & -touched
                    touched ^= low
                    e = self.edges[low.bit_length() - 1]
                    swapped = tuple(sorted(
                        v if x == u else u if x == v else x for x in e))
                    if swapped not in es:
                        ok = False
                        break
                if ok:
                    parent[find(v)] = find(u)
        return tuple(find(v) for v in range(n))

    # -- elementary operations --------------------------------------------

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        self._check_vertex(v)
        return self.incidence[v].bit_count()

    def link(self, v: int) -> "Hypergraph":
        """The (r-1)-uniform link of v on the same vertex set.

        Edges are ``e \\ {v}`` for every edge e containing v; v itself
        becomes isolated.  The edge count equals ``degree(v)``.
        """
        self._check_vertex(v)
        if self.r == 1:
            raise UniformityUnderflow("cannot take the link of a 1-uniform hypergraph")
        new_edges = [tuple(u for u in e if u != v) for e in self.edges if v in e]
        return Hypergraph(self.r - 1, self.n, tuple(new_edges))

    def delete_vertices(self, vertices: Iterable[int]) -> "Hypergraph":
        """Remove the given vertices and all edges meeting them.

        Remaining vertices are relabeled contiguously, preserving order;
        ``deletion_map`` yields the old->new map used here.
        """
        drop = set(vertices)
        for v in drop:
            self._check_vertex(v)
        relabel = deletion_map(self.n, drop)
        new_edges = [
            tuple(relabel[v] for v in e)
            for e in self.edges
            if not drop.intersection(e)
        ]
        return Hypergraph(self.r, self.n - len(drop), tuple(new_edges))

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        """Subhypergraph induced by the given vertex set (relabeled).

        Equals ``delete_vertices`` of the complementary set.
        """
        keep = set(vertices)
        for v in keep:
            self._check_vertex(v)
        return self.delete_vertices(set(range(self.n)) - keep)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.n})")

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, m={len(self.edges)})"


def new_hypergraph(r: int, n: int, raw_edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validated, canonicalized construction from raw edge lists."""
    return Hypergraph(r, n, tuple(tuple(e) for e in raw_edges))


def empty_hypergraph(r: int, n: int) -> Hypergraph:
    return Hypergraph(r, n, ())


def complete_hypergraph(r: int, n: int) -> Hypergraph:
    """All r-subsets of an n-set."""
    return Hypergraph(r, n, tuple(itertools.combinations(range(n), r)))


def deletion_map(n: int, dropped: Iterable[int]) -> dict[int, int]:
    """Order-preserving relabeling of [0, n) after removing `dropped`."""
    drop = set(dropped)
    out: dict[int, int] = {}
    nxt = 0
    for v in range(n):
        if v not in drop:
            out[v] = nxt
            nxt += 1
    return out


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Vertex-disjoint union; h2's vertices are shifted by h1.n."""
    if h1.r != h2.r:
        raise UniformityMismatch(f"cannot union r={h1.r} with r={h2.r}")
    shift = h1.n
    shifted = [tuple(v + shift for v in e) for e in h2.edges]
    return Hypergraph(h1.r, h1.n + h2.n, h1.edges + tuple(shifted))


def relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (perm[old] = new)."""
    if sorted(perm) != list(range(h.n)):
        raise BadParameters("perm must be a permutation of the vertex set")
    return Hypergraph(h.r, h.n, tuple(tuple(perm[v] for v in e) for e in h.edges))


def canonical_form(h: Hypergraph, max_n: int = 10) -> tuple:
    """Isomorphism-invariant encoding by brute force over relabelings.

    Intended for witnesses and small test fixtures only.
    """
    if h.n > max_n:
        raise TooLarge(f"canonical_form is exponential; n={h.n} > {max_n}")
    best = None
    for perm in itertools.permutations(range(h.n)):
        enc = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in h.edges))
        if best is None or enc < best:
            best = enc
    return (h.r, h.n, best)


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingCertificate:
    """Witness of containment: an injective vertex map, optionally with an
    injective pattern-edge -> host-edge assignment (Berge case)."""

    vertex_map: dict[int, int]
    edge_map: dict[int, int] | None = None

    def as_json(self) -> dict:
        out: dict = {"vertex_map": {str(k): v for k, v in self.vertex_map.items()}}
        if self.edge_map is not None:
            out["edge_map"] = {str(k): v for k, v in self.edge_map.items()}
        return out


# -- .hg text format --------------------------------------------------------


def to_hg(h: Hypergraph) -> str:
    """Serialize in the `.hg` interchange format (canonical edge order)."""
    lines = [f"{h.r} {h.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hg(text: str) -> Hypergraph:
    """Parse the `.hg` format: header `r n`, one edge per line, `#` comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise HgParseError("no header line `r n` found")
    header = rows[0]
    if len(header) != 2:
        raise HgParseError(f"header must be `r n`, got {' '.join(header)!r}")
    try:
        r, n = int(header[0]), int(header[1])
        edges = [tuple(int(tok) for tok in row) for row in rows[1:]]
    except ValueError as exc:
        raise HgParseError(f"non-integer token: {exc}") from exc
    return Hypergraph(r, n, tuple(edges))


def write_hg(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_hg(h))


def read_hg(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hg(fh.read())
