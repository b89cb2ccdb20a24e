"""Generators for the extremal constructions used as lower bounds.

Labeling conventions (fixed so tests can address special vertices):

* core / distinguished sets always occupy the lowest vertex ids;
* balanced partitions put larger parts first, each part a contiguous
  id range.

Every generator has a closed-form edge count, exposed via
``edge_formula`` and checked against the generated object in tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .errors import BadParameters
from .hypergraph import Hypergraph

FAMILIES = (
    "turan",
    "star_like",
    "star_turan",
    "frankl",
    "two_in_A",
    "complete_bipartite_r",
    "path_cycle_lower",
)


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction plus its numeric parameters."""

    family: str
    params: dict = field(default_factory=dict)


def esym(sizes: list[int], k: int) -> int:
    """Elementary symmetric polynomial e_k of the given sizes."""
    if k < 0:
        return 0
    coeff = [1] + [0] * k
    for s in sizes:
        for j in range(min(k, len(coeff) - 1), 0, -1):
            coeff[j] += s * coeff[j - 1]
    return coeff[k]


def turan_parts(n: int, ell: int) -> list[range]:
    """Balanced partition of [0, n) into ell parts, larger parts first."""
    q, rem = divmod(n, ell)
    parts = []
    start = 0
    for i in range(ell):
        size = q + 1 if i < rem else q
        parts.append(range(start, start + size))
        start += size
    return parts


def turan_hypergraph(n: int, ell: int, r: int) -> Hypergraph:
    """Complete balanced ell-partite r-graph: r-sets with at most one
    vertex per part."""
    if not (ell >= r >= 2 and n >= ell):
        raise BadParameters(f"need ell >= r >= 2 and n >= ell, got n={n}, ell={ell}, r={r}")
    part_of = [0] * n
    for i, part in enumerate(turan_parts(n, ell)):
        for v in part:
            part_of[v] = i
    edges = [
        e for e in itertools.combinations(range(n), r)
        if len({part_of[v] for v in e}) == r
    ]
    return Hypergraph(r, n, tuple(edges))


def t_value(n: int, ell: int, r: int) -> int:
    """Edge count of the balanced ell-partite r-graph."""
    if not (ell >= r >= 2 and n >= ell):
        raise BadParameters(f"need ell >= r >= 2 and n >= ell, got n={n}, ell={ell}, r={r}")
    return esym([len(p) for p in turan_parts(n, ell)], r)


def star_like(n: int, t: int, r: int) -> Hypergraph:
    """All r-sets meeting the core {0..t-1}."""
    if not (n >= r >= 1 and 1 <= t <= n):
        raise BadParameters(f"need n >= r and 1 <= t <= n, got n={n}, t={t}, r={r}")
    edges = [
        e for e in itertools.combinations(range(n), r) if e[0] < t
    ]
    return Hypergraph(r, n, tuple(edges))


def add_universal_core(inner: Hypergraph, t: int) -> Hypergraph:
    """Prepend t core vertices and add every r-set meeting the core.

    The inner hypergraph is shifted to ids t..t+inner.n-1.
    """
    if t < 0:
        raise BadParameters("core size must be >= 0")
    n = inner.n + t
    r = inner.r
    edges = [tuple(v + t for v in e) for e in inner.edges]
    edges.extend(e for e in itertools.combinations(range(n), r) if e[0] < t)
    return Hypergraph(r, n, tuple(edges))


def star_turan(n: int, t: int, ell: int, r: int) -> Hypergraph:
    """A t-vertex core meeting every edge, layered over a balanced
    ell-partite r-graph on the remaining n-t vertices.

    t = 0 degenerates to the plain balanced construction.
    """
    if t < 0 or n - t < ell or ell < r:
        raise BadParameters(f"need t >= 0, ell >= r, n-t >= ell; got n={n}, t={t}, ell={ell}, r={r}")
    return add_universal_core(turan_hypergraph(n - t, ell, r), t)


def frankl_family(n: int, k: int, a: int, r: int) -> Hypergraph:
    """All r-sets meeting {0..a*k+a-2} in at least a vertices."""
    if not (n >= r >= a >= 1 and k >= 1):
        raise BadParameters(f"need n >= r >= a >= 1 and k >= 1, got n={n}, k={k}, a={a}, r={r}")
    m = a * k + a - 1
    if m > n:
        raise BadParameters(f"fixed set size {m} exceeds n={n}")
    edges = [
        e for e in itertools.combinations(range(n), r)
        if sum(1 for v in e if v < m) >= a
    ]
    return Hypergraph(r, n, tuple(edges))


def two_in_A(n: int, a: int, r: int) -> Hypergraph:
    """All r-sets with at least two vertices in A = {0..a-1}."""
    if not (n >= r >= 3 and 2 <= a <= n):
        raise BadParameters(f"need n >= r >= 3 and 2 <= a <= n, got n={n}, a={a}, r={r}")
    edges = [
        e for e in itertools.combinations(range(n), r)
        if sum(1 for v in e if v < a) >= 2
    ]
    return Hypergraph(r, n, tuple(edges))


def complete_bipartite_r(s: int, t: int, r: int) -> Hypergraph:
    """t blocks of r-1 vertices, then s singletons; edges are one block
    plus one singleton (s*t edges)."""
    if not (s >= 1 and t >= 1 and r >= 2):
        raise BadParameters(f"need s, t >= 1 and r >= 2, got s={s}, t={t}, r={r}")
    blocks = [tuple(range(i * (r - 1), (i + 1) * (r - 1))) for i in range(t)]
    y0 = t * (r - 1)
    edges = [b + (y0 + j,) for b in blocks for j in range(s)]
    return Hypergraph(r, t * (r - 1) + s, tuple(edges))


def path_cycle_lower(n: int, r: int, ells: list[int]) -> Hypergraph:
    """Lower-bound construction for unions of path/cycle expansions.

    Core U = {0 .. t-1} with t = sum(floor((l+1)/2)) - 1; edges are all
    r-sets meeting U, plus, when every l is even, all r-sets disjoint
    from U containing both of the fixed vertices t and t+1.
    """
    if r < 3 or not ells or any(l < 3 for l in ells):
        raise BadParameters(f"need r >= 3 and every length >= 3, got r={r}, ells={ells}")
    t = sum((l + 1) // 2 for l in ells) - 1
    if n < t + r:
        raise BadParameters(f"need n >= {t + r} to host the construction, got n={n}")
    edges = [e for e in itertools.combinations(range(n), r) if e[0] < t]
    if all(l % 2 == 0 for l in ells):
        edges.extend(
            (t, t + 1) + rest
            for rest in itertools.combinations(range(t + 2, n), r - 2)
        )
    return Hypergraph(r, n, tuple(edges))


# -- closed-form edge counts -------------------------------------------------

def edge_formula(spec: ConstructionSpec) -> int:
    """Closed-form edge count for a construction spec."""
    f, p = spec.family, spec.params
    if f == "turan":
        return t_value(p["n"], p["ell"], p["r"])
    if f == "star_like":
        return comb(p["n"], p["r"]) - comb(p["n"] - p["t"], p["r"])
    if f == "star_turan":
        n, t, ell, r = p["n"], p["t"], p["ell"], p["r"]
        return comb(n, r) - comb(n - t, r) + t_value(n - t, ell, r)
    if f == "frankl":
        n, k, a, r = p["n"], p["k"], p["a"], p["r"]
        m = a * k + a - 1
        return sum(comb(m, j) * comb(n - m, r - j) for j in range(a, r + 1))
    if f == "two_in_A":
        n, a, r = p["n"], p["a"], p["r"]
        return sum(comb(a, j) * comb(n - a, r - j) for j in range(2, r + 1))
    if f == "complete_bipartite_r":
        return p["s"] * p["t"]
    if f == "path_cycle_lower":
        n, r, ells = p["n"], p["r"], p["ells"]
        t = sum((l + 1) // 2 for l in ells) - 1
        c = comb(n - t - 2, r - 2) if all(l % 2 == 0 for l in ells) else 0
        return comb(n, r) - comb(n - t, r) + c
    raise BadParameters(f"unknown family {f!r}")


def build_construction(spec: ConstructionSpec) -> tuple[Hypergraph, dict]:
    """Build a construction and its labeling metadata (JSON-friendly)."""
    f, p = spec.family, spec.params
    if f == "turan":
        h = turan_hypergraph(p["n"], p["ell"], p["r"])
        meta = {"parts": [[v for v in part] for part in turan_parts(p["n"], p["ell"])]}
    elif f == "star_like":
        h = star_like(p["n"], p["t"], p["r"])
        meta = {"core": list(range(p["t"]))}
    elif f == "star_turan":
        h = star_turan(p["n"], p["t"], p["ell"], p["r"])
        parts = turan_parts(p["n"] - p["t"], p["ell"])
        meta = {
            "core": list(range(p["t"])),
            "parts": [[v + p["t"] for v in part] for part in parts],
        }
    elif f == "frankl":
        h = frankl_family(p["n"], p["k"], p["a"], p["r"])
        meta = {"fixed_set": list(range(p["a"] * p["k"] + p["a"] - 1))}
    elif f == "two_in_A":
        h = two_in_A(p["n"], p["a"], p["r"])
        meta = {"A": list(range(p["a"]))}
    elif f == "complete_bipartite_r":
        h = complete_bipartite_r(p["s"], p["t"], p["r"])
        r, t = p["r"], p["t"]
        meta = {
            "blocks": [list(range(i * (r - 1), (i + 1) * (r - 1))) for i in range(t)],
            "singletons": list(range(t * (r - 1), t * (r - 1) + p["s"])),
        }
    elif f == "path_cycle_lower":
        h = path_cycle_lower(p["n"], p["r"], p["ells"])
        t = sum((l + 1) // 2 for l in p["ells"]) - 1
        meta = {"core": list(range(t))}
        if all(l % 2 == 0 for l in p["ells"]):
            meta["fixed_pair"] = [t, t + 1]
    else:
        raise BadParameters(f"unknown family {f!r}; known: {', '.join(FAMILIES)}")
    meta.update({"family": f, "params": dict(p), "edges": len(h.edges),
                 "edge_formula": edge_formula(spec)})
    return h, meta
