"""Clique counting, the s-clique hypergraph, small-pattern copy counts,
and evaluators for the closed-form / leading-term extremal formulas.

Counting conventions:

* for s < r, the number of "complete" s-sets is binom(n, s) regardless
  of the edge set;
* binom(a, b) = 0 when a < b, and binom(0, 0) = 1;
* copies are unlabeled: embeddings divided by pattern automorphisms.

All counts are exact Python integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import containment
from .constructions import esym, turan_parts
from .errors import BadParameters
from .hypergraph import Hypergraph


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the conventions above; arbitrary precision."""
    if a < 0 or b < 0:
        raise BadParameters(f"binom needs non-negative arguments, got {a}, {b}")
    return math.comb(a, b)


# -- clique counting ---------------------------------------------------------

def _clique_dfs(h: Hypergraph, s: int, root: int | None, collect: list | None) -> int:
    """Count (and optionally collect) s-cliques, optionally through `root`.

    Vertices are added in increasing order; candidate bitsets shrink by
    intersecting the completion table of every new (r-1)-subset, and
    branches that cannot reach size s are pruned.
    """
    r, n = h.r, h.n
    full = (1 << n) - 1
    ext = h.ext
    count = 0

    def rec(chosen: list[int], cand: int) -> None:
        nonlocal count
        if len(chosen) == s:
            count += 1
            if collect is not None:
                collect.append(tuple(sorted(chosen)))
            return
        while cand:
            if len(chosen) + cand.bit_count() < s:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            new_cand = cand
            if r >= 2:
                # Future members must close an edge with every new
                # (r-1)-subset through v; missing table entries prune.
                for sub in itertools.combinations(chosen, r - 2):
                    key = tuple(sorted(sub + (v,)))
                    new_cand &= ext.get(key, 0)
                    if not new_cand:
                        break
            chosen.append(v)
            rec(chosen, new_cand)
            chosen.pop()

    if root is not None:
        if r == 1:
            singles = ext.get((), 0)
            if not singles >> root & 1:
                return 0
            start_cand = singles & ~(1 << root)
        elif r == 2:
            start_cand = ext.get((root,), 0) & ~(1 << root)
        else:
            start_cand = full & ~(1 << root)
        rec([root], start_cand)
    else:
        start_cand = ext.get((), 0) if r == 1 else full
        rec([], start_cand)
    return count


def count_cliques(h: Hypergraph, s: int) -> int:
    """Number of s-sets all of whose r-subsets are edges; binom(n, s) when
    s < r."""
    if s < 0:
        raise BadParameters(f"clique size must be >= 0, got {s}")
    if s < h.r:
        return binom(h.n, s)
    return _clique_dfs(h, s, root=None, collect=None)


def count_cliques_at_vertex(h: Hypergraph, s: int, v: int) -> int:
    """Number of s-cliques containing v; summed over v this is s times the
    total count."""
    if s < h.r:
        raise BadParameters(f"need s >= r = {h.r}, got s={s}")
    h._check_vertex(v)
    return _clique_dfs(h, s, root=v, collect=None)


def clique_hypergraph(h: Hypergraph, s: int) -> Hypergraph:
    """The s-uniform hypergraph whose edges are the s-sets inducing a
    complete sub-r-graph."""
    if s < h.r:
        raise BadParameters(f"clique hypergraph needs s >= r = {h.r}, got s={s}")
    edges: list[tuple[int, ...]] = []
    _clique_dfs(h, s, root=None, collect=edges)
    return Hypergraph(s, h.n, tuple(edges))


def count_pattern_copies(pattern, host, budget: int = containment.DEFAULT_BUDGET) -> int:
    """Unlabeled copies of a small pattern: embeddings / automorphisms."""
    from .expansion import ensure_hypergraph

    pattern = ensure_hypergraph(pattern)
    host = ensure_hypergraph(host)
    emb = containment.count_embeddings(pattern, host, budget=budget)
    if emb == 0:
        return 0
    aut = containment.count_embeddings(pattern, pattern, budget=budget)
    if emb % aut:
        raise AssertionError(
            f"embedding count {emb} not divisible by automorphism count {aut}")
    return emb // aut


# -- closed-form counts on constructions -------------------------------------

def star_like_clique_count(n: int, t: int, r: int, s: int) -> int:
    """s-cliques in the n-vertex r-graph of all edges meeting a t-core."""
    if s < r:
        return binom(n, s)
    return sum(binom(t, j) * binom(n - t, s - j) for j in range(s - r + 1, s + 1))


def two_in_a_clique_count(n: int, a: int, r: int, s: int) -> int:
    """s-cliques in the r-graph of all edges with >= 2 vertices in an a-set."""
    if s < r:
        return binom(n, s)
    return sum(
        binom(a, s - r + 2 + i) * binom(n - a, r - 2 - i) for i in range(r - 1)
    )


# -- formula evaluators -------------------------------------------------------

@dataclass(frozen=True)
class FormulaResult:
    """Either an exact value or an exact leading term (coefficient and
    exponent); never both."""

    formula_id: str
    params: dict = field(default_factory=dict)
    value: int | None = None
    leading_coefficient: Fraction | None = None
    exponent: int | None = None

    def __post_init__(self) -> None:
        exact = self.value is not None
        asym = self.leading_coefficient is not None and self.exponent is not None
        if exact == asym:
            raise BadParameters("exactly one of value / leading term must be set")

    def as_json(self) -> dict:
        out = {"formula_id": self.formula_id, "params": dict(self.params)}
        if self.value is not None:
            out["value"] = self.value
        else:
            out["leading"] = {
                "num": self.leading_coefficient.numerator,
                "den": self.leading_coefficient.denominator,
                "exp": self.exponent,
            }
        return out


def formula_complete_expansion(n: int, r: int, s: int, ell: int) -> FormulaResult:
    """Exact maximum number of s-cliques with the complete-graph expansion
    on ell+1 vertices forbidden: the s-clique count of the balanced
    ell-partite construction."""
    if not (ell >= s >= r >= 3 and n >= ell):
        raise BadParameters(f"need ell >= s >= r >= 3 and n >= ell, got n={n}, r={r}, s={s}, ell={ell}")
    sizes = [len(p) for p in turan_parts(n, ell)]
    return FormulaResult(
        "complete-expansion", {"n": n, "r": r, "s": s, "ell": ell},
        value=esym(sizes, s),
    )


def formula_union_complete(n: int, r: int, s: int, ell: int, k: int) -> FormulaResult:
    """Exact s-clique count of the core-over-balanced construction that is
    asymptotically extremal when k disjoint complete expansions are
    forbidden: sum over i of binom(k-1, s-i) * N(K_i, balanced part)."""
    if not (ell >= s >= r >= 3 and k >= 1 and n - k + 1 >= ell):
        raise BadParameters(f"need ell >= s >= r >= 3, k >= 1, n-k+1 >= ell; got n={n}, r={r}, s={s}, ell={ell}, k={k}")
    m = n - k + 1
    sizes = [len(p) for p in turan_parts(m, ell)]
    total = 0
    for i in range(s + 1):
        inner = binom(m, i) if i < r else esym(sizes, i)
        total += binom(k - 1, s - i) * inner
    return FormulaResult(
        "union-complete", {"n": n, "r": r, "s": s, "ell": ell, "k": k},
        value=total,
    )


def formula_star_forest(n: int, r: int, s: int, k: int, max_term: int) -> FormulaResult:
    """Exact star-forest value: a binomial prefix plus the supplied
    maximum weighted clique count over star-free graphs on n-k+1
    vertices (no closed form exists for that term; the search oracle
    provides it)."""
    if not (r >= 3 and k >= 1 and s >= 0 and n >= k - 1):
        raise BadParameters(f"need r >= 3, k >= 1, s >= 0, n >= k-1; got n={n}, r={r}, s={s}, k={k}")
    if s > k + r - 2:
        raise BadParameters(f"need s <= k+r-2, got s={s}, k={k}, r={r}")
    if max_term < 0:
        raise BadParameters("max_term must be >= 0")
    prefix = sum(binom(k - 1, s - i) * binom(n - k + 1, i) for i in range(r))
    return FormulaResult(
        "star-forest", {"n": n, "r": r, "s": s, "k": k, "max_term": max_term},
        value=prefix + max_term,
    )


def formula_linear_forest_leading(r: int, s: int, ells: list[int], p: int,
                                  paths_only: bool = False) -> FormulaResult:
    """Leading term for unions of path/cycle expansions plus p star
    expansions: binom(t, s-r+1) / (r-1)! at exponent r-1, degenerating
    to coefficient 0 when s >= t+r.

    Lengths must be >= 5 in general; >= 4 is allowed when the union
    consists of paths only (`paths_only`).
    """
    low = 4 if paths_only else 5
    if r < 3 or s < r or p < 0 or not ells or any(l < low for l in ells):
        raise BadParameters(
            f"need r >= 3, s >= r, p >= 0, lengths >= {low}; got r={r}, s={s}, ells={ells}, p={p}")
    t = sum((l + 1) // 2 for l in ells) + p - 1
    coeff = Fraction(binom(t, s - r + 1), math.factorial(r - 1))
    if s >= t + r:
        coeff = Fraction(0)
    return FormulaResult(
        "linear-forest-leading",
        {"r": r, "s": s, "ells": list(ells), "p": p, "t": t},
        leading_coefficient=coeff, exponent=r - 1,
    )


def formula_appendix_exact(n: int, r: int, ells: list[int]) -> FormulaResult:
    """Exact edge maximum for a union of path/cycle expansions, with the
    all-even correction term; the (r=3, length-4) combination is outside
    the theorem and rejected."""
    if r < 3 or not ells or any(l < 3 for l in ells):
        raise BadParameters(f"need r >= 3 and lengths >= 3, got r={r}, ells={ells}")
    if r == 3 and any(l == 4 for l in ells):
        raise BadParameters("length 4 is excluded when r = 3")
    big_t = sum((l + 1) // 2 for l in ells)
    if n < big_t + 1:
        raise BadParameters(f"need n >= {big_t + 1}, got n={n}")
    c = binom(n - big_t - 1, r - 2) if all(l % 2 == 0 for l in ells) else 0
    value = binom(n, r) - binom(n - big_t + 1, r) + c
    return FormulaResult(
        "appendix-exact", {"n": n, "r": r, "ells": list(ells)}, value=value,
    )


def formula_path_single(n: int, r: int, ell: int, kind: str) -> FormulaResult:
    """Exact edge maximum for a single path or cycle expansion, including
    the special 3-uniform 4-cycle branch."""
    if kind not in ("path", "cycle"):
        raise BadParameters(f"kind must be 'path' or 'cycle', got {kind!r}")
    if r < 3 or ell < (3 if kind == "path" else 4):
        raise BadParameters(f"need r >= 3 and ell >= {3 if kind == 'path' else 4}, got r={r}, ell={ell}")
    q = (ell - 1) // 2
    if n < q + 2:
        raise BadParameters(f"need n >= {q + 2}, got n={n}")
    if kind == "cycle" and (r, ell) == (3, 4):
        value = binom(n, 3) - binom(n - 1, 3) + max(n - 3, 4 * ((n - 1) // 4))
    else:
        value = binom(n, r) - binom(n - q, r)
        if ell % 2 == 0:
            value += binom(n - q - 2, r - 2)
    return FormulaResult(
        "path-single", {"n": n, "r": r, "ell": ell, "kind": kind}, value=value,
    )


def formula_emc(n: int, r: int, s_match: int) -> FormulaResult:
    """Conjectured edge maximum when a matching expansion of size
    s_match+1 is forbidden (a bound evaluator, not a theorem claim)."""
    if not (r >= 2 and s_match >= 1 and n >= (s_match + 1) * r - 1):
        raise BadParameters(
            f"need r >= 2, s >= 1, n >= (s+1)r-1; got n={n}, r={r}, s={s_match}")
    value = max(
        binom((s_match + 1) * r - 1, r),
        binom(n, r) - binom(n - s_match, r),
    )
    return FormulaResult(
        "emc", {"n": n, "r": r, "s_match": s_match}, value=value,
    )


FORMULAS = {
    "complete_expansion": formula_complete_expansion,
    "union_complete": formula_union_complete,
    "star_forest": formula_star_forest,
    "linear_forest_leading": formula_linear_forest_leading,
    "appendix_exact": formula_appendix_exact,
    "path_single": formula_path_single,
    "emc": formula_emc,
}
