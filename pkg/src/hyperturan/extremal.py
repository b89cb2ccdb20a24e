"""Brute-force / branch-and-bound oracles for exact extremal values at
desk scale: the ground truth constructions and formulas are compared
against.

The engine works over the fixed lexicographic list of all candidate
edges on n labeled vertices.  Before the search, every copy of every
forbidden pattern inside the complete host is enumerated once and
stored as a bitmask over candidate edges ("support").  The DFS then
needs only integer operations:

* a partial graph is free iff no support is a subset of its edge mask;
* after committing an edge, any undecided edge whose addition would
  complete a support is dead for the whole subtree;
* the optimistic bound is the objective evaluated on committed-or-live
  edges, which never underestimates, so pruning is exact.

Budgets are node counts.  An exhausted budget flags the result
incomplete instead of guessing.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb

from . import containment, counting
from .errors import BadParameters, BudgetExceeded
from .expansion import ensure_hypergraph
from .hypergraph import Hypergraph, canonical_form, complete_hypergraph

DEFAULT_BUDGET = 100_000_000
DEFAULT_WITNESSES = 4


@dataclass
class SearchResult:
    optimum: int
    witnesses: list[Hypergraph]
    nodes: int
    elapsed: float
    complete: bool
    objective: dict
    forbidden: list[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "optimum": self.optimum,
            "complete": self.complete,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "objective": self.objective,
            "forbidden": self.forbidden,
            "witnesses": [
                {"r": w.r, "n": w.n, "edges": [list(e) for e in w.edges]}
                for w in self.witnesses
            ],
        }


class _BudgetUp(Exception):
    pass


def _supports_by_edge(masks: list[int], m: int) -> list[list[int]]:
    """Group support masks by member edge, with that edge's bit removed."""
    by_edge: list[list[int]] = [[] for _ in range(m)]
    for mask in masks:
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            by_edge[low.bit_length() - 1].append(mask ^ low)
    return by_edge


def _dfs(m: int, by_edge: list[list[int]], empty_support: bool,
         objective, budget: int, witness_limit: int, fix_first_edge: bool,
         seed_mask: int | None):
    """Shared DFS over in/out decisions on m candidate edges.

    `objective(mask)` must be monotone under adding edges.  Returns
    (best, witness_masks, nodes, complete).
    """
    if empty_support:
        raise BadParameters("a forbidden pattern embeds in the edgeless host; "
                            "no free hypergraph exists")
    state = {"nodes": 0}
    best = -1
    witnesses: list[int] = []

    def note_leaf(mask: int) -> None:
        nonlocal best
        val = objective(mask)
        if val > best:
            best = val
            witnesses.clear()
            witnesses.append(mask)
        elif val == best and len(witnesses) < witness_limit and mask not in witnesses:
            witnesses.append(mask)

    live0 = 0
    for i in range(m):
        if not any(s == 0 for s in by_edge[i]):
            live0 |= 1 << i

    if seed_mask is not None:
        note_leaf(seed_mask)

    def rec(in_mask: int, live: int) -> None:
        nonlocal best
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _BudgetUp
        avail = in_mask | live
        bound = objective(avail)
        if bound < best or (bound == best and len(witnesses) >= witness_limit):
            return
        current = objective(in_mask)
        if current == bound or not live:
            note_leaf(in_mask)
            return
        e_bit = live & -live
        e = e_bit.bit_length() - 1
        # In-branch: e is live, so in_mask | e_bit stays free; kill any
        # undecided edge whose addition would now complete a support.
        new_in = in_mask | e_bit
        new_live = live ^ e_bit
        scan = new_live
        while scan:
            f_bit = scan & -scan
            scan ^= f_bit
            f = f_bit.bit_length() - 1
            for s in by_edge[f]:
                if s & ~new_in == 0:
                    new_live ^= f_bit
                    break
        rec(new_in, new_live)
        rec(in_mask, live ^ e_bit)

    complete = True
    try:
        if fix_first_edge:
            note_leaf(0)
            if live0 & 1:
                new_in = 1
                new_live = live0 ^ 1
                scan = new_live
                while scan:
                    f_bit = scan & -scan
                    scan ^= f_bit
                    for s in by_edge[f_bit.bit_length() - 1]:
                        if s & ~new_in == 0:
                            new_live ^= f_bit
                            break
                rec(new_in, new_live)
        else:
            rec(0, live0)
    except _BudgetUp:
        complete = False
    return best, witnesses, state["nodes"], complete


def _clique_objective(n: int, r: int, weights: dict[int, int], cand: list[tuple]):
    """Objective callable plus requirement masks for each weighted size."""
    index = {e: i for i, e in enumerate(cand)}
    terms = []
    for s, w in sorted(weights.items()):
        if w == 0:
            continue
        reqs = []
        for subset in itertools.combinations(range(n), s):
            mask = 0
            for sub in itertools.combinations(subset, r):
                mask |= 1 << index[sub]
            reqs.append(mask)
        terms.append((w, reqs))

    def objective(mask: int) -> int:
        total = 0
        for w, reqs in terms:
            total += w * sum(1 for req in reqs if req & ~mask == 0)
        return total

    return objective


def weighted_clique_max(n: int, r: int, weights: dict[int, int], forbidden,
                        budget: int = DEFAULT_BUDGET,
                        witness_limit: int = DEFAULT_WITNESSES,
                        fix_first_edge: bool = False,
                        seed: Hypergraph | None = None) -> SearchResult:
    """Exact maximum of sum_i w_i * N(K_i, G) over forbidden-free r-graphs
    on n labeled vertices."""
    if r < 1 or n < 0:
        raise BadParameters(f"need r >= 1 and n >= 0, got n={n}, r={r}")
    for s, w in weights.items():
        if w and not r <= s <= n:
            raise BadParameters(f"weighted clique size {s} outside [r, n]")
        if w < 0:
            raise BadParameters("weights must be non-negative")
    patterns = [ensure_hypergraph(p) for p in forbidden]
    cand = list(itertools.combinations(range(n), r))
    m = len(cand)
    index = {e: i for i, e in enumerate(cand)}
    host = complete_hypergraph(r, n)

    seed_mask = None
    if seed is not None:
        if seed.n != n or seed.r != r:
            raise BadParameters("seed must live on the same vertex set and uniformity")
        free, _ = containment.is_free(seed, patterns)
        if not free:
            raise BadParameters("seed hypergraph is not free of the forbidden patterns")
        seed_mask = sum(1 << index[e] for e in seed.edges)

    objective = _clique_objective(n, r, weights, cand)
    start = time.perf_counter()
    try:
        support_masks = []
        empty_support = False
        for p in patterns:
            for image in containment.copy_edge_images(p, host, budget=budget):
                if not image:
                    empty_support = True
                support_masks.append(sum(1 << index[e] for e in image))
    except BudgetExceeded:
        # Without the full support table no search can run soundly;
        # report the seed (if any) as the best-known lower bound.
        return SearchResult(
            optimum=objective(seed_mask) if seed_mask is not None else -1,
            witnesses=[seed] if seed is not None else [],
            nodes=0, elapsed=time.perf_counter() - start, complete=False,
            objective={"kind": "weighted_cliques",
                       "weights": {str(k): v for k, v in weights.items()}},
            forbidden=containment.describe_patterns(forbidden),
        )
    by_edge = _supports_by_edge(support_masks, m)
    best, wit_masks, nodes, complete = _dfs(
        m, by_edge, empty_support, objective, budget, witness_limit,
        fix_first_edge, seed_mask)
    elapsed = time.perf_counter() - start

    witnesses = _finish_witnesses(wit_masks, cand, n, r, witness_limit)
    result = SearchResult(
        optimum=best, witnesses=witnesses, nodes=nodes, elapsed=elapsed,
        complete=complete,
        objective={"kind": "weighted_cliques", "weights": {str(k): v for k, v in weights.items()}},
        forbidden=containment.describe_patterns(forbidden),
    )
    if complete:
        _post_verify_cliques(result, patterns, weights)
    return result


def brute_ex(n: int, r: int, s: int, forbidden,
             budget: int = DEFAULT_BUDGET,
             witness_limit: int = DEFAULT_WITNESSES,
             fix_first_edge: bool = False,
             seed: Hypergraph | None = None) -> SearchResult:
    """Exact maximum number of complete s-sets over forbidden-free r-graphs
    on n labeled vertices; s = r is the classical edge-count oracle."""
    if s < r:
        # Constant objective: any free hypergraph attains binom(n, s).
        patterns = [ensure_hypergraph(p) for p in forbidden]
        empty = Hypergraph(r, n, ())
        free, _ = containment.is_free(empty, patterns)
        if not free:
            raise BadParameters("a forbidden pattern embeds in the edgeless host; "
                                "no free hypergraph exists")
        return SearchResult(
            optimum=comb(n, s), witnesses=[empty], nodes=0, elapsed=0.0,
            complete=True,
            objective={"kind": "weighted_cliques", "weights": {str(s): 1}},
            forbidden=containment.describe_patterns(forbidden),
        )
    return weighted_clique_max(
        n, r, {s: 1}, forbidden, budget=budget, witness_limit=witness_limit,
        fix_first_edge=fix_first_edge, seed=seed)


def brute_berge_ex(n: int, s_uniformity: int, core,
                   budget: int = DEFAULT_BUDGET,
                   witness_limit: int = DEFAULT_WITNESSES,
                   fix_first_edge: bool = False,
                   seed: Hypergraph | None = None) -> SearchResult:
    """Exact maximum edge count of an n-vertex s-uniform hypergraph with no
    Berge copy of the core."""
    core = ensure_hypergraph(core)
    if core.r > s_uniformity:
        raise BadParameters(
            f"core uniformity {core.r} exceeds host uniformity {s_uniformity}")
    cand = list(itertools.combinations(range(n), s_uniformity))
    cand_masks = [sum(1 << v for v in e) for e in cand]
    m = len(cand)
    k = len(core.edges)

    seed_mask = None
    if seed is not None:
        if seed.n != n or seed.r != s_uniformity:
            raise BadParameters("seed must live on the same vertex set and uniformity")
        if containment.contains_berge(seed, core, budget=budget) is not None:
            raise BadParameters("seed hypergraph contains a Berge copy of the core")
        index = {e: i for i, e in enumerate(cand)}
        seed_mask = sum(1 << index[e] for e in seed.edges)

    objective = int.bit_count
    start = time.perf_counter()
    descriptor = {"kind": "berge_edge_count",
                  "core": {"r": core.r, "n": core.n,
                           "edges": [list(e) for e in core.edges]}}
    try:
        support_masks = []
        empty_support = core.n <= n and k == 0
        scanned = 0
        if core.n <= n:
            for combo in itertools.combinations(range(m), k):
                scanned += 1
                if scanned > budget:
                    raise BudgetExceeded(
                        f"Berge support scan exceeded {budget} candidate systems")
                picked = [cand_masks[i] for i in combo]
                if containment._berge_search(picked, n, core, budget) is not None:
                    support_masks.append(sum(1 << i for i in combo))
    except BudgetExceeded:
        return SearchResult(
            optimum=seed_mask.bit_count() if seed_mask is not None else -1,
            witnesses=[seed] if seed is not None else [],
            nodes=0, elapsed=time.perf_counter() - start, complete=False,
            objective=descriptor, forbidden=[],
        )
    by_edge = _supports_by_edge(support_masks, m)
    best, wit_masks, nodes, complete = _dfs(
        m, by_edge, empty_support, objective, budget, witness_limit,
        fix_first_edge, seed_mask)
    elapsed = time.perf_counter() - start

    witnesses = _finish_witnesses(wit_masks, cand, n, s_uniformity, witness_limit)
    result = SearchResult(
        optimum=best, witnesses=witnesses, nodes=nodes, elapsed=elapsed,
        complete=complete, objective=descriptor, forbidden=[],
    )
    if complete:
        for w in result.witnesses:
            if containment.contains_berge(w, core, budget=budget) is not None:
                raise AssertionError("witness failed Berge re-verification")
            if len(w.edges) != result.optimum:
                raise AssertionError("witness failed objective recount")
    return result


def _finish_witnesses(wit_masks: list[int], cand: list[tuple], n: int, r: int,
                      witness_limit: int) -> list[Hypergraph]:
    """Materialize witness masks, deduplicated up to isomorphism when small."""
    out: list[Hypergraph] = []
    seen = set()
    for mask in wit_masks:
        edges = [cand[i] for i in range(len(cand)) if mask >> i & 1]
        h = Hypergraph(r, n, tuple(edges))
        if n <= 8:
            key = canonical_form(h)
            if key in seen:
                continue
            seen.add(key)
        out.append(h)
        if len(out) >= witness_limit:
            break
    return out


def _post_verify_cliques(result: SearchResult, patterns, weights) -> None:
    """Independent re-check of every witness: freeness via the public
    containment path and an objective recount via the public counter."""
    for w in result.witnesses:
        free, _ = containment.is_free(w, patterns)
        if not free:
            raise AssertionError("witness failed freeness re-verification")
        val = sum(wt * counting.count_cliques(w, s) for s, wt in weights.items())
        if val != result.optimum:
            raise AssertionError("witness failed objective recount")


# -- sandwich verification ----------------------------------------------------

@dataclass
class SandwichReport:
    """The three oracle values relating Berge-freeness to clique maxima,
    with both inequalities checked."""

    n: int
    r: int
    s: int
    core: str
    berge: SearchResult
    general: SearchResult
    classical: SearchResult
    holds_lower: bool
    holds_upper: bool

    @property
    def holds(self) -> bool:
        return self.holds_lower and self.holds_upper

    def as_json(self) -> dict:
        return {
            "n": self.n, "r": self.r, "s": self.s, "core": self.core,
            "berge_optimum": self.berge.optimum,
            "general_optimum": self.general.optimum,
            "classical_optimum": self.classical.optimum,
            "holds_lower": self.holds_lower,
            "holds_upper": self.holds_upper,
            "holds": self.holds,
        }


def verify_sandwich(n: int, r: int, s: int, core_pattern,
                    budget: int = DEFAULT_BUDGET) -> SandwichReport:
    """Compute the Berge edge maximum, the generalized clique maximum, and
    the classical edge maximum for one core, and check that the first
    bounds the second from above and, minus the third, from below."""
    core = ensure_hypergraph(core_pattern)
    if core.r != r:
        raise BadParameters(f"core must be {r}-uniform, got r={core.r}")
    berge = brute_berge_ex(n, s, core, budget=budget)
    general = brute_ex(n, r, s, [core], budget=budget)
    classical = brute_ex(n, r, r, [core], budget=budget)
    for res in (berge, general, classical):
        if not res.complete:
            raise BudgetExceeded("sandwich verification needs complete searches")
    return SandwichReport(
        n=n, r=r, s=s,
        core=core_pattern if isinstance(core_pattern, str) else repr(core),
        berge=berge, general=general, classical=classical,
        holds_lower=berge.optimum - classical.optimum <= general.optimum,
        holds_upper=general.optimum <= berge.optimum,
    )
