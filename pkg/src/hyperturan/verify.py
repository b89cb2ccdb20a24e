"""Machine-checkable verification suites.

Each suite returns a JSON-friendly report::

    {"schema": 1, "suite": ..., "params": {...},
     "checks": [{"id": ..., "ok": ..., "detail": ...}, ...], "ok": ...}

Suites cover: construction-vs-formula identities, freeness of the
lower-bound constructions, the clique-hypergraph reduction sweep, the
Berge sandwich, the strong-coloring inequality, the binomial identity
grid, and oracle dominance over the constructions.
"""

from __future__ import annotations

import itertools
from math import comb

from . import containment, counting, extremal
from .constructions import (
    add_universal_core,
    complete_bipartite_r,
    frankl_family,
    path_cycle_lower,
    star_like,
    star_turan,
    t_value,
    turan_hypergraph,
    turan_parts,
    two_in_A,
)
from .counting import (
    binom,
    count_cliques,
    count_cliques_at_vertex,
    formula_appendix_exact,
    formula_complete_expansion,
    formula_emc,
    formula_path_single,
    formula_union_complete,
    star_like_clique_count,
    two_in_a_clique_count,
)
from .errors import UnknownSuite
from .expansion import chromatic_number, expand, strong_chromatic_number
from .extremal import brute_ex, verify_sandwich
from .hypergraph import Hypergraph, complete_hypergraph


def _check(checks: list, cid: str, ok: bool, detail: str = "") -> None:
    checks.append({"id": cid, "ok": bool(ok), "detail": detail})


def _report(suite: str, params: dict, checks: list) -> dict:
    return {
        "schema": 1,
        "suite": suite,
        "params": params,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }


# -- formula-vs-count ---------------------------------------------------------

def formula_vs_count(max_n: int = 12, rs: tuple[int, ...] = (3, 4)) -> dict:
    """Generated edge and clique counts equal their closed forms, for every
    construction family over the full small-parameter sweep."""
    checks: list = []
    for r in rs:
        for n in range(r, max_n + 1):
            for ell in range(r, n + 1):
                h = turan_hypergraph(n, ell, r)
                sizes = [len(p) for p in turan_parts(n, ell)]
                _check(checks, f"turan-edges[n={n},l={ell},r={r}]",
                       len(h.edges) == t_value(n, ell, r))
                for s in range(r, ell + 1):
                    got = count_cliques(h, s)
                    want = formula_complete_expansion(n, r, s, ell).value
                    _check(checks, f"turan-cliques[n={n},l={ell},r={r},s={s}]",
                           got == want, f"count={got} formula={want}")
                hand = sum(count_cliques_at_vertex(h, r, v) for v in range(n))
                _check(checks, f"turan-handshake[n={n},l={ell},r={r}]",
                       hand == r * len(h.edges))
            for t in range(1, n + 1):
                h = star_like(n, t, r)
                _check(checks, f"star-like-edges[n={n},t={t},r={r}]",
                       len(h.edges) == comb(n, r) - comb(n - t, r))
                for s in range(r, min(n, r + 2) + 1):
                    _check(checks, f"star-like-cliques[n={n},t={t},r={r},s={s}]",
                           count_cliques(h, s) == star_like_clique_count(n, t, r, s))
            for ell in range(r, n + 1):
                for t in range(0, n - ell + 1):
                    h = star_turan(n, t, ell, r)
                    want_e = comb(n, r) - comb(n - t, r) + t_value(n - t, ell, r)
                    _check(checks, f"star-turan-edges[n={n},t={t},l={ell},r={r}]",
                           len(h.edges) == want_e)
                    for s in range(r, ell + 1):
                        got = count_cliques(h, s)
                        want = formula_union_complete(n, r, s, ell, t + 1).value
                        _check(checks,
                               f"star-turan-cliques[n={n},t={t},l={ell},r={r},s={s}]",
                               got == want, f"count={got} formula={want}")
            for a in range(2, n + 1):
                h = two_in_A(n, a, r)
                want_e = sum(comb(a, j) * comb(n - a, r - j) for j in range(2, r + 1))
                _check(checks, f"two-in-A-edges[n={n},a={a},r={r}]",
                       len(h.edges) == want_e)
                for s in range(r, r + 3):
                    _check(checks, f"two-in-A-cliques[n={n},a={a},r={r},s={s}]",
                           count_cliques(h, s) == two_in_a_clique_count(n, a, r, s))
            for a in range(1, r + 1):
                for k in range(1, n + 1):
                    if a * k + a - 1 > n:
                        continue
                    h = frankl_family(n, k, a, r)
                    m = a * k + a - 1
                    want_e = sum(comb(m, j) * comb(n - m, r - j)
                                 for j in range(a, r + 1))
                    _check(checks, f"frankl-edges[n={n},k={k},a={a},r={r}]",
                           len(h.edges) == want_e)
        for s in range(1, 5):
            for t in range(1, 5):
                h = complete_bipartite_r(s, t, r)
                _check(checks, f"complete-bipartite-edges[s={s},t={t},r={r}]",
                       len(h.edges) == s * t and h.n == t * (r - 1) + s)
        for ells in ([3], [4], [5], [6], [3, 3], [4, 4], [5, 5], [4, 6]):
            t = sum((l + 1) // 2 for l in ells) - 1
            for n in range(t + r, max_n + 3):
                h = path_cycle_lower(n, r, ells)
                c = comb(n - t - 2, r - 2) if all(l % 2 == 0 for l in ells) else 0
                want_e = comb(n, r) - comb(n - t, r) + c
                _check(checks, f"path-cycle-lower-edges[n={n},r={r},ells={ells}]",
                       len(h.edges) == want_e)
    return _report("formula-vs-count", {"max_n": max_n, "rs": list(rs)}, checks)


# -- constructions-free -------------------------------------------------------

def constructions_free(max_n_turan: int = 12, max_n_star: int = 14) -> dict:
    """The lower-bound constructions avoid their forbidden patterns."""
    checks: list = []
    for ell in (3, 4):
        for n in range(ell, max_n_turan + 1):
            h = turan_hypergraph(n, ell, 3)
            free, _ = containment.is_free(h, [f"expand3(complete:{ell + 1})"])
            _check(checks, f"turan-complete-free[n={n},l={ell}]", free)
            covered = containment.contains_covered_set(h, ell + 1)
            _check(checks, f"turan-covered-free[n={n},l={ell}]", not covered)
    for ell in (2, 3):
        for n in range(3, max_n_turan + 1):
            if n < max(3, ell):
                continue
            h = two_in_A(n, ell, 3)
            free, _ = containment.is_free(h, [f"expand3(star:{ell})"])
            _check(checks, f"two-in-A-star-free[n={n},l={ell}]", free)
    for n in range(3, max_n_star + 1):
        h = star_like(n, 2, 3)
        free, _ = containment.is_free(h, ["expand3(path:5)", "expand3(cycle:5)"])
        _check(checks, f"star-like-path-free[n={n},t=2]", free)
        if n >= 4:
            h = star_like(n, 3, 3)
            free, _ = containment.is_free(
                h, ["expand3(path:5+star:2)", "expand3(cycle:5+star:2)"])
            _check(checks, f"star-like-path-star-free[n={n},t=3]", free)
    for ells, pat in (([5], "expand3(path:5)"), ([6], "expand3(path:6)")):
        t = sum((l + 1) // 2 for l in ells) - 1
        for n in range(t + 3, max_n_star + 1):
            h = path_cycle_lower(n, 3, ells)
            free, _ = containment.is_free(h, [pat])
            _check(checks, f"path-cycle-lower-free[n={n},ells={ells}]", free)
    return _report("constructions-free",
                   {"max_n_turan": max_n_turan, "max_n_star": max_n_star}, checks)


# -- clique-reduction ---------------------------------------------------------

def _contains_table(m: int, supports: list[int]) -> bytearray:
    """contains[mask] = 1 iff some support is a subset of mask."""
    by_lowest: list[list[int]] = [[] for _ in range(m)]
    for s in supports:
        by_lowest[(s & -s).bit_length() - 1].append(s)
    table = bytearray(1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        rest = mask ^ low
        if table[rest]:
            table[mask] = 1
            continue
        for s in by_lowest[low.bit_length() - 1]:
            if s & ~mask == 0:
                table[mask] = 1
                break
    return table


def clique_reduction(n: int = 6) -> dict:
    """Exhaustive sweep: for every 3-graph on n vertices avoiding a
    pattern's 3-expansion, the 4-clique hypergraph avoids its 4-expansion.

    The 4-clique edge sets are read off precomputed requirement masks
    and spot-checked against the public clique_hypergraph operation.
    """
    from .counting import clique_hypergraph
    from .expansion import parse_pattern, realize

    checks: list = []
    triples = list(itertools.combinations(range(n), 3))
    m = len(triples)
    idx = {t: i for i, t in enumerate(triples)}
    host = complete_hypergraph(3, n)
    quads = list(itertools.combinations(range(n), 4))
    quad_req = []
    for q in quads:
        mask = 0
        for sub in itertools.combinations(q, 3):
            mask |= 1 << idx[sub]
        quad_req.append(mask)

    for fname, fspec in (("K3", "complete:3"), ("P2", "path:2")):
        pat3 = realize(parse_pattern(f"expand3({fspec})"))
        pat4 = realize(parse_pattern(f"expand4({fspec})"))
        supports = [
            sum(1 << idx[e] for e in img)
            for img in containment.copy_edge_images(pat3, host)
        ]
        contains = _contains_table(m, supports)
        free_count = 0
        bad = 0
        spot_ok = True
        verdicts: dict[tuple, bool] = {}
        for mask in range(1 << m):
            if contains[mask]:
                continue
            free_count += 1
            cliques4 = tuple(q for q, req in zip(quads, quad_req) if req & ~mask == 0)
            if free_count % 997 == 0:
                edges3 = tuple(t for i, t in enumerate(triples) if mask >> i & 1)
                public = clique_hypergraph(Hypergraph(3, n, edges3), 4)
                spot_ok = spot_ok and public.edges == cliques4
            verdict = verdicts.get(cliques4)
            if verdict is None:
                host4 = Hypergraph(4, n, cliques4)
                verdict = containment.find_embedding(pat4, host4) is None
                verdicts[cliques4] = verdict
            if not verdict:
                bad += 1
        _check(checks, f"clique-reduction[{fname},n={n}]", bad == 0 and spot_ok,
               f"free_graphs={free_count} counterexamples={bad}")
    return _report("clique-reduction", {"n": n}, checks)


# -- sandwich -----------------------------------------------------------------

def sandwich(ns: tuple[int, ...] = (5, 6), budget: int = extremal.DEFAULT_BUDGET) -> dict:
    """Berge/clique/edge oracle sandwich for the three small cores."""
    checks: list = []
    cores = ("expand3(path:2)", "expand3(matching:2)", "expand3(complete:3)")
    for core in cores:
        for n in ns:
            rep = verify_sandwich(n, 3, 4, core, budget=budget)
            _check(checks, f"sandwich[core={core},n={n}]", rep.holds,
                   f"berge={rep.berge.optimum} general={rep.general.optimum} "
                   f"classical={rep.classical.optimum}")
    return _report("sandwich", {"ns": list(ns), "r": 3, "s": 4}, checks)


# -- coloring-ineq ------------------------------------------------------------

def _connected_graph_reps(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Connected graphs on exactly n vertices, one per isomorphism class."""
    import numpy as np

    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    if m == 0:
        return [()] if n == 1 else []
    idx = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << m, dtype=np.int64)
    canon = masks.copy()
    split = min(8, m)
    lo_n, hi_n = 1 << split, 1 << (m - split)
    for perm in itertools.permutations(range(n)):
        dst = [idx[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        tlow = np.zeros(lo_n, dtype=np.int64)
        for x in range(lo_n):
            acc = 0
            for j in range(split):
                if x >> j & 1:
                    acc |= 1 << dst[j]
            tlow[x] = acc
        thigh = np.zeros(hi_n, dtype=np.int64)
        for x in range(hi_n):
            acc = 0
            for j in range(m - split):
                if x >> j & 1:
                    acc |= 1 << dst[split + j]
            thigh[x] = acc
        remapped = tlow[masks & (lo_n - 1)] | thigh[masks >> split]
        np.minimum(canon, remapped, out=canon)

    reps = []
    for mask in sorted(set(int(v) for v in np.unique(canon))):
        edges = tuple(pairs[j] for j in range(m) if mask >> j & 1)
        # connectivity over all n vertices
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == n:
            reps.append(edges)
    return reps


def coloring_ineq(max_vertices: int = 6, rs: tuple[int, ...] = (3, 4, 5)) -> dict:
    """Chromatic number of F vs strong chromatic number of its expansions:
    the latter is sandwiched between chi(F) and max(chi(F), r)."""
    checks: list = []
    total = 0
    violations = []
    for n in range(1, max_vertices + 1):
        for edges in _connected_graph_reps(n):
            graph = Hypergraph(2, n, edges)
            chi = chromatic_number(graph)
            for r in rs:
                strong = strong_chromatic_number(expand(graph, r))
                total += 1
                if not chi <= strong <= max(chi, r):
                    violations.append((n, edges, r, chi, strong))
    _check(checks, f"coloring-ineq[n<={max_vertices},rs={list(rs)}]",
           not violations, f"graphs_checked={total} violations={len(violations)}")
    return _report("coloring-ineq",
                   {"max_vertices": max_vertices, "rs": list(rs)}, checks)


# -- vandermonde --------------------------------------------------------------

def vandermonde(max_t: int = 12, rs: tuple[int, ...] = (3, 4, 5)) -> dict:
    """Binomial identity grid plus formula cross-consistency checks."""
    checks: list = []
    bad = 0
    total = 0
    for r in rs:
        for t in range(0, max_t + 1):
            for lp in range(0, t + 1):
                for s in range(r, t + r):
                    lhs = sum(binom(lp, i) * binom(t - lp, s - i - r + 1)
                              for i in range(1, s - r + 1))
                    lhs += binom(lp, s - r + 1)
                    rhs = binom(t, s - r + 1) - binom(t - lp, s - r + 1)
                    total += 1
                    if lhs != rhs:
                        bad += 1
    _check(checks, f"vandermonde-collapse[t<={max_t}]", bad == 0,
           f"checked={total} failures={bad}")

    bad = 0
    total = 0
    for r in (3, 4):
        for k in range(1, 6):
            for n in range(k + r, 21):
                prefix = sum(binom(k - 1, r - i) * binom(n - k + 1, i)
                             for i in range(r))
                total += 1
                if prefix != binom(n, r) - binom(n - k + 1, r):
                    bad += 1
    _check(checks, "star-forest-prefix-collapse[n<=20,k<=5]", bad == 0,
           f"checked={total} failures={bad}")

    bad = 0
    total = 0
    for ell in (5, 6, 7, 8):
        for n in range(20, 201):
            a = formula_appendix_exact(n, 3, [ell]).value
            b = formula_path_single(n, 3, ell, "path").value
            total += 1
            if a != b:
                bad += 1
    _check(checks, "single-path-formula-consistency[20<=n<=200]", bad == 0,
           f"checked={total} failures={bad}")
    return _report("vandermonde", {"max_t": max_t, "rs": list(rs)}, checks)


# -- oracle-sweep -------------------------------------------------------------

def _dominance_cases(n: int) -> list[tuple[str, list[str], int, Hypergraph]]:
    """(label, forbidden patterns, clique size, construction) at this n."""
    cases = [
        ("complete-l3", ["expand3(complete:4)"], 3, turan_hypergraph(n, 3, 3)),
        ("complete-l4", ["expand3(complete:5)"], 3, turan_hypergraph(n, 4, 3)),
        ("union-complete-k2", ["expand3(complete:4+complete:4)"], 3,
         star_turan(n, 1, 3, 3)),
        ("star-l2", ["expand3(star:2)"], 3, two_in_A(n, 2, 3)),
        ("star-l3", ["expand3(star:3)"], 3, two_in_A(n, 3, 3)),
        ("star-forest-k2", ["expand3(star:2+star:2)"], 3,
         add_universal_core(two_in_A(n - 1, 2, 3), 1)),
        ("star-forest-k2-s4", ["expand3(star:2+star:2)"], 4, two_in_A(n, 5, 3)),
        ("path-l5", ["expand3(path:5)"], 3, star_like(n, 2, 3)),
        ("path-l5-s4", ["expand3(path:5)"], 4, star_like(n, 2, 3)),
        ("star-path", ["expand3(path:5+star:2)"], 3, star_like(n, 3, 3)),
        ("appendix-l5", ["expand3(path:5)"], 3, path_cycle_lower(n, 3, [5])),
        ("matching-s1", ["expand3(matching:2)"], 3, frankl_family(n, 1, 1, 3)),
    ]
    if n >= 5:
        comp = Hypergraph(3, n, tuple(itertools.combinations(range(5), 3)))
        cases.append(("matching-s1-clique-side", ["expand3(matching:2)"], 3, comp))
    return cases


def oracle_sweep(ns: tuple[int, ...] = (5, 6),
                 budget: int = extremal.DEFAULT_BUDGET) -> dict:
    """Matching oracle equality plus oracle dominance over every explicit
    construction; first-equality sizes are reported, never asserted."""
    checks: list = []
    for n in ns:
        res = brute_ex(n, 3, 3, ["expand3(matching:2)"], budget=budget)
        want = formula_emc(n, 3, 1).value
        _check(checks, f"matching-oracle[n={n}]",
               res.complete and res.optimum == want,
               f"oracle={res.optimum} formula={want}")
    for n in ns:
        for label, forbidden, s, h in _dominance_cases(n):
            value = counting.count_cliques(h, s)
            res = brute_ex(n, 3, s, forbidden, budget=budget, seed=h)
            ok = res.complete and res.optimum >= value
            extra = "equal" if res.optimum == value else "strict"
            _check(checks, f"dominance[{label},n={n},s={s}]", ok,
                   f"oracle={res.optimum} construction={value} ({extra})")
    return _report("oracle-sweep", {"ns": list(ns)}, checks)


SUITES = {
    "constructions-free": constructions_free,
    "formula-vs-count": formula_vs_count,
    "clique-reduction": clique_reduction,
    "sandwich": sandwich,
    "coloring-ineq": coloring_ineq,
    "vandermonde": vandermonde,
    "oracle-sweep": oracle_sweep,
}


def run_verify_suite(suite_id: str, **scale) -> dict:
    """Run one named suite; unknown ids raise UnknownSuite."""
    if suite_id not in SUITES:
        raise UnknownSuite(
            f"unknown suite {suite_id!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[suite_id](**scale)
