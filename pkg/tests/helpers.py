"""Independent brute-force oracles used to derive and guard expected
values.  These deliberately avoid the library's own algorithms."""

from __future__ import annotations

import itertools

from hyperturan.hypergraph import Hypergraph


def naive_count_cliques(h: Hypergraph, s: int) -> int:
    """Check every s-subset directly against the edge set."""
    if s < h.r:
        from math import comb
        return comb(h.n, s)
    es = h.edge_set
    total = 0
    for subset in itertools.combinations(range(h.n), s):
        if all(sub in es for sub in itertools.combinations(subset, h.r)):
            total += 1
    return total


def naive_contains(pattern: Hypergraph, host: Hypergraph) -> bool:
    """Try every injective vertex map."""
    hs = host.edge_set
    if pattern.n > host.n:
        return False
    for perm in itertools.permutations(range(host.n), pattern.n):
        if all(tuple(sorted(perm[v] for v in e)) in hs for e in pattern.edges):
            return True
    return False


def naive_count_embeddings(pattern: Hypergraph, host: Hypergraph) -> int:
    hs = host.edge_set
    return sum(
        1
        for perm in itertools.permutations(range(host.n), pattern.n)
        if all(tuple(sorted(perm[v] for v in e)) in hs for e in pattern.edges)
    )


def naive_contains_berge(host: Hypergraph, core: Hypergraph) -> bool:
    """Try every vertex map and every system of distinct host edges."""
    if core.n > host.n or len(core.edges) > len(host.edges):
        return False
    he = host.edges
    for perm in itertools.permutations(range(host.n), core.n):
        imgs = [set(perm[v] for v in e) for e in core.edges]
        for combo in itertools.permutations(range(len(he)), len(core.edges)):
            if all(img <= set(he[j]) for img, j in zip(imgs, combo)):
                return True
    return False


def naive_chromatic(adj_edges: list[tuple[int, int]], n: int) -> int:
    """Smallest k admitting a proper coloring, by plain recursion."""
    adj = [set() for _ in range(n)]
    for u, v in adj_edges:
        adj[u].add(v)
        adj[v].add(u)

    def colorable(k: int) -> bool:
        colors = [-1] * n

        def rec(v: int) -> bool:
            if v == n:
                return True
            for c in range(k):
                if all(colors[u] != c for u in adj[v]):
                    colors[v] = c
                    if rec(v + 1):
                        return True
                    colors[v] = -1
            return False

        return rec(0)

    for k in range(1, n + 1):
        if colorable(k):
            return k
    return n


def random_hypergraph(rng, r: int, n: int, density: float = 0.4) -> Hypergraph:
    edges = [
        e for e in itertools.combinations(range(n), r) if rng.random() < density
    ]
    return Hypergraph(r, n, tuple(edges))
