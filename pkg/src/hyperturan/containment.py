"""Decision procedures with certificates: subhypergraph containment,
covered-set families, and Berge containment.

Searches carry explicit node budgets.  Exceeding a budget raises
BudgetExceeded rather than answering "no", so exhaustive sweeps can
never silently misreport freeness.
"""

from __future__ import annotations

from collections import deque

from .errors import BadParameters, BudgetExceeded, UniformityMismatch
from .expansion import ensure_hypergraph, format_pattern
from .hypergraph import EmbeddingCertificate, Hypergraph

DEFAULT_BUDGET = 20_000_000


def bfs_order(pattern: Hypergraph) -> list[int]:
    """Pattern vertex order: BFS from the highest-degree vertex, component
    by component, isolated vertices excluded; expansions are sparse, so
    early edge completion prunes."""
    degs = [pattern.degree(v) for v in range(pattern.n)]
    seen = [False] * pattern.n
    order: list[int] = []
    for root in sorted(range(pattern.n), key=lambda v: (-degs[v], v)):
        if seen[root] or degs[root] == 0:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            nbrs = sorted(
                (u for u in _bits(pattern.cooc[v]) if not seen[u]),
                key=lambda u: (-degs[u], u),
            )
            for u in nbrs:
                seen[u] = True
                queue.append(u)
    return order


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _hall_match(domains: list[int]) -> list[int] | None:
    """Distinct representatives for bitset domains (Kuhn's augmenting
    paths), or None when none exist."""
    match_of: dict[int, int] = {}

    def augment(i: int, visited: set[int]) -> bool:
        d = domains[i]
        while d:
            low = d & -d
            d ^= low
            hv = low.bit_length() - 1
            if hv in visited:
                continue
            visited.add(hv)
            j = match_of.get(hv)
            if j is None or augment(j, visited):
                match_of[hv] = i
                return True
        return False

    for i in sorted(range(len(domains)), key=lambda i: domains[i].bit_count()):
        if not augment(i, set()):
            return None
    out = [0] * len(domains)
    for hv, i in match_of.items():
        out[i] = hv
    return out


def find_embedding(pattern, host, budget: int = DEFAULT_BUDGET):
    """First embedding of `pattern` into `host`, or None.

    An embedding is an injective vertex map sending every pattern edge
    onto a host edge.  Patterns may be Hypergraphs, PatternSpecs, or
    pattern text.
    """
    return _embed(ensure_hypergraph(pattern), ensure_hypergraph(host),
                  budget, count_all=False)


def count_embeddings(pattern, host, budget: int = DEFAULT_BUDGET) -> int:
    """Number of injective edge-preserving vertex maps (labeled count)."""
    return _embed(ensure_hypergraph(pattern), ensure_hypergraph(host),
                  budget, count_all=True)


def copy_edge_images(pattern, host, budget: int = DEFAULT_BUDGET) -> set[frozenset]:
    """Distinct host-edge sets over which some copy of the pattern sits.

    Each element is a frozenset of host edges (as sorted vertex tuples).
    The extremal oracle precomputes these against a complete host to turn
    freeness into subset tests.
    """
    images: set[frozenset] = set()
    _embed(ensure_hypergraph(pattern), ensure_hypergraph(host),
           budget, count_all=True, collect_images=images)
    return images


def _embed(pattern: Hypergraph, host: Hypergraph, budget: int, count_all: bool,
           collect_images: set | None = None):
    if pattern.r != host.r:
        raise UniformityMismatch(f"pattern r={pattern.r} vs host r={host.r}")
    if pattern.n > host.n or len(pattern.edges) > len(host.edges):
        return 0 if count_all else None

    # BFS positions seed the tie-break; the vertex actually branched on at
    # each node is the one with the fewest remaining candidates, which is
    # what keeps proofs of non-containment shallow in symmetric hosts.
    order = bfs_order(pattern)
    prio = {v: i for i, v in enumerate(order)}
    pat_degs = [pattern.degree(v) for v in range(pattern.n)]
    host_degs = [host.degree(v) for v in range(host.n)]
    iso = pattern.n - len(order)

    base_cand = [0] * pattern.n
    for v in order:
        mask = 0
        for h in range(host.n):
            if host_degs[h] >= pat_degs[v]:
                mask |= 1 << h
        base_cand[v] = mask

    assignment: dict[int, int] = {}
    state = {"nodes": 0, "total": 0}
    edges_of: list[list[int]] = [[] for _ in range(pattern.n)]
    for j, e in enumerate(pattern.edges):
        for v in e:
            edges_of[v].append(j)

    def apply_filters(p: int, h: int, taken: int, cand: list[int]) -> bool:
        """Tighten candidate sets of p's edge partners; False on wipeout."""
        for j in edges_of[p]:
            e = pattern.edges[j]
            unassigned = [v for v in e if v not in assignment]
            if not unassigned:
                if tuple(sorted(assignment[v] for v in e)) not in host.edge_set:
                    return False
            elif len(unassigned) == 1:
                q = unassigned[0]
                key = tuple(sorted(assignment[v] for v in e if v != q))
                cand[q] &= host.ext.get(key, 0)
                if not cand[q] & ~taken:
                    return False
            elif len(unassigned) == 2:
                # Lookahead: a candidate survives only while the edge
                # still has an available completion vertex.
                base = sorted(assignment[v] for v in e if v in assignment)
                pair_base = base[0] if len(base) == 1 else None
                ext = host.ext
                for q in unassigned:
                    keep = 0
                    cm = cand[q] & ~taken
                    while cm:
                        lowb = cm & -cm
                        cm ^= lowb
                        hh = lowb.bit_length() - 1
                        if pair_base is not None:
                            key = (pair_base, hh) if pair_base < hh else (hh, pair_base)
                        else:
                            key = tuple(sorted(base + [hh]))
                        if ext.get(key, 0) & ~taken & ~lowb:
                            keep |= lowb
                    cand[q] &= keep
                    if not keep:
                        return False
            else:
                hm = host.cooc[h]
                for q in unassigned:
                    cand[q] &= hm
                    if not cand[q] & ~taken:
                        return False
        return True

    def split_by_closure(uc: list[int]) -> tuple[list[int], list[int]]:
        """Split unassigned vertices: closed ones have every edge partner
        assigned (each of their edges has one unassigned vertex left), so
        only a distinct-representative choice remains."""
        closed, open_ = [], []
        for v in order:
            if v in assignment:
                continue
            for j in edges_of[v]:
                if uc[j] != 1:
                    open_.append(v)
                    break
            else:
                closed.append(v)
        return closed, open_

    def count_rec(depth: int, used: int, cand: list[int]):
        """Exhaustive branching; used for counting and image collection."""
        if depth == len(order):
            state["total"] += 1
            if collect_images is not None:
                collect_images.add(frozenset(
                    tuple(sorted(assignment[v] for v in e)) for e in pattern.edges
                ))
            return
        p = -1
        p_key = None
        for v in order:
            if v in assignment:
                continue
            key = ((cand[v] & ~used).bit_count(), prio[v])
            if p_key is None or key < p_key:
                p, p_key = v, key
        choices = cand[p] & ~used
        while choices:
            low = choices & -choices
            choices ^= low
            h = low.bit_length() - 1
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded(f"embedding budget of {budget} nodes exceeded")
            assignment[p] = h
            new_cand = list(cand)
            if apply_filters(p, h, used | low, new_cand):
                count_rec(depth + 1, used | low, new_cand)
            del assignment[p]

    def decide_rec(used: int, cand: list[int], uc: list[int]):
        """First-embedding search: branch only on open vertices, settle the
        closed ones by bipartite matching over their unary domains."""
        closed, open_ = split_by_closure(uc)
        if not open_:
            domains = [cand[q] & ~used for q in closed]
            match = _hall_match(domains)
            if match is None:
                return None
            out = dict(assignment)
            for q, h in zip(closed, match):
                out[q] = h
            return out
        p = min(open_, key=lambda v: ((cand[v] & ~used).bit_count(), prio[v]))
        choices = cand[p] & ~used
        new_uc = list(uc)
        for j in edges_of[p]:
            new_uc[j] -= 1
        seen_classes: set[int] = set()
        swap = host.swap_classes
        while choices:
            low = choices & -choices
            choices ^= low
            h = low.bit_length() - 1
            # Interchangeable unused images give isomorphic subtrees.
            cls = swap[h]
            if cls in seen_classes:
                continue
            seen_classes.add(cls)
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded(f"embedding budget of {budget} nodes exceeded")
            assignment[p] = h
            new_cand = list(cand)
            taken = used | low
            if apply_filters(p, h, taken, new_cand):
                now_closed, _ = split_by_closure(new_uc)
                if _hall_match([new_cand[q] & ~taken for q in now_closed]) is not None:
                    result = decide_rec(taken, new_cand, new_uc)
                    if result is not None:
                        return result
            del assignment[p]
        return None

    if order:
        if count_all:
            count_rec(0, 0, base_cand)
            cert_map = None
        else:
            uc0 = [len(e) for e in pattern.edges]
            cert_map = decide_rec(0, base_cand, uc0)
    else:
        cert_map = {}
        state["total"] = 1
        if collect_images is not None:
            collect_images.add(frozenset())

    if count_all:
        covered = len(order)
        mult = 1
        for i in range(iso):
            mult *= host.n - covered - i
        return state["total"] * mult

    if cert_map is None:
        return None
    used_hosts = set(cert_map.values())
    free_hosts = (h for h in range(host.n) if h not in used_hosts)
    for v in range(pattern.n):
        if v not in cert_map:
            cert_map[v] = next(free_hosts)
    return EmbeddingCertificate(vertex_map=cert_map)


def check_embedding(pattern, host, cert: EmbeddingCertificate) -> bool:
    """Re-verify an embedding certificate by direct edge lookups."""
    pattern = ensure_hypergraph(pattern)
    host = ensure_hypergraph(host)
    vm = cert.vertex_map
    if len(vm) != pattern.n or len(set(vm.values())) != len(vm):
        return False
    if any(not 0 <= h < host.n for h in vm.values()):
        return False
    return all(
        tuple(sorted(vm[v] for v in e)) in host.edge_set for e in pattern.edges
    )


def is_free(host, forbidden, budget: int = DEFAULT_BUDGET):
    """Whether the host avoids every forbidden pattern.

    Returns (True, None) when free, else (False, (index, certificate))
    for the first pattern found.
    """
    host = ensure_hypergraph(host)
    for idx, pat in enumerate(forbidden):
        cert = find_embedding(ensure_hypergraph(pat), host, budget=budget)
        if cert is not None:
            return False, (idx, cert)
    return True, None


def describe_patterns(forbidden) -> list[str]:
    out = []
    for pat in forbidden:
        if isinstance(pat, str):
            out.append(pat)
        elif isinstance(pat, Hypergraph):
            out.append(f"<hypergraph r={pat.r} n={pat.n} m={len(pat.edges)}>")
        else:
            out.append(format_pattern(pat))
    return out


def contains_covered_set(h: Hypergraph, t: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether some t-set of vertices has every pair inside an edge.

    Equivalent to a K_t in the co-occurrence graph; decided by a clique
    search there.
    """
    if t <= h.r:
        raise BadParameters(f"covered-set size must exceed r={h.r}, got {t}")
    adj = h.cooc
    state = {"nodes": 0}

    def grow(size: int, cand: int) -> bool:
        if size == t:
            return True
        while cand:
            if size + cand.bit_count() < t:
                return False
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded(f"covered-set budget of {budget} nodes exceeded")
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if grow(size + 1, cand & adj[v]):
                return True
        return False

    return grow(0, (1 << h.n) - 1)


# -- Berge containment -------------------------------------------------------

def contains_berge(host, core, budget: int = DEFAULT_BUDGET):
    """Certificate that the host contains a Berge copy of the core.

    A Berge copy is an injective map of core vertices into host vertices
    together with a system of distinct host edges, one per core edge,
    each containing its core edge's image.  Vertex embeddings are
    enumerated by backtracking; the distinct-edge system is decided by
    maximum bipartite matching.
    """
    host = ensure_hypergraph(host)
    core = ensure_hypergraph(core)
    if core.r > host.r:
        raise BadParameters(f"core uniformity {core.r} exceeds host uniformity {host.r}")
    found = _berge_search(list(host.edge_masks), host.n, core, budget)
    if found is None:
        return None
    vm, em = found
    return EmbeddingCertificate(vertex_map=vm, edge_map=em)


def _berge_search(host_masks: list[int], host_n: int, core: Hypergraph, budget: int):
    """Berge search against host edges given as vertex bitmasks.

    Shared with the extremal oracle, which calls it on raw mask lists to
    avoid rebuilding Hypergraph values inside its DFS.
    """
    m = len(host_masks)
    if len(core.edges) > m or core.n > host_n:
        return None
    host_deg = [0] * host_n
    host_incidence = [0] * host_n
    for j, em in enumerate(host_masks):
        for v in _bits(em):
            host_deg[v] += 1
            host_incidence[v] |= 1 << j
    order = bfs_order(core)
    core_degs = [core.degree(v) for v in range(core.n)]

    def matching(cands: list[int]):
        """Kuhn's algorithm: core edge i -> distinct host edge in cands[i]."""
        match_of_host: dict[int, int] = {}

        def try_augment(i: int, visited: set[int]) -> bool:
            for j in _bits(cands[i]):
                if j in visited:
                    continue
                visited.add(j)
                if j not in match_of_host or try_augment(match_of_host[j], visited):
                    match_of_host[j] = i
                    return True
            return False

        for i in sorted(range(len(cands)), key=lambda i: cands[i].bit_count()):
            if not try_augment(i, set()):
                return None
        return {i: j for j, i in match_of_host.items()}

    assignment: dict[int, int] = {}
    state = {"nodes": 0}

    def finish(vm: dict[int, int]):
        out = dict(vm)
        used_hosts = set(out.values())
        free = (h for h in range(host_n) if h not in used_hosts)
        for v in range(core.n):
            if v not in out:
                out[v] = next(free)
        return out

    def rec(depth: int, used: int, cand_edges: list[int]):
        if depth == len(order):
            em = matching(cand_edges)
            if em is None:
                return None
            return finish(assignment), em
        v = order[depth]
        for h in range(host_n):
            if used >> h & 1 or host_deg[h] < core_degs[v]:
                continue
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded(f"Berge budget of {budget} nodes exceeded")
            new_cands = list(cand_edges)
            ok = True
            for i, e in enumerate(core.edges):
                if v in e:
                    new_cands[i] &= host_incidence[h]
                    if not new_cands[i]:
                        ok = False
                        break
            if ok:
                assignment[v] = h
                result = rec(depth + 1, used | (1 << h), new_cands)
                if result is not None:
                    return result
                del assignment[v]
        return None

    if not order:  # edgeless core: any injective placement works
        return finish({}), {}
    full = (1 << m) - 1
    return rec(0, 0, [full] * len(core.edges))


def check_berge(core, host, cert: EmbeddingCertificate) -> bool:
    """Re-verify a Berge certificate by direct lookups."""
    core = ensure_hypergraph(core)
    host = ensure_hypergraph(host)
    vm, em = cert.vertex_map, cert.edge_map
    if em is None or len(vm) != core.n or len(set(vm.values())) != len(vm):
        return False
    if sorted(em.keys()) != list(range(len(core.edges))):
        return False
    if len(set(em.values())) != len(em):
        return False
    for i, e in enumerate(core.edges):
        if not set(vm[v] for v in e) <= set(host.edges[em[i]]):
            return False
    return True
