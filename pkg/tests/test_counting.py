"""Clique counting, pattern copies, and the formula evaluators."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperturan import (
    BadParameters,
    FormulaResult,
    Hypergraph,
    UniformityMismatch,
    binom,
    clique_hypergraph,
    complete_hypergraph,
    count_cliques,
    count_cliques_at_vertex,
    count_pattern_copies,
    empty_hypergraph,
    formula_appendix_exact,
    formula_complete_expansion,
    formula_emc,
    formula_linear_forest_leading,
    formula_path_single,
    formula_star_forest,
    formula_union_complete,
    realize,
    star_like,
    star_like_clique_count,
    star_turan,
    turan_hypergraph,
    two_in_A,
    two_in_a_clique_count,
)
from hyperturan.expansion import parse_pattern

from helpers import naive_count_cliques, random_hypergraph


def test_binom_conventions():
    assert binom(3, 5) == 0
    assert binom(0, 0) == 1
    assert binom(6, 3) == 20
    with pytest.raises(BadParameters):
        binom(-1, 2)


def test_count_cliques_examples():
    assert count_cliques(complete_hypergraph(3, 5), 4) == 5
    assert count_cliques(turan_hypergraph(6, 3, 3), 3) == 8
    # 4-sets of star_like(6,2,3) qualify iff they hold both core vertices
    assert count_cliques(star_like(6, 2, 3), 4) == 6
    assert count_cliques(star_like(6, 2, 3), 4) == naive_count_cliques(star_like(6, 2, 3), 4)


def test_count_cliques_below_uniformity():
    h = empty_hypergraph(3, 7)
    assert count_cliques(h, 2) == 21
    assert count_cliques(h, 0) == 1
    assert count_cliques(complete_hypergraph(3, 6), 1) == 6


def test_count_cliques_matches_naive():
    rng = random.Random(3)
    for _ in range(30):
        h = random_hypergraph(rng, rng.choice([2, 3]), rng.randint(3, 8))
        for s in range(h.r, min(h.n, h.r + 3) + 1):
            assert count_cliques(h, s) == naive_count_cliques(h, s)


def test_count_cliques_at_vertex():
    assert count_cliques_at_vertex(complete_hypergraph(3, 5), 4, 0) == 4
    assert count_cliques_at_vertex(turan_hypergraph(6, 3, 3), 3, 0) == 4
    assert count_cliques_at_vertex(empty_hypergraph(3, 6), 3, 0) == 0


def test_handshake():
    rng = random.Random(9)
    for _ in range(15):
        h = random_hypergraph(rng, 3, rng.randint(4, 8))
        for s in (3, 4):
            total = count_cliques(h, s)
            assert sum(count_cliques_at_vertex(h, s, v) for v in range(h.n)) == s * total


def test_clique_hypergraph():
    assert clique_hypergraph(complete_hypergraph(3, 5), 4) == complete_hypergraph(4, 5)
    t = turan_hypergraph(6, 3, 3)
    assert clique_hypergraph(t, 3).edges == t.edges
    p2 = realize(parse_pattern("expand3(path:2)"))
    assert clique_hypergraph(p2, 3).edges == p2.edges
    with pytest.raises(BadParameters):
        clique_hypergraph(t, 2)


def test_count_pattern_copies():
    host = star_like(7, 2, 3)
    single = Hypergraph(3, 3, ((0, 1, 2),))
    assert count_pattern_copies(single, host) == len(host.edges)
    assert count_pattern_copies("expand3(matching:2)", complete_hypergraph(3, 6)) == 10
    assert count_pattern_copies("expand3(path:2)", complete_hypergraph(3, 4)) == 0
    with pytest.raises(UniformityMismatch):
        count_pattern_copies("path:2", host)


# -- formulas ------------------------------------------------------------------

def test_formula_result_exactly_one_side():
    with pytest.raises(BadParameters):
        FormulaResult("x", {}, value=1, leading_coefficient=Fraction(1), exponent=2)
    with pytest.raises(BadParameters):
        FormulaResult("x", {})


def test_formula_complete_expansion():
    assert formula_complete_expansion(7, 3, 3, 3).value == 12
    assert formula_complete_expansion(8, 3, 3, 4).value == 32
    assert formula_complete_expansion(6, 3, 4, 4).value == 4
    for n, r, s, ell in [(7, 3, 3, 3), (8, 3, 3, 4), (6, 3, 4, 4), (9, 3, 4, 5)]:
        assert formula_complete_expansion(n, r, s, ell).value == count_cliques(
            turan_hypergraph(n, ell, r), s)
    with pytest.raises(BadParameters):
        formula_complete_expansion(7, 3, 4, 3)  # s may not exceed ell


def test_formula_union_complete():
    assert formula_union_complete(8, 3, 3, 3, 1).value == \
        formula_complete_expansion(8, 3, 3, 3).value
    assert formula_union_complete(8, 3, 3, 3, 2).value == 33
    assert formula_union_complete(9, 3, 3, 3, 2).value == 46
    for n, k in [(8, 2), (9, 2), (10, 3)]:
        got = formula_union_complete(n, 3, 3, 3, k).value
        assert got == count_cliques(star_turan(n, k - 1, 3, 3), 3)


def test_formula_star_forest():
    # at s = r the prefix telescopes to a difference of binomials
    res = formula_star_forest(8, 3, 3, 2, max_term=0)
    assert res.value == binom(8, 3) - binom(7, 3)
    assert formula_star_forest(8, 3, 3, 2, max_term=5).value == 21 + 5
    with pytest.raises(BadParameters):
        formula_star_forest(8, 3, 5, 2, max_term=0)  # s > k + r - 2


def test_formula_linear_forest_leading():
    res = formula_linear_forest_leading(3, 3, [5], 0)
    assert (res.leading_coefficient, res.exponent) == (Fraction(1), 2)
    res = formula_linear_forest_leading(3, 4, [5, 5], 0)
    assert (res.leading_coefficient, res.exponent) == (Fraction(5), 2)
    res = formula_linear_forest_leading(3, 6, [5], 1)
    assert res.leading_coefficient == 0 and res.exponent == 2
    assert formula_linear_forest_leading(3, 3, [4], 0, paths_only=True).exponent == 2
    with pytest.raises(BadParameters):
        formula_linear_forest_leading(3, 3, [4], 0)


def test_formula_appendix_exact():
    assert formula_appendix_exact(20, 3, [5, 5]).value == 685
    assert formula_appendix_exact(20, 3, [6]).value == 340
    with pytest.raises(BadParameters):
        formula_appendix_exact(20, 3, [4])


def test_formula_path_single():
    assert formula_path_single(20, 3, 5, "path").value == 324
    assert formula_path_single(20, 3, 6, "path").value == 340
    assert formula_path_single(9, 3, 4, "cycle").value == 36
    with pytest.raises(BadParameters):
        formula_path_single(20, 3, 3, "cycle")


def test_formula_emc():
    assert formula_emc(5, 3, 1).value == 10
    assert formula_emc(9, 3, 2).value == 56
    assert formula_emc(30, 3, 2).value == 784


def test_appendix_matches_construction_edges():
    from hyperturan.constructions import path_cycle_lower
    for n in (10, 12, 14):
        for ells in ([5], [6], [3, 3]):
            want = formula_appendix_exact(n, 3, ells).value
            assert len(path_cycle_lower(n, 3, ells).edges) == want


def test_closed_form_clique_counts():
    for n, t, s in [(8, 2, 3), (8, 2, 4), (9, 3, 4), (10, 5, 5)]:
        assert star_like_clique_count(n, t, 3, s) == count_cliques(star_like(n, t, 3), s)
    for n, a, s in [(8, 3, 3), (8, 3, 4), (9, 4, 4)]:
        assert two_in_a_clique_count(n, a, 3, s) == count_cliques(two_in_A(n, a, 3), s)


def test_star_like_ratio_monotone():
    # the normalized count climbs toward its limit through the sweep
    for t, s in [(2, 3), (2, 4), (5, 4)]:
        ratios = [
            count_cliques(star_like(n, t, 3), s) * 2 / n**2 for n in (20, 40, 80)
        ]
        assert ratios[0] < ratios[1] < ratios[2] <= binom(t, s - 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 10), st.data())
def test_count_cliques_upper_bounded_by_subsets(n, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    h = random_hypergraph(rng, 3, n)
    s = data.draw(st.integers(3, 5))
    assert 0 <= count_cliques(h, s) <= binom(n, s)


def test_counting_performance_contract():
    import time

    h = star_like(64, 5, 3)
    start = time.perf_counter()
    got = count_cliques(h, 6)
    elapsed = time.perf_counter() - start
    assert got == star_like_clique_count(64, 5, 3, 6)
    assert elapsed < 1.0


def test_clique_hypergraph_preserves_freeness_small_corpus():
    # pattern-free 3-graphs keep their 4-clique hypergraphs free of the
    # matching 4-uniform pattern; greedily grown hosts plus constructions
    import itertools

    from hyperturan import is_free

    rng = random.Random(71)
    corpus = [
        turan_hypergraph(7, 3, 3),
        star_like(7, 2, 3),
        two_in_A(7, 3, 3),
        complete_hypergraph(3, 4),
    ]
    for fspec in ("complete:3", "complete:4", "path:2"):
        pat3 = f"expand3({fspec})"
        pat4 = f"expand4({fspec})"
        hosts = list(corpus)
        for _ in range(8):
            pool = list(itertools.combinations(range(7), 3))
            rng.shuffle(pool)
            edges: list = []
            for e in pool:
                cand = Hypergraph(3, 7, tuple(edges) + (e,))
                if is_free(cand, [pat3])[0]:
                    edges.append(e)
            hosts.append(Hypergraph(3, 7, tuple(edges)))
        for h in hosts:
            if not is_free(h, [pat3])[0]:
                continue
            assert is_free(clique_hypergraph(h, 4), [pat4])[0]


def test_count_cliques_at_vertex_matches_naive():
    import itertools

    rng = random.Random(77)
    for _ in range(15):
        h = random_hypergraph(rng, rng.choice([2, 3]), rng.randint(3, 7))
        s = h.r + rng.randint(0, 2)
        es = h.edge_set
        for v in range(h.n):
            want = sum(
                1 for subset in itertools.combinations(range(h.n), s)
                if v in subset and all(
                    sub in es for sub in itertools.combinations(subset, h.r))
            )
            assert count_cliques_at_vertex(h, s, v) == want


def test_star_forest_construction_decomposition():
    # planting a universal core over any inner graph splits the count
    # into the binomial prefix plus the inner clique count
    from hyperturan import add_universal_core

    inner = two_in_A(11, 2, 3)
    outer = add_universal_core(inner, 1)
    prefix = sum(binom(1, 3 - i) * binom(11, i) for i in range(3))
    assert count_cliques(outer, 3) == prefix + count_cliques(inner, 3)
