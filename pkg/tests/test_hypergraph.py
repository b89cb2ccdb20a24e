"""Core hypergraph representation and elementary operations."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperturan import (
    DuplicateEdge,
    EdgeWrongSize,
    Hypergraph,
    UniformityMismatch,
    UniformityUnderflow,
    VertexOutOfRange,
    canonical_form,
    complete_hypergraph,
    deletion_map,
    disjoint_union,
    empty_hypergraph,
    new_hypergraph,
    parse_hg,
    to_hg,
)
from hyperturan.constructions import star_like, turan_hypergraph
from hyperturan.hypergraph import relabel


def test_new_complete_k4():
    h = new_hypergraph(3, 4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    assert len(h.edges) == 4
    assert h == complete_hypergraph(3, 4)


def test_new_empty():
    h = new_hypergraph(3, 5, [])
    assert h.n == 5 and len(h.edges) == 0


def test_repeated_vertex_rejected():
    with pytest.raises(EdgeWrongSize):
        new_hypergraph(3, 3, [[0, 1, 1]])


def test_wrong_size_rejected():
    with pytest.raises(EdgeWrongSize):
        new_hypergraph(3, 4, [[0, 1]])


def test_out_of_range_rejected():
    with pytest.raises(VertexOutOfRange):
        new_hypergraph(3, 3, [[0, 1, 3]])


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdge):
        new_hypergraph(3, 4, [[0, 1, 2], [2, 1, 0]])


def test_canonical_ordering():
    a = new_hypergraph(3, 5, [[2, 3, 4], [0, 1, 2]])
    b = new_hypergraph(3, 5, [[0, 2, 1], [4, 3, 2]])
    assert a == b
    assert a.edges == ((0, 1, 2), (2, 3, 4))


def test_incidence_matches_edges():
    h = new_hypergraph(3, 5, [[0, 1, 2], [0, 3, 4], [1, 3, 4]])
    for v in range(5):
        member = {j for j, e in enumerate(h.edges) if v in e}
        assert h.incidence[v] == sum(1 << j for j in member)
        assert h.degree(v) == len(member)


def test_link_of_complete():
    # stripping vertex 0 from every edge through it leaves a triangle
    h = complete_hypergraph(3, 4)
    link = h.link(0)
    assert link.r == 2 and link.n == 4
    assert link.edges == ((1, 2), (1, 3), (2, 3))


def test_link_empty():
    assert empty_hypergraph(3, 5).link(2).edges == ()


def test_link_star_core():
    # derived by enumerating triples through 0 and stripping 0
    h = star_like(6, 1, 3)
    link = h.link(0)
    assert len(link.edges) == 10
    assert link.edges == tuple(itertools.combinations(range(1, 6), 2))


def test_link_underflow():
    one = Hypergraph(1, 3, ((0,), (1,)))
    with pytest.raises(UniformityUnderflow):
        one.link(0)


def test_degree_examples():
    assert complete_hypergraph(3, 4).degree(0) == 3
    assert empty_hypergraph(3, 4).degree(0) == 0
    # triples through vertex 3 that meet the 1-core {0}: enumerated -> 4
    assert star_like(6, 1, 3).degree(3) == 4


def test_delete_vertices():
    assert complete_hypergraph(3, 5).delete_vertices({4}) == complete_hypergraph(3, 4)
    h = star_like(6, 2, 3)
    assert h.delete_vertices(set()) == h
    assert h.delete_vertices({0, 1}) == empty_hypergraph(3, 4)


def test_deletion_map_is_order_preserving():
    m = deletion_map(6, {1, 4})
    assert m == {0: 0, 2: 1, 3: 2, 5: 3}


def test_induced():
    assert complete_hypergraph(3, 5).induced({0, 2, 3, 4}) == complete_hypergraph(3, 4)
    assert star_like(6, 2, 3).induced({3, 4}) == empty_hypergraph(3, 2)
    # parts {0,1},{2,3},{4,5}: transversal triples inside {0,1,2,4}
    ind = turan_hypergraph(6, 3, 3).induced({0, 1, 2, 4})
    assert len(ind.edges) == 2


def test_disjoint_union():
    e1 = Hypergraph(3, 3, ((0, 1, 2),))
    u = disjoint_union(e1, e1)
    assert u.n == 6 and u.edges == ((0, 1, 2), (3, 4, 5))
    h = star_like(5, 1, 3)
    assert disjoint_union(h, empty_hypergraph(3, 0)) == h
    with pytest.raises(UniformityMismatch):
        disjoint_union(e1, Hypergraph(2, 2, ((0, 1),)))


def test_hg_round_trip_examples():
    h = turan_hypergraph(7, 3, 3)
    assert parse_hg(to_hg(h)) == h


def test_hg_comments_and_unsorted_edges():
    text = "# hello\n3 5  # header\n2 1 0\n0 3 4\n"
    h = parse_hg(text)
    assert h.edges == ((0, 1, 2), (0, 3, 4))


def test_canonical_form_detects_isomorphs():
    a = Hypergraph(3, 5, ((0, 1, 2), (0, 3, 4)))
    perm = [3, 0, 4, 2, 1]
    b = relabel(a, perm)
    assert canonical_form(a) == canonical_form(b)
    c = Hypergraph(3, 5, ((0, 1, 2), (1, 3, 4)))  # same sizes, same shape
    assert canonical_form(a) == canonical_form(c)
    d = Hypergraph(3, 5, ((0, 1, 2), (2, 3, 4), (0, 3, 4)))
    assert canonical_form(a) != canonical_form(d)


@st.composite
def small_hypergraphs(draw):
    r = draw(st.integers(2, 3))
    n = draw(st.integers(r, 7))
    universe = list(itertools.combinations(range(n), r))
    edges = draw(st.lists(st.sampled_from(universe), unique=True, max_size=12))
    return Hypergraph(r, n, tuple(edges))


@settings(max_examples=60, deadline=None)
@given(small_hypergraphs())
def test_serialize_round_trip(h):
    assert parse_hg(to_hg(h)) == h


@settings(max_examples=60, deadline=None)
@given(small_hypergraphs(), st.data())
def test_link_degree_consistency(h, data):
    if h.n == 0 or h.r == 1:
        return
    v = data.draw(st.integers(0, h.n - 1))
    assert len(h.link(v).edges) == h.degree(v)


@settings(max_examples=60, deadline=None)
@given(small_hypergraphs(), st.data())
def test_deletion_induction_duality(h, data):
    subset = data.draw(st.sets(st.integers(0, max(h.n - 1, 0)), max_size=h.n))
    subset = {v for v in subset if v < h.n}
    assert h.delete_vertices(subset) == h.induced(set(range(h.n)) - subset)


@settings(max_examples=60, deadline=None)
@given(small_hypergraphs(), small_hypergraphs())
def test_union_preserves_counts_and_degrees(h1, h2):
    if h1.r != h2.r:
        return
    u = disjoint_union(h1, h2)
    assert len(u.edges) == len(h1.edges) + len(h2.edges)
    for v in range(h1.n):
        assert u.degree(v) == h1.degree(v)
    for v in range(h2.n):
        assert u.degree(h1.n + v) == h2.degree(v)


def test_union_of_two_expansions():
    from hyperturan.expansion import parse_pattern, realize

    p2 = realize(parse_pattern("expand3(path:2)"))
    s2 = realize(parse_pattern("expand3(star:2)"))
    u = disjoint_union(p2, s2)
    assert u.n == 10 and len(u.edges) == 4
