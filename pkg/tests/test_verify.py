"""Verification suite plumbing at reduced scales."""

import pytest

from hyperturan import UnknownSuite, run_verify_suite
from hyperturan.verify import _connected_graph_reps, _contains_table


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_verify_suite("nope")


def test_report_shape():
    rep = run_verify_suite("vandermonde", max_t=6)
    assert rep["schema"] == 1 and rep["suite"] == "vandermonde"
    assert rep["ok"] and all({"id", "ok", "detail"} <= set(c) for c in rep["checks"])


def test_coloring_suite_small():
    rep = run_verify_suite("coloring-ineq", max_vertices=4, rs=(3, 4))
    assert rep["ok"]


def test_sandwich_suite_small():
    rep = run_verify_suite("sandwich", ns=(5,))
    assert rep["ok"] and len(rep["checks"]) == 3


def test_formula_suite_small():
    rep = run_verify_suite("formula-vs-count", max_n=8, rs=(3,))
    assert rep["ok"]


def test_constructions_suite_small():
    rep = run_verify_suite("constructions-free", max_n_turan=8, max_n_star=10)
    assert rep["ok"]


def test_oracle_suite_small():
    rep = run_verify_suite("oracle-sweep", ns=(5,))
    assert rep["ok"]


def test_connected_graph_reps_counts():
    # one representative per isomorphism class of connected graphs
    assert [len(_connected_graph_reps(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]


def test_contains_table_small():
    # supports {0,1} and {2}: containment = mask has both low bits or bit 2
    table = _contains_table(3, [0b011, 0b100])
    want = [bool(m & 0b011 == 0b011 or m & 0b100) for m in range(8)]
    assert [bool(x) for x in table] == want
