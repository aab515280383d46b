from __future__ import annotations

import pytest
from hypothesis import given

from conftest import all_cycle_sets, graphs
from satspec.constructions import wheel
from satspec.generate import EnvelopeError
from satspec.graph6 import parse_graph6
from satspec.verify import (_for_all, cycle_vertex_sets, spectrum_formula, three_cycle_spectrum_guess,
                            turan_number, verify_theorems)


@pytest.fixture(scope="module")
def report(cache_dir):
    return verify_theorems(8, (2, 3), cache_dir=cache_dir)


def test_everything_passes_to_eight_vertices(report):
    assert report.passed, [c.to_json() for c in report.failures]


def test_sizes_for_seven_to_eight(report):
    by = {(c.name, c.n): c for c in report.checks}
    for n in (7, 8):
        assert by[("smallest-size", n)].passed and by[("dense-parity", n)].passed
        assert by[("dense-base-is-three-star", n)].passed


def test_each_statement_is_reported(report):
    names = {c.name for c in report.checks}
    assert {"largest-size", "smallest-size", "size-spectrum", "unique-smallest-is-wheel",
            "one-nontrivial-block", "nonedge-path-avoids-cycle", "cycle-complement-forest",
            "common-vertex-structure", "dense-parity", "dense-base-is-three-star",
            "dense-good-min-degree-3", "base-saturated-or-k5", "wheel-base-forces-wheel",
            "constructions-cover-spectrum", "min-degree-3-has-k4-subdivision",
            "block-star-smallest", "generalised-wheel", "complete-join-spider"} <= names


def test_json_shape(report):
    data = report.to_json()
    assert data["passed"] is True and data["k_set"] == [2, 3]
    assert all(set(c) == {"name", "n", "k", "passed", "detail", "counterexample"} for c in data["checks"])


def test_failures_carry_graph6():
    check = _for_all("always-fails", 6, 2, [wheel(6)], lambda g: False, "demo")
    assert not check.passed and parse_graph6(check.counterexample) == wheel(6)


def test_formulas():
    assert spectrum_formula(6) == [10, 11, 12]
    assert spectrum_formula(9) == [14, 15, 16, 17, 19, 21]
    assert all(turan_number(n, 2) == 3 * n - 6 for n in range(6, 30))
    assert turan_number(9, 3) == 30
    g = three_cycle_spectrum_guess(14)
    assert min(g) == 25 and max(g) == turan_number(14, 3) == 55
    assert {32, 34} & set(g) == set() and {33, 35, 36, 37} <= set(g)


@given(graphs(max_n=8))
def test_cycle_vertex_sets_match_networkx(g):
    assert sorted(cycle_vertex_sets(g)) == sorted(sum(1 << v for v in c) for c in all_cycle_sets(g))


@pytest.mark.parametrize("n_max, ks", [(11, (2,)), (0, (2,)), (8, (4,)), (8, ())])
def test_envelope(n_max, ks):
    with pytest.raises(EnvelopeError):
        verify_theorems(n_max, ks, use_cache=False)
