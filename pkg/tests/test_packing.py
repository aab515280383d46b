from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import (FIXTURES, cycle, graphs, naive_has_k4_subdivision, naive_max_packing,
                      random_graph, to_nx)
from satspec.constructions import complete, star, wheel, wheel_plus
from satspec.generate import enumerate_nonisomorphic
from satspec.graph import SimpleGraph
from satspec.packing import (CyclePacking, K4Subdivision, contains_k4_subdivision,
                             has_k_disjoint_cycles, is_cycle_in, max_disjoint_cycles,
                             path_with_residual_packing, validate_k4_subdivision,
                             validate_packing)


def test_tree_has_no_cycles():
    tree = SimpleGraph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])
    assert max_disjoint_cycles(tree) == (0, CyclePacking(()))


@pytest.mark.parametrize("r, expected", [(5, 1), (6, 2), (8, 2), (9, 3), (11, 3), (12, 4)])
def test_complete_graphs(r, expected):
    count, packing = max_disjoint_cycles(complete(r))
    assert count == expected and validate_packing(complete(r), packing)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", [9, 11])
def test_stars_hold_one_fewer_than_k(n, k):
    assert max_disjoint_cycles(star(n, 2 * k - 1))[0] == k - 1


def test_two_triangles():
    g = cycle(3).union(cycle(3))
    p = has_k_disjoint_cycles(g, 2)
    assert p is not None and validate_packing(g, p) and len(p) == 2


def test_wheel_has_no_two_disjoint_cycles():
    assert has_k_disjoint_cycles(wheel(6), 2) is None


@pytest.mark.parametrize("u, v", [(3, 4), (3, 5), (4, 5)])
def test_star_plus_edge_between_independent_vertices(u, v):
    g = star(6, 3).add_edge(u, v)
    p = has_k_disjoint_cycles(g, 2)
    assert p is not None and validate_packing(g, p)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        has_k_disjoint_cycles(cycle(3), 0)


def _check_path_result(g, u, v, c, found):
    assert found is not None
    path, packing = found
    assert path[0] == u and path[-1] == v and len(set(path)) == len(path)
    assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
    assert not set(path) & packing.vertices()
    assert len(packing) == c and validate_packing(g, packing)


@pytest.mark.parametrize("v", range(5))
def test_path_in_k5(v):
    g = complete(5)
    _check_path_result(g, 0, v, 1, path_with_residual_packing(g, 0, v, 1))


@pytest.mark.parametrize("n", [7, 9])
def test_path_in_three_star_from_independent_vertex(n):
    g = star(n, 3)
    for v in range(n):
        _check_path_result(g, n - 1, v, 1, path_with_residual_packing(g, n - 1, v, 1))


def test_path_in_wheel_plus_from_path_vertex():
    g = wheel_plus(6, 1)
    for v in range(g.n):
        _check_path_result(g, 6, v, 1, path_with_residual_packing(g, 6, v, 1))


def test_single_vertex_path():
    g = cycle(3).union(cycle(3))
    found = path_with_residual_packing(g, 0, 0, 1)
    assert found is not None and found[0] == (0,)


def _naive_path_packing(g, u, v, c):
    h = to_nx(g)
    paths = [[u]] if u == v else nx.all_simple_paths(h, u, v)
    return any(naive_max_packing(g, frozenset(p)) >= c for p in paths)


@settings(max_examples=200)
@given(graphs(min_n=1, max_n=8))
def test_path_search_matches_brute_force(g):
    rng = random.Random(g.triangle_bits())
    u, v = rng.randrange(g.n), rng.randrange(g.n)
    for c in (0, 1, 2):
        found = path_with_residual_packing(g, u, v, c)
        assert (found is not None) == _naive_path_packing(g, u, v, c)
        if found is not None:
            _check_path_result(g, u, v, c, found)


def test_k4_is_its_own_subdivision():
    sub = contains_k4_subdivision(complete(4))
    assert sub is not None and sorted(sub.branch_vertices) == [0, 1, 2, 3]
    assert validate_k4_subdivision(complete(4), sub)


def test_long_cycle_has_no_k4():
    assert contains_k4_subdivision(cycle(8)) is None


@pytest.mark.parametrize("n", range(4, 8))
def test_min_degree_three_graphs_contain_k4(n):
    for g in enumerate_nonisomorphic(n):
        if g.min_degree() >= 3:
            sub = contains_k4_subdivision(g)
            assert sub is not None and validate_k4_subdivision(g, sub)


@settings(max_examples=300)
@given(graphs(max_n=10))
def test_k4_search_matches_series_parallel_oracle(g):
    sub = contains_k4_subdivision(g)
    assert (sub is not None) == naive_has_k4_subdivision(g)
    if sub is not None:
        assert validate_k4_subdivision(g, sub)


def test_certificate_validators_reject_bad_certificates():
    g = wheel(6)
    assert not validate_packing(g, CyclePacking(((0, 1, 2), (0, 3, 4))))   # shares 0
    assert not validate_packing(g, CyclePacking(((1, 3, 4),)))              # 1-3 missing
    assert not is_cycle_in(g, (0, 1))
    sub = contains_k4_subdivision(g)
    broken = K4Subdivision(sub.branch_vertices, sub.paths[:-1] + (sub.paths[0],))
    assert not validate_k4_subdivision(g, broken)


@pytest.mark.parametrize("n", range(0, 7))
def test_max_packing_matches_naive_oracle(n):
    for g in enumerate_nonisomorphic(n):
        count, packing = max_disjoint_cycles(g)
        assert count == naive_max_packing(g)
        assert validate_packing(g, packing) and len(packing) == count


@settings(max_examples=200)
@given(graphs(max_n=11))
def test_adding_an_edge_never_lowers_the_maximum(g):
    count = max_disjoint_cycles(g)[0]
    for u, v in g.non_edges()[:6]:
        assert max_disjoint_cycles(g.add_edge(u, v))[0] >= count


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_certificates(name):
    g = FIXTURES[name]
    count, packing = max_disjoint_cycles(g)
    assert validate_packing(g, packing) and len(packing) == count
    assert count == naive_max_packing(g)


def test_random_medium_graphs_against_oracle():
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(8, 10), rng.uniform(0.15, 0.4))
        assert max_disjoint_cycles(g)[0] == naive_max_packing(g)
