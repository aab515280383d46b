from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from conftest import from_nx
from satspec.canon import canonical_form
from satspec.generate import EnvelopeError, enumerate_nonisomorphic
from satspec.graph import SimpleGraph

KNOWN = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


@pytest.mark.parametrize("n", range(len(KNOWN)))
def test_counts(n):
    assert sum(1 for _ in enumerate_nonisomorphic(n)) == KNOWN[n]


@pytest.mark.parametrize("n", range(0, 7))
def test_matches_all_labelled_graphs_deduplicated(n):
    pairs = list(combinations(range(n), 2))
    naive = set()
    for bits in range(1 << len(pairs)):
        g = SimpleGraph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        naive.add(canonical_form(g))
    assert {canonical_form(g) for g in enumerate_nonisomorphic(n)} == naive


def test_seven_vertices_match_graph_atlas():
    atlas = {canonical_form(from_nx(h)) for h in nx.graph_atlas_g() if h.number_of_nodes() == 7}
    ours = [canonical_form(g) for g in enumerate_nonisomorphic(7)]
    assert len(ours) == len(set(ours)) == 1044
    assert set(ours) == atlas


def test_seven_vertices_match_one_vertex_extensions():
    naive = set()
    for g in enumerate_nonisomorphic(6):
        for s in range(1 << 6):
            naive.add(canonical_form(g.add_vertex([v for v in range(6) if s >> v & 1])))
    assert {canonical_form(g) for g in enumerate_nonisomorphic(7)} == naive


def test_order_is_deterministic():
    assert list(enumerate_nonisomorphic(6)) == list(enumerate_nonisomorphic(6))


@pytest.mark.parametrize("n", [-1, 11])
def test_envelope(n):
    with pytest.raises(EnvelopeError):
        list(enumerate_nonisomorphic(n))
