from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from conftest import from_nx, graphs, to_nx
from satspec.graph import SimpleGraph
from satspec.graph6 import Graph6Error, emit_graph6, parse_graph6


def test_triangle():
    g = parse_graph6("Bw")
    assert g.n == 3 and g.is_complete()


def test_single_vertex():
    assert emit_graph6(SimpleGraph.empty(1)) == "@"


def test_empty_graph_on_zero_vertices():
    assert emit_graph6(SimpleGraph.empty(0)) == "?"
    assert parse_graph6("?").n == 0


def test_trailing_newline_accepted():
    assert parse_graph6("Bw\n") == parse_graph6("Bw")


@given(graphs(max_n=20))
def test_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_n=20))
def test_agrees_with_networkx(g):
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert from_nx(nx.from_graph6_bytes(ours.encode())) == g


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("B w", 1),
    ("Bwx", 2),          # too long
    ("C", 1),            # too short
    ("Bx", 1),           # padding bit set
    ("~??~", 0),         # multi-byte size field
    ("B\x7f", 1),
])
def test_malformed_lines_report_position(text, position):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.position == position
