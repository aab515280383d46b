from __future__ import annotations

import random
import sys
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from satspec.constructions import (complete, gen_wheel, star, wheel, wheel_plus)
from satspec.graph import SimpleGraph


settings.register_profile("default", deadline=None)
settings.load_profile("default")


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> SimpleGraph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return SimpleGraph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> SimpleGraph:
    p = rng.random() if p is None else p
    return SimpleGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def shuffled(g: SimpleGraph, rng: random.Random) -> SimpleGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> SimpleGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


FIXTURES = {
    "K1": complete(1),
    "K3": complete(3),
    "K5": complete(5),
    "C5": cycle(5),
    "C8": cycle(8),
    "P4": path(4),
    "W6": wheel(6),
    "W8": wheel(8),
    "W6+1": wheel_plus(6, 1),
    "W6+3": wheel_plus(6, 3),
    "S6,3": star(6, 3),
    "S9,3": star(9, 3),
    "GW8,2": gen_wheel(8, 2),
    "Petersen": None,
    "K3,3": None,
}
FIXTURES["Petersen"] = SimpleGraph.from_edges(10, nx.petersen_graph().edges)
FIXTURES["K3,3"] = SimpleGraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """One spectrum cache shared by every test in the session."""
    return tmp_path_factory.mktemp("satspec-cache")


# independent oracles ----------------------------------------------------------


def all_cycle_sets(g: SimpleGraph) -> list[frozenset[int]]:
    """Vertex sets of every simple cycle, via networkx."""
    return list({frozenset(c) for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3})


def naive_max_packing(g: SimpleGraph, banned: frozenset[int] = frozenset()) -> int:
    sets = sorted((c for c in all_cycle_sets(g) if not c & banned), key=sorted)

    def best(start: int, used: frozenset[int]) -> int:
        top = 0
        for i in range(start, len(sets)):
            if not sets[i] & used:
                top = max(top, 1 + best(i + 1, used | sets[i]))
        return top

    return best(0, frozenset())


def naive_has_k4_subdivision(g: SimpleGraph) -> bool:
    """A graph avoids K4 subdivisions iff deleting vertices of degree <= 1 and
    suppressing degree-2 vertices (merging parallel edges) empties it."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if len(adj[v]) <= 1:
                for u in adj.pop(v):
                    adj[u].discard(v)
                changed = True
            elif len(adj[v]) == 2:
                a, b = adj.pop(v)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    return bool(adj)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
