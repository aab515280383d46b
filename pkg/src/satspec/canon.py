"""Canonical labelling and automorphism groups of small graphs.

The search is a plain individualisation-refinement tree: an equitable
ordered partition is refined from the degree partition, the first
non-singleton cell is split by individualising each of its vertices in
turn, and every discrete leaf yields a relabelled adjacency string.  The
canonical form is the smallest such string.  Leaves that reproduce the
first leaf's string give automorphisms, which prune sibling subtrees in the
same orbit.  With only automorphism pruning the generators found generate
the full automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import SimpleGraph, iter_bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    def graph(self) -> SimpleGraph:
        rows = [0] * self.n
        total = self.n * (self.n - 1) // 2
        pos = total - 1
        for j in range(1, self.n):
            for i in range(j):
                if self.bits >> pos & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos -= 1
        return SimpleGraph(self.n, tuple(rows))


@dataclass(frozen=True)
class Labelling:
    """Result of one canonical search.

    ``lab[p]`` is the vertex placed at position ``p``; ``generators`` are
    automorphisms as image tuples; ``orbits[v]`` is the least vertex in the
    orbit of ``v``.
    """

    cert: int
    lab: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]


def refine(rows: Sequence[int], cells: list[int], splitters: list[int]) -> list[int]:
    """Refine an ordered partition (list of vertex masks) to an equitable one."""
    stack = list(splitters)
    while stack:
        w = stack.pop()
        out = []
        for c in cells:
            if not c & (c - 1):
                out.append(c)
                continue
            groups: dict[int, int] = {}
            x = c
            while x:
                low = x & -x
                k = (rows[low.bit_length() - 1] & w).bit_count()
                groups[k] = groups.get(k, 0) | low
                x ^= low
            if len(groups) == 1:
                out.append(c)
            else:
                pieces = [groups[k] for k in sorted(groups)]
                out.extend(pieces)
                stack.extend(pieces)
        cells = out
    return cells


def _cert(rows: Sequence[int], lab: Sequence[int]) -> int:
    n = len(lab)
    bits = 0
    for j in range(1, n):
        r = rows[lab[j]]
        for i in range(j):
            bits = bits << 1 | (r >> lab[i] & 1)
    return bits


def _orbit_roots(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def search(rows: Sequence[int], n: int) -> Labelling:
    """Canonical labelling, automorphism generators and vertex orbits."""
    if n == 0:
        return Labelling(0, (), (), ())
    full = (1 << n) - 1
    root = refine(rows, [full], [full])
    first_lab: list[int] | None = None
    first_cert = -1
    best_lab: list[int] = []
    best_cert = -1
    gens: list[tuple[int, ...]] = []

    def visit(cells: list[int], prefix: list[int]) -> None:
        nonlocal first_lab, first_cert, best_lab, best_cert
        target = -1
        for idx, c in enumerate(cells):
            if c & (c - 1):
                target = idx
                break
        if target < 0:
            lab = [c.bit_length() - 1 for c in cells]
            cert = _cert(rows, lab)
            if first_lab is None:
                first_lab, first_cert = lab, cert
                best_lab, best_cert = lab, cert
                return
            if cert == first_cert:
                gens.append(_perm_between(first_lab, lab))
            elif cert == best_cert:
                gens.append(_perm_between(best_lab, lab))
            if cert < best_cert:
                best_lab, best_cert = lab, cert
            return
        cell = cells[target]
        explored: list[int] = []
        seen_gens = -1
        roots: list[int] = []
        for v in iter_bits(cell):
            if explored:
                if len(gens) != seen_gens:
                    seen_gens = len(gens)
                    fixing = [g for g in gens if all(g[p] == p for p in prefix)]
                    roots = _orbit_roots(n, fixing) if fixing else list(range(n))
                rv = roots[v]
                if any(roots[u] == rv for u in explored):
                    continue
            bit = 1 << v
            child = cells[:target] + [bit, cell ^ bit] + cells[target + 1:]
            visit(refine(rows, child, [bit]), prefix + [v])
            explored.append(v)

    visit(root, [])
    assert first_lab is not None
    orbits = _orbit_roots(n, gens)
    return Labelling(best_cert, tuple(best_lab), tuple(gens), tuple(orbits))


def _perm_between(lab_a: Sequence[int], lab_b: Sequence[int]) -> tuple[int, ...]:
    perm = [0] * len(lab_a)
    for a, b in zip(lab_a, lab_b):
        perm[a] = b
    return tuple(perm)


def canonical_form(g: SimpleGraph) -> CanonicalForm:
    return CanonicalForm(g.n, search(g.rows, g.n).cert)


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    """The canonical representative of ``g``'s isomorphism class."""
    return canonical_form(g).graph()


def automorphism_generators(g: SimpleGraph) -> tuple[tuple[int, ...], ...]:
    return search(g.rows, g.n).generators


def vertex_orbits(g: SimpleGraph) -> tuple[int, ...]:
    return search(g.rows, g.n).orbits


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
