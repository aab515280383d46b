"""Vertex-disjoint cycle packings, residual-path search and K4 subdivisions.

All searches work on a host adjacency (tuple of neighbour masks) restricted
to a vertex mask, so subgraphs ``G - U`` are never materialised.  Branching
is on chordless cycles through a minimum-degree pivot of the 2-core: any
cycle through the pivot contains a chordless one through the pivot on a
subset of its vertices, so optima are unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import SimpleGraph, iter_bits

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class CyclePacking:
    cycles: tuple[Cycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def vertices(self) -> set[int]:
        return {v for c in self.cycles for v in c}

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cycles]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "CyclePacking":
        return cls(tuple(tuple(c) for c in data))


@dataclass(frozen=True)
class K4Subdivision:
    branch_vertices: tuple[int, int, int, int]
    paths: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"branch_vertices": list(self.branch_vertices), "paths": [list(p) for p in self.paths]}


# certificate checks ---------------------------------------------------------


def is_cycle_in(g: SimpleGraph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    return all(g.has_edge(cycle[i - 1], cycle[i]) for i in range(len(cycle)))


def is_path_in(g: SimpleGraph, path: Sequence[int]) -> bool:
    if not path or len(set(path)) != len(path) or any(not 0 <= v < g.n for v in path):
        return False
    return all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def validate_packing(g: SimpleGraph, packing: CyclePacking) -> bool:
    seen: set[int] = set()
    for c in packing.cycles:
        if not is_cycle_in(g, c) or seen.intersection(c):
            return False
        seen.update(c)
    return True


def validate_k4_subdivision(g: SimpleGraph, sub: K4Subdivision) -> bool:
    branch = sub.branch_vertices
    if len(set(branch)) != 4 or len(sub.paths) != 6:
        return False
    want = {frozenset(p) for p in combinations(branch, 2)}
    got = set()
    interiors: set[int] = set()
    for p in sub.paths:
        if len(p) < 2 or not is_path_in(g, p):
            return False
        got.add(frozenset((p[0], p[-1])))
        inner = set(p[1:-1])
        if inner & set(branch) or inner & interiors:
            return False
        interiors |= inner
    return got == want


# low-level mask searches ------------------------------------------------------


def core(rows: Sequence[int], mask: int) -> int:
    """2-core of the subgraph induced by ``mask``: vertices lying on cycles or paths between them."""
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            if (rows[v] & mask).bit_count() < 2:
                mask &= ~(1 << v)
                changed = True
    return mask


def _pivot(rows: Sequence[int], mask: int) -> int:
    best = -1
    best_deg = 1 << 30
    for v in iter_bits(mask):
        d = (rows[v] & mask).bit_count()
        if d < best_deg:
            best, best_deg = v, d
    return best


def chordless_cycles_through(rows: Sequence[int], mask: int, v: int) -> Iterator[Cycle]:
    """Chordless cycles of G[mask] through ``v``, each reported once."""
    nv = rows[v] & mask
    for a in iter_bits(nv):
        yield from _extend(rows, mask, nv, [v, a], (1 << v) | (1 << a), 0, a)


def _extend(rows: Sequence[int], mask: int, nv: int, path: list[int],
            banned: int, block: int, first: int) -> Iterator[Cycle]:
    # `block` holds the neighbours of interior path vertices (would be chords)
    last = path[-1]
    for x in iter_bits(rows[last] & mask & ~banned & ~block):
        if nv >> x & 1:
            if x > first:
                yield tuple(path) + (x,)
            continue
        path.append(x)
        yield from _extend(rows, mask, nv, path, banned | (1 << x), block | rows[last], first)
        path.pop()


def any_cycle(rows: Sequence[int], mask: int) -> Cycle | None:
    """Some cycle of G[mask], or None for a forest."""
    mask = core(rows, mask)
    if not mask:
        return None
    start = (mask & -mask).bit_length() - 1
    walk = [start]
    where = {start: 0}
    prev = -1
    cur = start
    while True:
        nbrs = rows[cur] & mask
        if prev >= 0:
            nbrs &= ~(1 << prev)
        nxt = (nbrs & -nbrs).bit_length() - 1
        if nxt in where:
            return tuple(walk[where[nxt]:])
        where[nxt] = len(walk)
        walk.append(nxt)
        prev, cur = cur, nxt


def find_k_cycles(rows: Sequence[int], mask: int, k: int) -> list[Cycle] | None:
    """k pairwise disjoint cycles inside ``mask`` or None; stops at the first hit."""
    if k <= 0:
        return []
    mask = core(rows, mask)
    if mask.bit_count() < 3 * k:
        return None
    if k == 1:
        c = any_cycle(rows, mask)
        return [c] if c else None
    v = _pivot(rows, mask)
    for cyc in chordless_cycles_through(rows, mask, v):
        cmask = 0
        for u in cyc:
            cmask |= 1 << u
        rest = find_k_cycles(rows, mask & ~cmask, k - 1)
        if rest is not None:
            return [cyc] + rest
    return find_k_cycles(rows, mask & ~(1 << v), k)


def max_cycles(rows: Sequence[int], mask: int) -> list[Cycle]:
    """A maximum family of pairwise disjoint cycles of G[mask]."""
    best: list[list[Cycle]] = [[]]

    def go(mask: int, chosen: list[Cycle]) -> None:
        mask = core(rows, mask)
        if len(chosen) + mask.bit_count() // 3 <= len(best[0]):
            return
        if not mask:
            best[0] = list(chosen)
            return
        v = _pivot(rows, mask)
        for cyc in chordless_cycles_through(rows, mask, v):
            cmask = 0
            for u in cyc:
                cmask |= 1 << u
            chosen.append(cyc)
            go(mask & ~cmask, chosen)
            chosen.pop()
        go(mask & ~(1 << v), chosen)

    go(mask, [])
    return best[0]


def induced_paths(rows: Sequence[int], mask: int, u: int, v: int) -> Iterator[tuple[int, ...]]:
    """Induced u-v paths of G[mask], found by depth-first search from ``u``."""
    if u == v:
        yield (u,)
        return
    target = 1 << v

    def go(path: list[int], blocked: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        nbrs = rows[last] & mask
        if nbrs & target:
            yield tuple(path) + (v,)
            return
        for x in iter_bits(nbrs & ~blocked):
            path.append(x)
            yield from go(path, blocked | rows[last] | (1 << x))
            path.pop()

    yield from go([u], (1 << u))


# public API -------------------------------------------------------------------


def max_disjoint_cycles(g: SimpleGraph) -> tuple[int, CyclePacking]:
    cycles = max_cycles(g.rows, g.vertex_mask)
    return len(cycles), CyclePacking(tuple(cycles))


def has_k_disjoint_cycles(g: SimpleGraph, k: int) -> CyclePacking | None:
    if k < 1:
        raise ValueError("k must be at least 1")
    found = find_k_cycles(g.rows, g.vertex_mask, k)
    return None if found is None else CyclePacking(tuple(found))


def path_with_residual_packing(g: SimpleGraph, u: int, v: int, c: int
                               ) -> tuple[tuple[int, ...], CyclePacking] | None:
    """A u-v path P and ``c`` disjoint cycles in G - V(P), if any exist.

    Only induced paths are tried: shortcutting a path along a chord keeps
    its ends and frees vertices for the residual packing.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoints out of range")
    if c < 0:
        raise ValueError("c must be non-negative")
    full = g.vertex_mask
    for path in induced_paths(g.rows, full, u, v):
        pmask = 0
        for x in path:
            pmask |= 1 << x
        found = find_k_cycles(g.rows, full & ~pmask, c)
        if found is not None:
            return path, CyclePacking(tuple(found))
    return None


def contains_k4_subdivision(g: SimpleGraph) -> K4Subdivision | None:
    """A subdivision of K4 in ``g``, searched over branch 4-sets of degree >= 3."""
    rows = g.rows
    mask = core(rows, g.vertex_mask)
    heavy = [v for v in iter_bits(mask) if (rows[v] & mask).bit_count() >= 3]
    for quad in combinations(heavy, 4):
        found = _link_quad(rows, mask, quad)
        if found is not None:
            return K4Subdivision(quad, tuple(found))
    return None


def _link_quad(rows: Sequence[int], mask: int, quad: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    pairs = list(combinations(quad, 2))
    qmask = 0
    for q in quad:
        qmask |= 1 << q
    # every branch vertex needs three distinct exits
    for q in quad:
        if (rows[q] & mask).bit_count() < 3:
            return None
    free0 = mask & ~qmask
    chosen: list[tuple[int, ...]] = []

    def paths_between(a: int, b: int, free: int) -> Iterator[tuple[int, ...]]:
        if rows[a] >> b & 1:
            yield (a, b)

        def go(path: list[int], used: int) -> Iterator[tuple[int, ...]]:
            last = path[-1]
            if rows[last] >> b & 1 and len(path) > 1:
                yield tuple(path) + (b,)
            for x in iter_bits(rows[last] & free & ~used):
                path.append(x)
                yield from go(path, used | (1 << x))
                path.pop()

        for x in iter_bits(rows[a] & free):
            yield from go([a, x], 1 << x)

    def go(i: int, free: int) -> bool:
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for p in paths_between(a, b, free):
            inner = 0
            for x in p[1:-1]:
                inner |= 1 << x
            chosen.append(p)
            if go(i + 1, free & ~inner):
                return True
            chosen.pop()
        return False

    if go(0, free0):
        return list(chosen)
    return None
