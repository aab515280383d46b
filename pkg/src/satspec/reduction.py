"""Leaf stripping, degree-2 suppression and subdivision testing.

``strip_leaves`` computes the leafless core M0(G); ``minimal_base`` then
suppresses degree-2 vertices whose neighbours are non-adjacent (a
suppression with adjacent neighbours would need a parallel edge) until none
is left.  Both return the reduced graph relabelled onto 0..n'-1 in
increasing original order, plus a replayable trace in original labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_form
from .graph import GraphError, SimpleGraph, iter_bits


@dataclass(frozen=True)
class LeafDelete:
    v: int


@dataclass(frozen=True)
class Suppress:
    v: int
    u1: int
    u2: int


Step = LeafDelete | Suppress


@dataclass(frozen=True)
class ReductionTrace:
    source: SimpleGraph
    steps: tuple[Step, ...]
    result: SimpleGraph
    kept: tuple[int, ...] = field(default=())

    def to_json(self) -> list[dict]:
        out = []
        for s in self.steps:
            if isinstance(s, LeafDelete):
                out.append({"op": "leaf", "v": s.v})
            else:
                out.append({"op": "suppress", "v": s.v, "u1": s.u1, "u2": s.u2})
        return out


def _finish(source: SimpleGraph, rows: list[int], alive: int, steps: list[Step]) -> tuple[SimpleGraph, ReductionTrace]:
    kept = tuple(iter_bits(alive))
    index = {v: i for i, v in enumerate(kept)}
    out = []
    for v in kept:
        r = 0
        for u in iter_bits(rows[v] & alive):
            r |= 1 << index[u]
        out.append(r)
    result = SimpleGraph(len(kept), tuple(out))
    return result, ReductionTrace(source, tuple(steps), result, kept)


def _strip(rows: list[int], alive: int, steps: list[Step]) -> int:
    while True:
        leaves = [v for v in iter_bits(alive) if (rows[v] & alive).bit_count() == 1]
        if not leaves:
            return alive
        for v in leaves:
            if (rows[v] & alive).bit_count() == 1:
                alive &= ~(1 << v)
                steps.append(LeafDelete(v))


def strip_leaves(g: SimpleGraph) -> tuple[SimpleGraph, ReductionTrace]:
    rows = list(g.rows)
    steps: list[Step] = []
    alive = _strip(rows, g.vertex_mask, steps)
    return _finish(g, rows, alive, steps)


def minimal_base(g: SimpleGraph, order: list[int] | None = None) -> tuple[SimpleGraph, ReductionTrace]:
    """Greedy minimal base of ``g``.

    ``order`` optionally fixes the priority in which suppressible vertices
    are taken (default: lowest index first).
    """
    rows = list(g.rows)
    steps: list[Step] = []
    alive = _strip(rows, g.vertex_mask, steps)
    rank = list(range(g.n)) if order is None else _rank(order, g.n)
    while True:
        pick = -1
        for v in iter_bits(alive):
            nb = rows[v] & alive
            if nb.bit_count() != 2:
                continue
            u1 = (nb & -nb).bit_length() - 1
            u2 = nb.bit_length() - 1
            if rows[u1] >> u2 & 1:
                continue
            if pick < 0 or rank[v] < rank[pick]:
                pick = v
        if pick < 0:
            break
        nb = rows[pick] & alive
        u1 = (nb & -nb).bit_length() - 1
        u2 = nb.bit_length() - 1
        alive &= ~(1 << pick)
        rows[u1] |= 1 << u2
        rows[u2] |= 1 << u1
        steps.append(Suppress(pick, u1, u2))
    return _finish(g, rows, alive, steps)


def _rank(order: list[int], n: int) -> list[int]:
    rank = [n + v for v in range(n)]
    for i, v in enumerate(order):
        rank[v] = i
    return rank


def replay(trace: ReductionTrace) -> SimpleGraph:
    """Re-run the recorded steps on the source, checking each precondition."""
    g = trace.source
    rows = list(g.rows)
    alive = g.vertex_mask
    for s in trace.steps:
        if isinstance(s, LeafDelete):
            if not alive >> s.v & 1 or (rows[s.v] & alive).bit_count() != 1:
                raise GraphError(f"leaf step on vertex {s.v} is not valid")
            alive &= ~(1 << s.v)
        else:
            nb = rows[s.v] & alive
            if nb != (1 << s.u1) | (1 << s.u2) or rows[s.u1] >> s.u2 & 1:
                raise GraphError(f"suppress step on vertex {s.v} is not valid")
            alive &= ~(1 << s.v)
            rows[s.u1] |= 1 << s.u2
            rows[s.u2] |= 1 << s.u1
    result, _ = _finish(g, rows, alive, [])
    return result


def subdivide_edge(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    """Replace edge uv by a path u-w-v through a new vertex w = n."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return g.remove_edge(u, v).add_vertex([u, v])


def excess(g: SimpleGraph) -> int:
    """|E| - |V|, invariant under subdivision and leaf deletion."""
    return g.m - g.n


def is_subdivision_of(h: SimpleGraph, g: SimpleGraph) -> bool:
    """Whether ``h`` arises from ``g`` by replacing edges with internally disjoint paths.

    Every vertex of ``h`` with degree other than 2 must be a branch vertex;
    the remaining branch vertices are chosen among degree-2 vertices, after
    which suppressing all non-branch vertices must give exactly ``g``.
    """
    if h.n < g.n or excess(h) != excess(g):
        return False
    hdeg = h.degrees()
    gdeg = g.degrees()
    forced = [v for v in range(h.n) if hdeg[v] != 2]
    if sorted(hdeg[v] for v in forced) != sorted(d for d in gdeg if d != 2):
        return False
    extra = g.n - len(forced)
    twos = [v for v in range(h.n) if hdeg[v] == 2]
    if extra < 0 or extra > len(twos):
        return False
    target = canonical_form(g)
    base = 0
    for v in forced:
        base |= 1 << v
    for chosen in combinations(twos, extra):
        branch = base
        for v in chosen:
            branch |= 1 << v
        contracted = _contract(h, branch)
        if contracted is not None and canonical_form(contracted) == target:
            return True
    return False


def _contract(h: SimpleGraph, branch: int) -> SimpleGraph | None:
    # Follow each branch vertex's threads of non-branch degree-2 vertices.
    verts = list(iter_bits(branch))
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    covered = branch
    for b in verts:
        for first in iter_bits(h.rows[b]):
            prev, cur = b, first
            while not branch >> cur & 1:
                covered |= 1 << cur
                nb = h.rows[cur] & ~(1 << prev)
                prev, cur = cur, (nb & -nb).bit_length() - 1
            if cur == b:
                return None
            i, j = index[b], index[cur]
            if b < cur:
                if rows[i] >> j & 1:
                    return None
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    # a thread counted from both ends is only added once (b < cur); a second
    # thread between the same pair already returned None above
    if covered != h.vertex_mask:
        return None
    return SimpleGraph(len(verts), tuple(rows))
