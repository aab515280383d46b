"""Simple labeled graphs on at most 62 vertices.

Adjacency is held as one neighbour bitmask per vertex; the masks together
form a packed symmetric matrix whose upper triangle is exposed through
:meth:`SimpleGraph.triangle_bits`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for invalid vertex indices, sizes or edge operations."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise GraphError("one adjacency row per vertex required")
        rows = self.rows
        for v, r in enumerate(rows):
            if r >> self.n or r >> v & 1:
                raise GraphError(f"row {v} has a self-loop or an out-of-range bit")
            high = r >> v
            while high:
                u = v + (high & -high).bit_length() - 1
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
                high &= high - 1

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    # basic queries ------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        """All vertex pairs u < v that are not adjacent, in lexicographic order."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def triangle_bits(self) -> int:
        """Upper triangle as an integer, column-major, first pair (0, 1) most significant."""
        bits = 0
        for j in range(1, self.n):
            r = self.rows[j]
            for i in range(j):
                bits = bits << 1 | (r >> i & 1)
        return bits

    # derived graphs -----------------------------------------------------

    def add_edge(self, u: int, v: int) -> "SimpleGraph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"cannot add edge ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SimpleGraph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "SimpleGraph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return SimpleGraph(self.n, tuple(rows))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "SimpleGraph":
        w = self.n
        rows = list(self.rows) + [0]
        for u in neighbors:
            rows[u] |= 1 << w
            rows[w] |= 1 << u
        return SimpleGraph(w + 1, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled to 0..len-1 in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in iter_bits(self.rows[v]):
                if u in index:
                    r |= 1 << index[u]
            rows.append(r)
        return SimpleGraph(len(keep), tuple(rows))

    def delete_vertices(self, vertices: Iterable[int]) -> "SimpleGraph":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in iter_bits(self.rows[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return SimpleGraph(self.n, tuple(rows))

    def union(self, other: "SimpleGraph") -> "SimpleGraph":
        """Vertex-disjoint union; ``other`` is shifted past this graph's vertices."""
        shift = self.n
        return SimpleGraph(self.n + other.n, self.rows + tuple(r << shift for r in other.rows))

    def complement(self) -> "SimpleGraph":
        full = self.vertex_mask
        return SimpleGraph(self.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(self.rows)))

    # connectivity -------------------------------------------------------

    def component_masks(self, mask: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``mask`` (default: all)."""
        if mask is None:
            mask = self.vertex_mask
        rows = self.rows
        comps = []
        rest = mask
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= rows[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def is_forest(self, mask: int | None = None) -> bool:
        if mask is None:
            mask = self.vertex_mask
        edges = sum((self.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2
        return edges == mask.bit_count() - len(self.component_masks(mask))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
    return SimpleGraph.from_edges(n, edges)


def degree_classes(g: SimpleGraph) -> dict:
    """Partition of the vertices by degree.

    Returns a dict with ``classes`` (degree -> sorted vertex list),
    ``min_degree`` and ``dominating`` (vertices of degree n-1).
    """
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        classes.setdefault(d, []).append(v)
    return {
        "classes": dict(sorted(classes.items())),
        "min_degree": g.min_degree(),
        "dominating": classes.get(g.n - 1, []) if g.n else [],
    }


def edge_count_in(rows: Sequence[int], mask: int) -> int:
    return sum((rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2
