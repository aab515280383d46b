"""Block (biconnected component) decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SimpleGraph, iter_bits


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as sorted vertex tuples, ordered lexicographically.

    Isolated vertices belong to no block.  ``trivial[i]`` marks blocks
    isomorphic to K2.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]

    @property
    def trivial(self) -> tuple[bool, ...]:
        return tuple(len(b) == 2 for b in self.blocks)

    def nontrivial(self) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if len(b) > 2]


def blocks(g: SimpleGraph) -> BlockDecomposition:
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    found: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    timer = 0
    edge_stack: list[tuple[int, int]] = []

    for root in range(n):
        if disc[root] >= 0 or not rows[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # each frame: vertex, parent, remaining neighbour mask
        stack = [(root, -1, rows[root])]
        while stack:
            v, parent, rest = stack[-1]
            if rest:
                w = (rest & -rest).bit_length() - 1
                stack[-1] = (v, parent, rest & (rest - 1))
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    stack.append((w, v, rows[w]))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(tuple(sorted(comp)))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(sorted(found)), frozenset(cuts))


def is_biconnected(g: SimpleGraph) -> bool:
    """2-connected: at least three vertices, connected, no cut vertex."""
    if g.n < 3:
        return False
    dec = blocks(g)
    return len(dec.blocks) == 1 and len(dec.blocks[0]) == g.n


def block_edge_count(g: SimpleGraph, block: tuple[int, ...]) -> int:
    mask = 0
    for v in block:
        mask |= 1 << v
    return sum((g.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2
