"""Isomorph-free generation of all graphs on n vertices.

Canonical augmentation by one vertex: a child ``H = G + w`` (``w`` joined
to a set ``S`` of parent vertices) is kept only when ``w`` lies in the orbit
of H's canonical deletion vertex, and ``S`` runs over one representative
per Aut(G)-orbit of subsets.  The deletion vertex is taken among vertices of
maximum degree, then maximum neighbour-degree sum, then least canonical
position; the two cheap invariants decide most children without a
canonical search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .canon import search
from .graph import SimpleGraph, iter_bits

ENVELOPE = 10

Rows = tuple[int, ...]


class EnvelopeError(ValueError):
    """Raised when a request falls outside the supported vertex range."""


def _apply(perm: Sequence[int], mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << perm[v]
    return out


def _subset_reps(gens: Sequence[Sequence[int]], candidates: list[int]) -> list[int]:
    """One subset per orbit of the group generated by ``gens``, least first."""
    if not gens:
        return candidates
    seen: set[int] = set()
    reps = []
    for s in candidates:
        if s in seen:
            continue
        reps.append(s)
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for g in gens:
                y = _apply(g, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return reps


def _candidate_sets(degs: Sequence[int], p: int) -> list[int]:
    # The new vertex must attain the maximum degree of the child: |S| = s
    # forces every vertex of degree s out of S and no vertex above s.
    out = []
    top = max(degs, default=0)
    for s in range(top, p + 1):
        allowed = [v for v in range(p) if degs[v] < s]
        for combo in combinations(allowed, s):
            mask = 0
            for v in combo:
                mask |= 1 << v
            out.append(mask)
    return out


def children(rows: Rows, gens: Sequence[Sequence[int]]) -> Iterator[Rows]:
    """Canonically accepted one-vertex extensions of the parent ``rows``."""
    p = len(rows)
    degs = [r.bit_count() for r in rows]
    w = p
    wbit = 1 << w
    for s_mask in _subset_reps(gens, _candidate_sets(degs, p)):
        s = s_mask.bit_count()
        child = list(rows)
        for v in iter_bits(s_mask):
            child[v] |= wbit
        child.append(s_mask)
        tied = [v for v in range(p) if child[v].bit_count() == s]
        if not tied:
            yield tuple(child)
            continue
        cdeg = [r.bit_count() for r in child]
        score_w = sum(cdeg[u] for u in iter_bits(s_mask))
        best = score_w
        contenders = [w]
        for v in tied:
            sc = sum(cdeg[u] for u in iter_bits(child[v]))
            if sc > best:
                best = sc
                contenders = [v]
                break
            if sc == best:
                contenders.append(v)
        if best != score_w:
            continue
        if len(contenders) == 1:
            yield tuple(child)
            continue
        result = search(child, p + 1)
        pos = {v: i for i, v in enumerate(result.lab)}
        chosen = min(contenders, key=pos.__getitem__)
        if result.orbits[chosen] == result.orbits[w]:
            yield tuple(child)


@lru_cache(maxsize=None)
def level(n: int) -> tuple[Rows, ...]:
    """All graphs on ``n`` vertices (one per isomorphism class), as rows."""
    if n < 0 or n > ENVELOPE:
        raise EnvelopeError(f"n={n} outside the enumeration envelope [0, {ENVELOPE}]")
    if n == 0:
        return ((),)
    out: list[Rows] = []
    for parent in level(n - 1):
        gens = search(parent, n - 1).generators
        out.extend(children(parent, gens))
    return tuple(out)


def parents(n: int) -> tuple[Rows, ...]:
    """The parent level whose augmentation branches partition level ``n``."""
    if n < 1 or n > ENVELOPE:
        raise EnvelopeError(f"n={n} outside the enumeration envelope [1, {ENVELOPE}]")
    return level(n - 1)


def branch(n: int, index: int) -> list[Rows]:
    """Children of the ``index``-th parent of level ``n``."""
    parent = parents(n)[index]
    return list(children(parent, search(parent, n - 1).generators))


def enumerate_nonisomorphic(n: int) -> Iterator[SimpleGraph]:
    """Stream one graph per isomorphism class on ``n`` vertices."""
    if n < 0 or n > ENVELOPE:
        raise EnvelopeError(f"n={n} outside the enumeration envelope [0, {ENVELOPE}]")
    if n <= 8:
        for rows in level(n):
            yield SimpleGraph(n, rows)
        return
    for parent in level(n - 1):
        for rows in children(parent, search(parent, n - 1).generators):
            yield SimpleGraph(n, rows)
