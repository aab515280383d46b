"""Named graph families and block-star constructions of saturated graphs.

Vertex numbering is fixed per family (dominating / hub vertices first,
then the cycle, then path or leaf vertices) so emitted graph6 strings are
stable.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb
from typing import Union

from .graph import SimpleGraph


class ParameterError(ValueError):
    """Family or block parameters outside their valid range."""


class NotRealizable(ValueError):
    """No implemented construction has the requested (n, k, m)."""


class OutsideStatedRange(UserWarning):
    """Parameters accepted by a builder but outside the range its saturation claim covers."""


# families -------------------------------------------------------------------


def complete(r: int) -> SimpleGraph:
    if r < 1:
        raise ParameterError("complete graph needs r >= 1")
    return SimpleGraph.complete(r)


def star(n: int, t: int) -> SimpleGraph:
    """K_t joined to an independent set of n - t vertices; vertices 0..t-1 dominate."""
    if not 1 <= t <= n - 2:
        raise ParameterError(f"star needs 1 <= t <= n-2, got n={n}, t={t}")
    edges = [(i, j) for i in range(t) for j in range(i + 1, n)]
    return SimpleGraph.from_edges(n, edges)


def wheel(n: int) -> SimpleGraph:
    """Hub 0 joined to the cycle 1..n-1."""
    if n < 5:
        raise ParameterError(f"wheel needs n >= 5, got {n}")
    return gen_wheel(n, 1, _checked=True)


def wheel_plus(n: int, p: int) -> SimpleGraph:
    """Wheel on 0..n-1 plus a path 0, n, n+1, ..., n+p-1, 1 through p new vertices."""
    if n < 5 or p < 1:
        raise ParameterError(f"wheel_plus needs n >= 5 and p >= 1, got n={n}, p={p}")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    edges += [(0, n), (n + p - 1, 1)]
    edges += [(i, i + 1) for i in range(n, n + p - 1)]
    return SimpleGraph.from_edges(n + p, edges)


def gen_wheel(n: int, t: int, _checked: bool = False) -> SimpleGraph:
    """K_t on 0..t-1 joined to the cycle t..n-1."""
    if not _checked and (t < 1 or n < t + 4):
        raise ParameterError(f"gen_wheel needs t >= 1 and n >= t+4, got n={n}, t={t}")
    edges = [(i, j) for i in range(t) for j in range(i + 1, n)]
    rim = list(range(t, n))
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return SimpleGraph.from_edges(n, edges)


def spider(n: int, t: int) -> SimpleGraph:
    """K_t joined to a spider with t+1 legs of two vertices and one leg of n-3t-3.

    The spider's centre is vertex t; legs follow in order, each leg's
    vertices listed outward from the centre.
    """
    if t < 1 or n < 3 * t + 5:
        raise ParameterError(f"spider needs t >= 1 and n >= 3t+5, got n={n}, t={t}")
    if t < 3:
        warnings.warn(f"spider with t={t} is outside the range t >= 3", OutsideStatedRange, stacklevel=2)
    centre = t
    edges = [(i, j) for i in range(t) for j in range(i + 1, n)]
    nxt = t + 1
    legs = [2] * (t + 1) + [n - 3 * t - 3]
    for length in legs:
        prev = centre
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    assert nxt == n
    return SimpleGraph.from_edges(n, edges)


FAMILIES = {
    "complete": (complete, 1),
    "star": (star, 2),
    "wheel": (wheel, 1),
    "wheel-plus": (wheel_plus, 2),
    "gen-wheel": (gen_wheel, 2),
    "spider": (spider, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]


def build_family(spec: FamilySpec) -> SimpleGraph:
    try:
        fn, arity = FAMILIES[spec.family]
    except KeyError:
        raise ParameterError(f"unknown family {spec.family!r}; choose from {sorted(FAMILIES)}") from None
    if len(spec.params) != arity:
        raise ParameterError(f"family {spec.family!r} takes {arity} parameter(s)")
    return fn(*spec.params)


# block-star ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CompleteBlock:
    """K_{3i-1}; i = 1 gives a pendant edge."""

    i: int

    def validate(self) -> None:
        if self.i < 1:
            raise ParameterError("complete block needs i >= 1")

    def graph(self) -> SimpleGraph:
        return SimpleGraph.complete(3 * self.i - 1)

    @property
    def order(self) -> int:
        return 3 * self.i - 1

    @property
    def attach(self) -> int:
        return 0

    @property
    def cycles(self) -> int:
        return self.i - 1

    @property
    def edges(self) -> int:
        return comb(3 * self.i - 1, 2)


@dataclass(frozen=True, order=True)
class WheelPlusBlock:
    """Wheel-plus block, attached at its first path vertex."""

    a: int
    p: int

    def validate(self) -> None:
        if self.a < 6 or self.p < 1:
            raise ParameterError("wheel-plus block needs a >= 6 and p >= 1")

    def graph(self) -> SimpleGraph:
        return wheel_plus(self.a, self.p)

    @property
    def order(self) -> int:
        return self.a + self.p

    @property
    def attach(self) -> int:
        return self.a

    @property
    def cycles(self) -> int:
        return 1

    @property
    def edges(self) -> int:
        return 2 * self.a + self.p - 1


@dataclass(frozen=True, order=True)
class StarBlock:
    """Star block with 2j-1 dominating vertices, attached at a non-dominating vertex."""

    b: int
    j: int

    def validate(self) -> None:
        if self.j < 2 or self.b < 3 * self.j:
            raise ParameterError("star block needs b >= 3j >= 6")

    def graph(self) -> SimpleGraph:
        return star(self.b, 2 * self.j - 1)

    @property
    def order(self) -> int:
        return self.b

    @property
    def attach(self) -> int:
        return 2 * self.j - 1

    @property
    def cycles(self) -> int:
        return self.j - 1

    @property
    def edges(self) -> int:
        return (2 * self.j - 1) * (self.b - self.j)


Block = Union[CompleteBlock, WheelPlusBlock, StarBlock]


def _block_key(item: tuple[Block, int]):
    block, _ = item
    if isinstance(block, CompleteBlock):
        return (0, -block.i)
    if isinstance(block, WheelPlusBlock):
        return (1, block.a, block.p)
    return (2, block.b, block.j)


@dataclass(frozen=True)
class BlockStarSpec:
    """Multiset of blocks glued at one shared vertex (vertex 0 of the result)."""

    blocks: tuple[tuple[Block, int], ...]

    @classmethod
    def of(cls, *items: tuple[Block, int]) -> "BlockStarSpec":
        merged: dict[Block, int] = {}
        for block, count in items:
            if count < 0:
                raise ParameterError("block counts must be non-negative")
            if count:
                merged[block] = merged.get(block, 0) + count
        return cls(tuple(sorted(merged.items(), key=_block_key)))

    @property
    def k(self) -> int:
        return 1 + sum(b.cycles * c for b, c in self.blocks)

    @property
    def n(self) -> int:
        return 1 + sum((b.order - 1) * c for b, c in self.blocks)

    def validate(self, allow_complete: bool = False) -> None:
        if not self.blocks:
            raise ParameterError("a block-star needs at least one block")
        for b, _ in self.blocks:
            b.validate()
        if not allow_complete and len(self.blocks) == 1 and self.blocks[0][1] == 1 and isinstance(self.blocks[0][0], CompleteBlock):
            raise ParameterError("a lone complete block gives a complete graph")

    def to_json(self) -> list[dict]:
        out = []
        for b, c in self.blocks:
            if isinstance(b, CompleteBlock):
                out.append({"block": "complete", "i": b.i, "count": c})
            elif isinstance(b, WheelPlusBlock):
                out.append({"block": "wheel-plus", "a": b.a, "p": b.p, "count": c})
            else:
                out.append({"block": "star", "b": b.b, "j": b.j, "count": c})
        return out


def build_block_star(spec: BlockStarSpec) -> SimpleGraph:
    spec.validate()
    edges: list[tuple[int, int]] = []
    nxt = 1
    for block, count in spec.blocks:
        g = block.graph()
        for _ in range(count):
            name = {}
            for v in range(g.n):
                if v == block.attach:
                    name[v] = 0
                else:
                    name[v] = nxt
                    nxt += 1
            edges.extend((name[u], name[v]) for u, v in g.edges())
    return SimpleGraph.from_edges(nxt, edges)


def expected_edge_count(spec: BlockStarSpec) -> int:
    """Closed-form size: blocks share only the glue vertex, so sizes add."""
    spec.validate(allow_complete=True)
    return sum(b.edges * c for b, c in spec.blocks)


# inverting the size equations -------------------------------------------------

CASES = ("complete-blocks", "wheel-plus", "star", "wheel-plus-stars")


def _case_complete_blocks(n: int, k: int, m: int) -> BlockStarSpec | None:
    k1 = n - 4 * k + 3
    if m != n + 6 * k - 7 or k1 < 0 or (k == 2 and k1 < 1):
        return None
    return BlockStarSpec.of((CompleteBlock(2), k - 1), (CompleteBlock(1), k1))


def _case_wheel_plus(n: int, k: int, m: int) -> BlockStarSpec | None:
    k1 = 2 * n + 2 * k - 6 - m
    a0 = n - k1 - 4 * k + 7
    if k1 < 0 or a0 < 6:
        return None
    return BlockStarSpec.of((CompleteBlock(2), k - 2), (CompleteBlock(1), k1), (WheelPlusBlock(a0, 1), 1))


def _case_star(n: int, k: int, m: int) -> BlockStarSpec | None:
    num = m - n + 2 * k * k - k
    den = 2 * k - 2
    if num % den:
        return None
    b0 = num // den
    if not 3 * k <= b0 <= n:
        return None
    return BlockStarSpec.of((StarBlock(b0, k), 1), (CompleteBlock(1), n - b0))


def _case_wheel_plus_stars(n: int, k: int, m: int) -> BlockStarSpec | None:
    if k < 3:
        return None
    a0 = 3 * n - 3 * k + 3 - m
    if a0 < 6:
        return None
    if a0 == n - 5 * k + 9:
        return BlockStarSpec.of((WheelPlusBlock(a0, 1), 1), (StarBlock(6, 2), k - 2))
    if a0 <= n - 5 * k + 8:
        b0 = n - a0 - 5 * k + 15
        return BlockStarSpec.of((WheelPlusBlock(a0, 1), 1), (StarBlock(6, 2), k - 3), (StarBlock(b0, 2), 1))
    return None


_SOLVERS = {
    "complete-blocks": _case_complete_blocks,
    "wheel-plus": _case_wheel_plus,
    "star": _case_star,
    "wheel-plus-stars": _case_wheel_plus_stars,
}


def solve_block_star(n: int, k: int, m: int, case: str | None = None) -> tuple[str, BlockStarSpec]:
    """Find a block-star spec on n vertices with m edges meant to be kC>=3-saturated.

    Cases are tried in the order of ``CASES`` unless ``case`` pins one.
    """
    if k < 2:
        raise NotRealizable("block-star constructions need k >= 2")
    order = CASES if case is None else (case,)
    for name in order:
        if name not in _SOLVERS:
            raise ParameterError(f"unknown case {name!r}; choose from {CASES}")
        spec = _SOLVERS[name](n, k, m)
        if spec is not None:
            assert spec.n == n and expected_edge_count(spec) == m and spec.k == k
            return name, spec
    raise NotRealizable(f"no implemented construction gives n={n}, k={k}, m={m}")


def construct_saturated(n: int, k: int, m: int, case: str | None = None) -> SimpleGraph:
    _, spec = solve_block_star(n, k, m, case)
    return build_block_star(spec)


def realizable_sizes(n: int, k: int) -> list[int]:
    """Sizes m in [0, C(n,2)] for which some case solves (n, k, m)."""
    out = []
    for m in range(comb(n, 2) + 1):
        try:
            solve_block_star(n, k, m)
        except NotRealizable:
            continue
        out.append(m)
    return out
