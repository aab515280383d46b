"""kC>=3-saturation decisions with auditable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .blocks import is_biconnected
from .graph import SimpleGraph
from .graph6 import emit_graph6, parse_graph6
from .packing import CyclePacking, find_k_cycles, validate_packing
from .reduction import minimal_base

REPORT_SCHEMA = "satspec/saturation-report/1"


class Verdict(str, Enum):
    SATURATED = "Saturated"
    CONTAINS_FAMILY = "ContainsFamily"
    NOT_SATURATED = "NotSaturated"


@dataclass(frozen=True)
class SaturationReport:
    graph: SimpleGraph
    k: int
    verdict: Verdict
    packing: CyclePacking | None = None
    non_edge: tuple[int, int] | None = None
    exhausted: bool = False
    witnesses: dict[tuple[int, int], CyclePacking] = field(default_factory=dict)

    @property
    def saturated(self) -> bool:
        return self.verdict is Verdict.SATURATED

    def to_json(self) -> dict:
        out: dict = {
            "schema": REPORT_SCHEMA,
            "graph6": emit_graph6(self.graph),
            "n": self.graph.n,
            "m": self.graph.m,
            "k": self.k,
            "verdict": self.verdict.value,
        }
        if self.verdict is Verdict.CONTAINS_FAMILY:
            out["packing"] = self.packing.to_json()
        elif self.verdict is Verdict.NOT_SATURATED:
            out["non_edge"] = list(self.non_edge)
            out["exhausted"] = self.exhausted
        else:
            out["witnesses"] = [
                {"non_edge": [u, v], "packing": p.to_json()}
                for (u, v), p in sorted(self.witnesses.items())
            ]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SaturationReport":
        g = parse_graph6(data["graph6"])
        verdict = Verdict(data["verdict"])
        kw: dict = {}
        if verdict is Verdict.CONTAINS_FAMILY:
            kw["packing"] = CyclePacking.from_json(data["packing"])
        elif verdict is Verdict.NOT_SATURATED:
            kw["non_edge"] = tuple(data["non_edge"])
            kw["exhausted"] = bool(data.get("exhausted", False))
        else:
            kw["witnesses"] = {tuple(w["non_edge"]): CyclePacking.from_json(w["packing"])
                               for w in data["witnesses"]}
        return cls(g, int(data["k"]), verdict, **kw)


def saturation_status(g: SimpleGraph, k: int) -> SaturationReport:
    """Exact verdict for (g, k).

    Non-edges are tried in lexicographic order; the first one whose
    addition leaves no k disjoint cycles refutes saturation.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    full = g.vertex_mask
    found = find_k_cycles(g.rows, full, k)
    if found is not None:
        return SaturationReport(g, k, Verdict.CONTAINS_FAMILY, packing=CyclePacking(tuple(found)))
    rows = list(g.rows)
    witnesses: dict[tuple[int, int], CyclePacking] = {}
    for u, v in g.non_edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        hit = find_k_cycles(rows, full, k)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        if hit is None:
            return SaturationReport(g, k, Verdict.NOT_SATURATED, non_edge=(u, v), exhausted=True)
        witnesses[(u, v)] = CyclePacking(tuple(hit))
    return SaturationReport(g, k, Verdict.SATURATED, witnesses=witnesses)


def is_saturated(g: SimpleGraph, k: int) -> bool:
    return saturation_status(g, k).saturated


def audit_report(report: SaturationReport) -> bool:
    """Re-check a report's certificates against its graph.

    A NotSaturated refutation is re-derived by search, since absence of a
    packing has no short certificate.
    """
    g, k = report.graph, report.k
    if report.verdict is Verdict.CONTAINS_FAMILY:
        p = report.packing
        return p is not None and len(p) == k and validate_packing(g, p)
    if report.verdict is Verdict.NOT_SATURATED:
        if report.non_edge is None:
            return False
        u, v = report.non_edge
        if g.has_edge(u, v):
            return False
        return find_k_cycles(g.add_edge(u, v).rows, g.vertex_mask, k) is None
    if find_k_cycles(g.rows, g.vertex_mask, k) is not None:
        return False
    if set(report.witnesses) != set(g.non_edges()):
        return False
    for (u, v), p in report.witnesses.items():
        if len(p) != k or not validate_packing(g.add_edge(u, v), p):
            return False
    return True


def is_good(g: SimpleGraph) -> bool:
    """2-connected and already its own minimal base."""
    if not is_biconnected(g):
        return False
    _, trace = minimal_base(g)
    return not trace.steps
