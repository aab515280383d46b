from __future__ import annotations

import json
import warnings

import pytest

from conftest import cycle, naive_max_packing, path
from satspec.constructions import (BlockStarSpec, OutsideStatedRange, StarBlock, build_block_star,
                                   complete, gen_wheel, spider, star, wheel, wheel_plus)
from satspec.packing import CyclePacking
from satspec.saturation import (SaturationReport, Verdict, audit_report, is_good, is_saturated,
                                saturation_status)


def test_wheel_six():
    assert saturation_status(wheel(6), 2).verdict is Verdict.SATURATED


def test_k5_is_vacuously_saturated():
    report = saturation_status(complete(5), 2)
    assert report.saturated and report.witnesses == {}


def test_six_cycle_is_not_saturated():
    report = saturation_status(cycle(6), 2)
    assert report.verdict is Verdict.NOT_SATURATED and report.exhausted


def test_six_cycle_brute_force_chords():
    # every chord of C6 leaves two cycles that share a vertex
    g = cycle(6)
    for u, v in g.non_edges():
        assert naive_max_packing(g.add_edge(u, v)) < 2


def test_two_triangles_contain_the_family():
    report = saturation_status(cycle(3).union(cycle(3)), 2)
    assert report.verdict is Verdict.CONTAINS_FAMILY and len(report.packing) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_small_graphs_saturated_iff_complete(n):
    assert is_saturated(complete(n), 2)
    if n >= 2:
        assert not is_saturated(complete(n).remove_edge(0, 1), 2)


def test_five_vertex_wheel_is_not_saturated():
    # too small for two disjoint cycles, so only the complete graph qualifies
    assert saturation_status(wheel(5), 2).verdict is Verdict.NOT_SATURATED


@pytest.mark.parametrize("k", [2, 3])
def test_stars(k):
    for n in range(3 * k, 15):
        assert is_saturated(star(n, 2 * k - 1), k), n


@pytest.mark.parametrize("n", range(6, 13))
def test_wheels(n):
    assert is_saturated(wheel(n), 2)


@pytest.mark.parametrize("n", range(6, 11))
@pytest.mark.parametrize("p", [1, 2, 3])
def test_wheel_plus(n, p):
    assert is_saturated(wheel_plus(n, p), 2)


@pytest.mark.parametrize("n", range(11, 17))
def test_generalised_wheels_for_three_cycles(n):
    g = gen_wheel(n, 2)
    assert g.m == 1 + 3 * (n - 2) and is_saturated(g, 3)


@pytest.mark.parametrize("k, n", [(2, n) for n in range(8, 14)] + [(3, n) for n in range(11, 16)])
def test_spiders(k, n):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideStatedRange)
        g = spider(n, k - 1)
    assert is_saturated(g, k)


def test_two_star_blocks_for_three_cycles():
    g = build_block_star(BlockStarSpec.of((StarBlock(6, 2), 2)))
    assert g.n == 11 and is_saturated(g, 3)


@pytest.mark.parametrize("g, k", [(wheel(6), 2), (cycle(6), 2), (cycle(3).union(cycle(3)), 2),
                                  (complete(5), 2), (star(9, 5), 3), (path(4), 1)])
def test_reports_audit_and_round_trip(g, k):
    report = saturation_status(g, k)
    assert audit_report(report)
    data = json.loads(json.dumps(report.to_json()))
    back = SaturationReport.from_json(data)
    assert back == report and audit_report(back)


def test_saturated_report_covers_every_non_edge():
    report = saturation_status(wheel(7), 2)
    assert sorted(report.witnesses) == wheel(7).non_edges()


def test_audit_rejects_forged_reports():
    g = wheel(6)
    real = saturation_status(g, 2)
    (e0, p0), *_ = real.witnesses.items()
    forged = SaturationReport(g, 2, Verdict.SATURATED,
                              witnesses={**real.witnesses, e0: CyclePacking(((0, 1, 2),))})
    assert not audit_report(forged)
    assert not audit_report(SaturationReport(g, 2, Verdict.NOT_SATURATED, non_edge=e0))
    assert not audit_report(SaturationReport(g, 2, Verdict.CONTAINS_FAMILY, packing=p0))


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        saturation_status(wheel(6), 0)


def test_good_graphs():
    assert is_good(wheel(6))
    assert is_good(wheel_plus(6, 1))
    pendant = wheel_plus(6, 1).add_vertex([6])
    assert not is_good(pendant)
    assert not is_good(wheel_plus(6, 2))   # a suppressible path vertex
    assert not is_good(path(5))


def test_saturation_verdict_matches_definition_on_small_graphs():
    from conftest import naive_max_packing as nmp
    from satspec.generate import enumerate_nonisomorphic

    for g in enumerate_nonisomorphic(6):
        expected = nmp(g) < 2 and all(nmp(g.add_edge(u, v)) >= 2 for u, v in g.non_edges())
        assert is_saturated(g, 2) == expected
