import json

import pytest

from polyideal.classify import PRIME, STATUSES
from polyideal.enumerate import (
    SweepReport,
    bfs_grow_polyominoes,
    conjecture_sweep,
    enumerate_fixed_polyominoes,
    minimal_unconfigured_weakly_closed_path,
    recipe_report,
)
from polyideal.grid import Point
from polyideal.io import load_fixture

FIXED_COUNTS = {1: 1, 2: 2, 3: 6, 4: 19, 5: 63, 6: 216, 7: 760, 8: 2725}


@pytest.mark.parametrize("n", sorted(FIXED_COUNTS))
def test_fixed_counts(n):
    polys = [frozenset(P.cells) for P in enumerate_fixed_polyominoes(n)]
    assert len(polys) == FIXED_COUNTS[n]
    assert len(set(polys)) == len(polys)


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_bfs_oracle(n):
    assert {frozenset(P.cells) for P in enumerate_fixed_polyominoes(n)} == bfs_grow_polyominoes(n)


def test_translation_normalized_and_connected():
    for P in enumerate_fixed_polyominoes(6):
        assert P.bounding_box.lo == Point(0, 0)
        assert P.is_polyomino()


@pytest.mark.parametrize("n", [0, 13])
def test_size_bounds(n):
    with pytest.raises(ValueError):
        list(enumerate_fixed_polyominoes(n))


def test_sweep_single_cell():
    r = conjecture_sweep(1)
    assert r.totals == {1: {s: (1 if s == PRIME else 0) for s in STATUSES}}
    assert r.total == 1 and r.violations == []


def test_sweep_totals_and_determinism():
    a = conjecture_sweep(6)
    b = conjecture_sweep(6, jobs=2)
    assert a.totals == b.totals
    assert a.total == sum(FIXED_COUNTS[n] for n in range(1, 7))
    assert a.violations == [] and a.inconclusive == []


def test_sweep_records_toric_checks():
    r = conjecture_sweep(7)
    # the four 7-cell weakly closed paths all carry a configuration
    assert r.toric_checks == {"passed": 4, "failed": 0}


def test_sweep_cap():
    with pytest.raises(ValueError):
        conjecture_sweep(11)


def test_report_serialisation():
    r = conjecture_sweep(3)
    d = json.loads(r.to_json())
    assert d["total"] == 9 and d["totals"]["3"][PRIME] == 6
    tsv = r.to_tsv().splitlines()
    assert tsv[0].split("\t") == ["n", *STATUSES, "total"]
    assert tsv[3].split("\t")[-1] == "6"
    assert "violations: 0" in r.to_text()


def test_merge_adds_counts():
    a, b = SweepReport(2, 3), SweepReport(2, 3)
    a.totals = {1: {PRIME: 1}}
    b.totals = {1: {PRIME: 2}, 2: {PRIME: 2}}
    a.merge(b)
    assert a.totals[1][PRIME] == 3 and a.totals[2][PRIME] == 2


def test_minimal_unconfigured_path():
    assert minimal_unconfigured_weakly_closed_path(13) is None
    assert minimal_unconfigured_weakly_closed_path(15) == load_fixture("F7")


def test_recipe_report():
    config, report = recipe_report(load_fixture("F6"), 3)
    assert config.kind == "L" and report.passed
    assert recipe_report(load_fixture("F7")) == (None, None)
