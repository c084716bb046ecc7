"""Acceptance criteria, one test per criterion, each with its time limit.

Every test prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Run ``python3 tests/test_acceptance.py`` to get only the
lines.
"""
import random
import time

import pytest

from _support import polyominoes_upto, random_simple_collection, simple_polyominoes_upto
from polyideal.algebra import edge_ring_map, hole_toric_map, inner_2_minors, toric_equality_report
from polyideal.classify import NOT_PRIME, PRIME, RULE_L_CONFIG, classify
from polyideal.enumerate import (
    bfs_grow_polyominoes,
    conjecture_sweep,
    enumerate_fixed_polyominoes,
    enumerate_weakly_closed_paths,
    minimal_unconfigured_weakly_closed_path,
)
from polyideal.graph import (
    build_graph,
    cycle_to_primitive_cycle,
    is_lattice_cycle,
    is_weakly_chordal,
    iter_cycles,
    primitive_cycle_to_graph_cycle,
)
from polyideal.io import FIXTURES, fixture_text, load_fixture, parse_ascii, render_ascii
from polyideal.pathclass import (
    find_any_prime_configuration,
    find_L_configuration,
    marked_set_for_configuration,
    recognize_weakly_closed_path,
)
from polyideal.zigzag import ZigZagWalk, find_zigzag_walk, verify_zigzag_walk

_LOG = []


def _wcps_upto(n_max):
    for n in range(7, n_max + 1):
        yield from enumerate_weakly_closed_paths(n)


def c1_enumeration():
    expected = [1, 2, 6, 19, 63, 216]
    counts, oracle = [], []
    for n in range(1, 7):
        mine = {frozenset(P.cells) for P in enumerate_fixed_polyominoes(n)}
        counts.append(len(mine))
        oracle.append(mine == bfs_grow_polyominoes(n))
    return counts == expected and all(oracle), f"counts {counts}, oracle agrees {all(oracle)}"


def c2_weak_chordality():
    bad = 0
    checked = 0
    for P in simple_polyominoes_upto(7):
        checked += 1
        bad += not is_weakly_chordal(build_graph(P))
    rng = random.Random(20240601)
    for _ in range(1000):
        P = random_simple_collection(rng, max_cells=10, max_components=3)
        checked += 1
        bad += not is_weakly_chordal(build_graph(P))
    return bad == 0, f"{checked} collections, {bad} exceptions"


def c3_toric_shadow():
    failed = 0
    checked = 0
    for P in simple_polyominoes_upto(6):
        checked += 1
        r = toric_equality_report(P, edge_ring_map(P), 3)
        failed += not (r.generators_in_kernel and r.kernel_in_ideal)
    return failed == 0, f"{checked} simple polyominoes, {failed} failures at degree 3"


def c4_simple_no_zigzag():
    found = 0
    checked = 0
    for P in simple_polyominoes_upto(8):
        checked += 1
        found += find_zigzag_walk(P) is not None  # a walk or an inconclusive result both count
    return found == 0, f"{checked} simple polyominoes, {found} walks or inconclusive"


def c5_equivalence():
    bad = 0
    checked = 0
    for P in _wcps_upto(11):
        checked += 1
        config = find_any_prime_configuration(P) is not None
        walk = find_zigzag_walk(P)
        no_walk = walk is None
        bad += config != no_walk
    return bad == 0 and checked > 0, f"{checked} weakly closed paths, {bad} exceptions"


def c6_recipe_oracle():
    failed = 0
    checked = 0
    for P in _wcps_upto(11):
        w = find_any_prime_configuration(P)
        if w is None:
            continue
        checked += 1
        r = toric_equality_report(P, hole_toric_map(P, marked_set_for_configuration(P, w)), 4)
        failed += not r.passed
    return failed == 0 and checked > 0, f"{checked} configured paths, {failed} failures at degree 4"


def c7_fixtures():
    notes = []
    v6 = classify(load_fixture("F6"))
    ok6 = v6.status == PRIME and v6.rule == RULE_L_CONFIG
    notes.append(f"F6 {v6.status}/{v6.rule}")
    F7 = load_fixture("F7")
    minimal = minimal_unconfigured_weakly_closed_path(15)
    smaller = minimal_unconfigured_weakly_closed_path(13)
    v7 = classify(F7)
    ok7 = (minimal == F7 and smaller is None and v7.status == NOT_PRIME
           and isinstance(v7.evidence, ZigZagWalk) and verify_zigzag_walk(F7, v7.evidence))
    notes.append(f"F7 {len(F7)} cells minimal {minimal == F7 and smaller is None}, {v7.status}")
    F4 = load_fixture("F4")
    ok4 = find_L_configuration(F4) is not None and find_zigzag_walk(F4) is None
    notes.append(f"F4 L-config and no walk {ok4}")
    m1, m2 = len(inner_2_minors(load_fixture("F1"))), len(inner_2_minors(load_fixture("F2")))
    notes.append(f"minors F1={m1} F2={m2}")
    ok = ok6 and ok7 and ok4 and m1 == 1 and m2 == 9 and recognize_weakly_closed_path(F7) is not None
    return ok, "; ".join(notes)


def c8_round_trips():
    cycles = 0
    bad = 0
    for P in polyominoes_upto(6):
        G = build_graph(P)
        for c in iter_cycles(G, 8):
            cycles += 1
            lc = cycle_to_primitive_cycle(G, c)
            if not is_lattice_cycle(P, lc) or primitive_cycle_to_graph_cycle(P, lc) != c.canonical():
                bad += 1
    text_bad = 0
    for name in FIXTURES:
        P = load_fixture(name)
        if render_ascii(P) != fixture_text(name).rstrip("\n") or parse_ascii(render_ascii(P)) != P:
            text_bad += 1
    return bad == 0 and text_bad == 0, f"{cycles} cycles, {bad} round-trip failures; {text_bad} fixture text mismatches"


def c9_audit():
    report = conjecture_sweep(8)
    return not report.violations, f"{report.total} polyominoes, {len(report.violations)} violations"


CRITERIA = [
    (1, "enumeration counts with BFS oracle", 10, c1_enumeration),
    (2, "weak chordality of simple collections", 120, c2_weak_chordality),
    (3, "toric equality shadow at degree 3", 300, c3_toric_shadow),
    (4, "simple polyominoes have no zig-zag walk", 600, c4_simple_no_zigzag),
    (5, "configuration iff no zig-zag walk", 900, c5_equivalence),
    (6, "configuration recipes pass the degree-4 check", 1800, c6_recipe_oracle),
    (7, "fixture regressions", None, c7_fixtures),
    (8, "cycle and text round-trips", None, c8_round_trips),
    (9, "consistency audit over the 8-cell sweep", None, c9_audit),
]


def evaluate(number, title, limit, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    within = limit is None or dt < limit
    passed = ok and within
    budget = f"limit {limit}s" if limit is not None else "no limit"
    line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title} - {detail} [{dt:.1f}s, {budget}]"
    return passed, line


@pytest.mark.parametrize("number, title, limit, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn, acceptance_log):
    passed, line = evaluate(number, title, limit, fn)
    acceptance_log.append(line)
    print(line)
    assert passed, line


if __name__ == "__main__":
    for c in CRITERIA:
        print(evaluate(*c)[1], flush=True)
