import pytest

from _support import cells_of
from polyideal.algebra import hole_toric_map, toric_equality_report
from polyideal.enumerate import enumerate_weakly_closed_paths
from polyideal.errors import NotPolyominoError
from polyideal.grid import Point
from polyideal.io import load_fixture
from polyideal.pathclass import (
    LADDER,
    WEAK_L,
    WEAK_LADDER,
    ConfigurationWitness,
    find_any_prime_configuration,
    find_L_configuration,
    find_ladder,
    find_weak_L_configuration,
    find_weak_ladder,
    marked_set_for_configuration,
    recognize_closed_path,
    recognize_weakly_closed_path,
    verify_configuration,
    verify_weakly_closed_path,
)

# configuration-free paths contain one of these; each was found by the
# enumeration and its marked set passed the degree-3 toric check
WEAK_LADDER_H = ".##..\n##.##\n#...#\n##.##\n.###."
WEAK_LADDER_V = ".###.\n##.#.\n#...#\n##.##\n.###."
WEAK_L_17 = "..###.\n.##.##\n.#...#\n#...##\n#####."
LADDER_17 = ".###..\n##.##.\n#...##\n##...#\n.####."


def _pts(*pairs):
    return frozenset(Point(*p) for p in pairs)


def test_F6_is_weakly_closed_path():
    P = load_fixture("F6")
    w = recognize_weakly_closed_path(P)
    assert w is not None
    assert w.hooking_corner == Point(1, 1)
    assert w.n == 9
    assert verify_weakly_closed_path(P, w)
    assert recognize_closed_path(P) is None


def test_ring_is_closed_not_weakly_closed():
    P = load_fixture("F4")
    assert recognize_closed_path(P) is not None
    assert recognize_weakly_closed_path(P) is None


def test_not_polyomino_raises():
    with pytest.raises(NotPolyominoError):
        recognize_weakly_closed_path(load_fixture("F5"))


def test_simple_shapes_are_not_paths():
    for name in ("F1", "F2", "F3"):
        assert recognize_weakly_closed_path(load_fixture(name)) is None


def test_tampered_path_witness_fails():
    P = load_fixture("F6")
    w = recognize_weakly_closed_path(P)
    bad = type(w)(w.ordering, Point(0, 0))
    assert not verify_weakly_closed_path(P, bad)


def test_F6_L_configuration():
    P = load_fixture("F6")
    w = find_L_configuration(P)
    assert w.cells == tuple(Point(*c) for c in ((1, 0), (2, 0), (3, 0), (3, 1), (3, 2)))
    assert w.transform == 0
    assert verify_configuration(P, w)
    assert marked_set_for_configuration(P, w) == _pts((3, 0), (4, 0), (3, 1), (4, 1))


def test_F4_has_L_configuration():
    P = load_fixture("F4")
    w = find_L_configuration(P)
    assert w is not None and verify_configuration(P, w)
    assert find_weak_L_configuration(P) is None
    assert find_weak_ladder(P) is None


def test_witness_round_trip():
    P = load_fixture("F6")
    w = find_any_prime_configuration(P)
    again = ConfigurationWitness.from_dict(w.to_dict())
    assert again == w
    assert verify_configuration(P, again)


def test_tampered_configuration_fails():
    P = load_fixture("F6")
    w = find_L_configuration(P)
    shifted = ConfigurationWitness.from_dict({**w.to_dict(), "cells": [[x, y + 1] for x, y in w.to_dict()["cells"]]})
    assert not verify_configuration(P, shifted)
    assert not verify_configuration(P, ConfigurationWitness.from_dict({**w.to_dict(), "kind": "nonsense"}))
    dropped = ConfigurationWitness.from_dict({**w.to_dict(), "cells": w.to_dict()["cells"][:4]})
    assert not verify_configuration(P, dropped)


def test_staircase_ladder():
    P = cells_of("..#\n.##\n##.\n#..")
    w = find_ladder(P)
    assert w is not None and w.kind == LADDER
    assert len(w.blocks) >= 3
    assert verify_configuration(P, w)
    assert find_ladder(P, min_steps=len(w.blocks) + 1) is None


def test_ladder_min_steps_validation():
    with pytest.raises(ValueError):
        find_ladder(load_fixture("F6"), min_steps=0)


def test_F7_has_no_configuration():
    P = load_fixture("F7")
    assert recognize_weakly_closed_path(P) is not None
    assert find_any_prime_configuration(P) is None


@pytest.mark.parametrize("text, kind, c_block, marked", [
    (WEAK_LADDER_H, WEAK_LADDER, "H", ((3, 4), (3, 5), (4, 4), (5, 4))),
    (WEAK_LADDER_V, WEAK_LADDER, "V", ((4, 3), (4, 4), (4, 5), (5, 3))),
    (WEAK_L_17, WEAK_L, None, ((0, 0), (0, 1), (1, 0), (1, 1))),
    (LADDER_17, LADDER, None, ((3, 4), (3, 5), (4, 4), (4, 5), (5, 4))),
])
def test_configuration_recipes(text, kind, c_block, marked):
    P = cells_of(text)
    assert find_L_configuration(P) is None
    w = find_any_prime_configuration(P)
    assert w.kind == kind and w.c_block == c_block
    assert verify_configuration(P, w)
    m = marked_set_for_configuration(P, w)
    assert m == _pts(*marked)
    assert toric_equality_report(P, hole_toric_map(P, m), 3).passed


def test_weak_ladder_recipe_contains_hooking_corner():
    P = cells_of(WEAK_LADDER_H)
    w = find_weak_ladder(P)
    assert recognize_weakly_closed_path(P).hooking_corner in marked_set_for_configuration(P, w)


# regression baseline from the exhaustive path growth
@pytest.mark.parametrize("n, count", [(6, 0), (7, 4), (8, 0), (9, 8), (10, 0), (11, 32)])
def test_weakly_closed_path_counts(n, count):
    paths = list(enumerate_weakly_closed_paths(n))
    assert len(paths) == count
    assert len({frozenset(P.cells) for P in paths}) == count


def test_F6_among_nine_cell_paths():
    assert load_fixture("F6") in list(enumerate_weakly_closed_paths(9))


@pytest.mark.slow
def test_recipes_beyond_eleven_cells():
    # the L and weak ladder recipes both get exercised here
    kinds = set()
    for n in (13, 15):
        for P in enumerate_weakly_closed_paths(n):
            w = find_any_prime_configuration(P)
            if w is None:
                continue
            kinds.add(w.kind)
            m = marked_set_for_configuration(P, w)
            assert toric_equality_report(P, hole_toric_map(P, m), 3).passed, sorted(P.cells)
    assert {"L", WEAK_LADDER} <= kinds
