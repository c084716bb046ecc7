import pytest

from polyideal.errors import EmptyCollectionError
from polyideal.grid import (
    DIHEDRAL,
    HORIZONTAL,
    VERTICAL,
    CellCollection,
    LatticeInterval,
    Point,
    canonicalize,
    inverse_transform,
    is_simple,
    is_weakly_connected,
    maximal_blocks,
    maximal_edge_intervals,
    transform_collection,
)
from polyideal.io import load_fixture


def test_empty_collection_rejected():
    with pytest.raises(EmptyCollectionError):
        CellCollection([])


def test_inner_interval_counts():
    assert len(load_fixture("F1").inner_intervals) == 1
    assert len(load_fixture("F2").inner_intervals) == 9
    # the 3x3 ring: 8 unit cells plus 2-cell bars (4 sides x 2) plus 4 three-cell sides
    assert len(load_fixture("F4").inner_intervals) == 8 + 8 + 4


def test_inner_intervals_are_inner():
    P = load_fixture("F4")
    for iv in P.inner_intervals:
        for x in range(iv.lo.x, iv.hi.x):
            for y in range(iv.lo.y, iv.hi.y):
                assert Point(x, y) in P.cells


def test_holes_of_ring():
    P = load_fixture("F4")
    assert [sorted(h.cells) for h in P.holes] == [[Point(1, 1)]]
    assert not is_simple(P)


def test_simple_and_connectivity():
    assert is_simple(load_fixture("F3"))
    F5 = load_fixture("F5")
    assert is_weakly_connected(F5)
    assert not F5.is_polyomino()
    assert not is_weakly_connected(CellCollection([(0, 0), (2, 0)]))


def test_diagonal_gap_encloses_a_hole():
    # seven cells around (1,1) with the top-right corner cell missing
    P = CellCollection([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)])
    assert not is_simple(P)
    assert sorted(P.holes[0].cells) == [Point(1, 1)]


def test_maximal_edge_intervals_ring():
    P = load_fixture("F4")
    hs = maximal_edge_intervals(P, HORIZONTAL)
    vs = maximal_edge_intervals(P, VERTICAL)
    # the edges around the hole belong to the ring cells, so every line is one full run
    assert [(iv.line, iv.lo, iv.hi) for iv in hs] == [(y, 0, 3) for y in range(4)]
    assert len(vs) == 4


def test_interval_index_covers_vertices():
    P = load_fixture("F6")
    assert set(P.interval_index) == set(P.vertex_set)


def test_lattice_interval_geometry():
    iv = LatticeInterval(Point(0, 0), Point(2, 1))
    assert iv.opposite(Point(0, 0)) == Point(2, 1)
    assert iv.opposite(Point(2, 0)) == Point(0, 1)
    assert iv.contains(Point(1, 1)) and not iv.contains(Point(3, 0))
    assert len(iv.points()) == 6
    assert iv.intersection(LatticeInterval(Point(2, 0), Point(3, 3))) == LatticeInterval(Point(2, 0), Point(2, 1))


def test_maximal_blocks_of_F6():
    P = load_fixture("F6")
    rows = sorted(tuple(b.cells) for b in maximal_blocks(P, HORIZONTAL))
    assert (Point(1, 0), Point(2, 0), Point(3, 0)) in rows


@pytest.mark.parametrize("k", range(len(DIHEDRAL)))
def test_dihedral_inverse(k):
    P = load_fixture("F6")
    Q = transform_collection(inverse_transform(k), transform_collection(k, P))
    assert Q == P


def test_canonicalize_translates_to_origin():
    P = load_fixture("F6").translate(5, -3)
    Q = canonicalize(P)
    assert Q == load_fixture("F6")
    assert Q.bounding_box.lo == Point(0, 0)
