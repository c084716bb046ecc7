"""Cells, collections of cells and the lattice geometry attached to them.

A cell is identified with its lower left corner, so the same ``Point`` type
serves for lattice vertices and for cells.  Collections are immutable; all
derived data (vertex set, components, holes, intervals, blocks) is computed
lazily and cached on the instance.
"""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import DegenerateIntervalError, EmptyCollectionError

HORIZONTAL = "H"
VERTICAL = "V"
ORIENTATIONS = (HORIZONTAL, VERTICAL)

_EDGE_NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_VERTEX_NEIGHBOURS = tuple(
    (dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)
)


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])


# A cell is stored as its lower left corner.
Cell = Point


def cell_key(c: Point) -> tuple[int, int]:
    """Sort key for cells and points: by row, then column."""
    return (c[1], c[0])


def cell_corners(c: Point) -> tuple[Point, Point, Point, Point]:
    """Corners of a cell: lower left, lower right, upper left, upper right."""
    x, y = c
    return (Point(x, y), Point(x + 1, y), Point(x, y + 1), Point(x + 1, y + 1))


class LatticeInterval(NamedTuple):
    """The lattice rectangle ``[lo, hi]``."""

    lo: Point
    hi: Point

    @classmethod
    def spanning(cls, p: Point, q: Point) -> "LatticeInterval":
        return cls(Point(min(p[0], q[0]), min(p[1], q[1])), Point(max(p[0], q[0]), max(p[1], q[1])))

    @property
    def width(self) -> int:
        return self.hi.x - self.lo.x

    @property
    def height(self) -> int:
        return self.hi.y - self.lo.y

    @property
    def is_proper(self) -> bool:
        return self.lo.x < self.hi.x and self.lo.y < self.hi.y

    @property
    def diagonal(self) -> tuple[Point, Point]:
        return (self.lo, self.hi)

    @property
    def anti_diagonal(self) -> tuple[Point, Point]:
        return (Point(self.lo.x, self.hi.y), Point(self.hi.x, self.lo.y))

    @property
    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (self.lo, self.hi) + self.anti_diagonal

    def opposite(self, corner: Point) -> Point:
        """The corner diagonally across from ``corner``."""
        return Point(self.lo.x + self.hi.x - corner[0], self.lo.y + self.hi.y - corner[1])

    def contains(self, p: Point) -> bool:
        return self.lo.x <= p[0] <= self.hi.x and self.lo.y <= p[1] <= self.hi.y

    def points(self) -> list[Point]:
        return [
            Point(x, y)
            for y in range(self.lo.y, self.hi.y + 1)
            for x in range(self.lo.x, self.hi.x + 1)
        ]

    def intersection(self, other: "LatticeInterval") -> "LatticeInterval | None":
        lo = Point(max(self.lo.x, other.lo.x), max(self.lo.y, other.lo.y))
        hi = Point(min(self.hi.x, other.hi.x), min(self.hi.y, other.hi.y))
        if lo.x > hi.x or lo.y > hi.y:
            return None
        return LatticeInterval(lo, hi)


class EdgeInterval(NamedTuple):
    """A horizontal or vertical run of unit edges on the line ``line``.

    For a horizontal interval the points are ``(t, line)`` for ``lo <= t <= hi``;
    for a vertical one they are ``(line, t)``.
    """

    orientation: str
    line: int
    lo: int
    hi: int
    maximal: bool = True

    def contains(self, p: Point) -> bool:
        if self.orientation == HORIZONTAL:
            return p[1] == self.line and self.lo <= p[0] <= self.hi
        return p[0] == self.line and self.lo <= p[1] <= self.hi

    def points(self) -> list[Point]:
        if self.orientation == HORIZONTAL:
            return [Point(t, self.line) for t in range(self.lo, self.hi + 1)]
        return [Point(self.line, t) for t in range(self.lo, self.hi + 1)]

    def crossing(self, other: "EdgeInterval") -> Point | None:
        """Intersection point with an interval of the other orientation."""
        if self.orientation == other.orientation:
            raise ValueError("crossing needs one horizontal and one vertical interval")
        h, v = (self, other) if self.orientation == HORIZONTAL else (other, self)
        p = Point(v.line, h.line)
        if h.contains(p) and v.contains(p):
            return p
        return None


class Block(NamedTuple):
    orientation: str
    cells: tuple[Point, ...]
    maximal: bool = True

    def __len__(self) -> int:  # type: ignore[override]
        return len(self.cells)

    @property
    def first(self) -> Point:
        return self.cells[0]

    @property
    def last(self) -> Point:
        return self.cells[-1]

    def vertices(self) -> frozenset[Point]:
        return frozenset(p for c in self.cells for p in cell_corners(c))


class CellCollection:
    """A non-empty finite set of cells of Z^2."""

    __slots__ = ("cells", "__dict__")

    def __init__(self, cells: Iterable):
        cs = frozenset(Point(int(c[0]), int(c[1])) for c in cells)
        if not cs:
            raise EmptyCollectionError()
        self.cells: frozenset[Point] = cs

    # -- basic protocol ---------------------------------------------------
    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.ordered)

    def __contains__(self, c) -> bool:
        return c in self.cells

    def __eq__(self, other) -> bool:
        return isinstance(other, CellCollection) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"CellCollection({[tuple(c) for c in self.ordered]})"

    # -- cached derived data ----------------------------------------------
    @cached_property
    def ordered(self) -> tuple[Point, ...]:
        return tuple(sorted(self.cells, key=cell_key))

    @cached_property
    def vertex_set(self) -> frozenset[Point]:
        return frozenset(p for c in self.cells for p in cell_corners(c))

    @cached_property
    def bounding_box(self) -> LatticeInterval:
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        return LatticeInterval(Point(min(xs), min(ys)), Point(max(xs) + 1, max(ys) + 1))

    @cached_property
    def components(self) -> tuple["CellCollection", ...]:
        return tuple(CellCollection(comp) for comp in _flood_components(self.cells, _EDGE_NEIGHBOURS))

    @cached_property
    def holes(self) -> tuple["CellCollection", ...]:
        return _holes(self)

    @cached_property
    def horizontal_intervals(self) -> tuple[EdgeInterval, ...]:
        return _maximal_edge_intervals(self.cells, HORIZONTAL)

    @cached_property
    def vertical_intervals(self) -> tuple[EdgeInterval, ...]:
        return _maximal_edge_intervals(self.cells, VERTICAL)

    @cached_property
    def inner_intervals(self) -> tuple[LatticeInterval, ...]:
        return _inner_intervals(self.cells)

    @cached_property
    def interval_index(self) -> dict[Point, tuple[int, int]]:
        """Map each vertex to the indices of its maximal (vertical, horizontal) intervals."""
        v_of = {}
        for i, iv in enumerate(self.vertical_intervals):
            for p in iv.points():
                v_of[p] = i
        h_of = {}
        for j, iv in enumerate(self.horizontal_intervals):
            for p in iv.points():
                h_of[p] = j
        return {p: (v_of[p], h_of[p]) for p in self.vertex_set}

    def is_polyomino(self) -> bool:
        return len(self.components) == 1

    def translate(self, dx: int, dy: int) -> "CellCollection":
        return CellCollection((c.x + dx, c.y + dy) for c in self.cells)


# -- module level operations ---------------------------------------------------

def vertices(P: CellCollection) -> frozenset[Point]:
    """All corners of all cells of ``P``."""
    return P.vertex_set


def edges(P: CellCollection) -> frozenset[tuple[Point, Point]]:
    """Unit edges of ``P`` as ordered point pairs."""
    out = set()
    for c in P.cells:
        ll, lr, ul, ur = cell_corners(c)
        out.update(((ll, lr), (ul, ur), (ll, ul), (lr, ur)))
    return frozenset(out)


def connected_components(P: CellCollection) -> list[CellCollection]:
    return list(P.components)


def is_weakly_connected(P: CellCollection) -> bool:
    return len(_flood_components(P.cells, _VERTEX_NEIGHBOURS)) == 1


def holes(P: CellCollection) -> list[CellCollection]:
    return list(P.holes)


def is_simple(P: CellCollection) -> bool:
    return not P.holes


def maximal_edge_intervals(P: CellCollection, orientation: str) -> list[EdgeInterval]:
    if orientation == HORIZONTAL:
        return list(P.horizontal_intervals)
    if orientation == VERTICAL:
        return list(P.vertical_intervals)
    raise ValueError(f"unknown orientation {orientation!r}")


def inner_intervals(P: CellCollection) -> list[LatticeInterval]:
    return list(P.inner_intervals)


def cells_of_interval(interval: LatticeInterval) -> list[Point]:
    if not interval.is_proper:
        raise DegenerateIntervalError()
    lo, hi = interval
    return [Point(x, y) for y in range(lo.y, hi.y) for x in range(lo.x, hi.x)]


def is_inner(P: CellCollection, interval: LatticeInterval) -> bool:
    return interval.is_proper and all(c in P.cells for c in cells_of_interval(interval))


def maximal_blocks(P: CellCollection, orientation: str) -> list[Block]:
    """Maximal runs of consecutive cells in a row (``H``) or column (``V``)."""
    cells = P.cells
    if orientation == HORIZONTAL:
        step = (1, 0)
    elif orientation == VERTICAL:
        step = (0, 1)
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    out = []
    for c in P.ordered:
        if (c.x - step[0], c.y - step[1]) in cells:
            continue
        run = [c]
        nxt = c + step
        while nxt in cells:
            run.append(nxt)
            nxt = nxt + step
        out.append(Block(orientation, tuple(run)))
    return out


def block_containing(P: CellCollection, cell: Point, orientation: str) -> Block:
    for b in maximal_blocks(P, orientation):
        if cell in b.cells:
            return b
    raise KeyError(cell)


def canonicalize(P: CellCollection) -> CellCollection:
    """Translate so that the lower left corner of the bounding box is the origin."""
    lo = P.bounding_box.lo
    if lo == (0, 0):
        return P
    return P.translate(-lo.x, -lo.y)


# -- dihedral group -------------------------------------------------------------
# Index k acts on points by the integer matrix DIHEDRAL[k]; 0 is the identity.
DIHEDRAL = (
    ((1, 0), (0, 1)),
    ((0, -1), (1, 0)),
    ((-1, 0), (0, -1)),
    ((0, 1), (-1, 0)),
    ((-1, 0), (0, 1)),
    ((1, 0), (0, -1)),
    ((0, 1), (1, 0)),
    ((0, -1), (-1, 0)),
)


def transform_point(k: int, p) -> Point:
    (a, b), (c, d) = DIHEDRAL[k]
    return Point(a * p[0] + b * p[1], c * p[0] + d * p[1])


def transform_cell(k: int, c) -> Point:
    pts = [transform_point(k, q) for q in cell_corners(Point(*c))]
    return Point(min(q.x for q in pts), min(q.y for q in pts))


def inverse_transform(k: int) -> int:
    (a, b), (c, d) = DIHEDRAL[k]
    # orthogonal matrices: inverse is the transpose
    return DIHEDRAL.index(((a, c), (b, d)))


def transform_collection(k: int, P: CellCollection) -> CellCollection:
    return CellCollection(transform_cell(k, c) for c in P.cells)


# -- helpers ----------------------------------------------------------------------

def _flood_components(cells: frozenset, steps) -> list[list[Point]]:
    seen: set = set()
    comps = []
    for start in sorted(cells, key=cell_key):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            cx, cy = queue.popleft()
            for dx, dy in steps:
                nb = Point(cx + dx, cy + dy)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    queue.append(nb)
        comps.append(sorted(comp, key=cell_key))
    return comps


def _holes(P: CellCollection) -> tuple[CellCollection, ...]:
    box = P.bounding_box
    x0, y0, x1, y1 = box.lo.x - 1, box.lo.y - 1, box.hi.x, box.hi.y
    cells = P.cells
    start = Point(x0, y0)
    outside = {start}
    queue = deque([start])
    while queue:
        cx, cy = queue.popleft()
        for dx, dy in _EDGE_NEIGHBOURS:
            nx, ny = cx + dx, cy + dy
            if x0 <= nx <= x1 and y0 <= ny <= y1:
                nb = Point(nx, ny)
                if nb not in cells and nb not in outside:
                    outside.add(nb)
                    queue.append(nb)
    enclosed = frozenset(
        Point(x, y)
        for y in range(box.lo.y, box.hi.y)
        for x in range(box.lo.x, box.hi.x)
        if (x, y) not in cells and (x, y) not in outside
    )
    return tuple(CellCollection(comp) for comp in _flood_components(enclosed, _EDGE_NEIGHBOURS))


def _maximal_edge_intervals(cells: frozenset, orientation: str) -> tuple[EdgeInterval, ...]:
    # unit edges keyed by (line, start coordinate)
    units = set()
    for x, y in cells:
        if orientation == HORIZONTAL:
            units.add((y, x))
            units.add((y + 1, x))
        else:
            units.add((x, y))
            units.add((x + 1, y))
    out = []
    for line, t in sorted(units):
        if (line, t - 1) in units:
            continue
        end = t + 1
        while (line, end) in units:
            end += 1
        out.append(EdgeInterval(orientation, line, t, end))
    return tuple(out)


def _inner_intervals(cells: frozenset) -> tuple[LatticeInterval, ...]:
    out = []
    for c in sorted(cells, key=cell_key):
        # widest row run starting at c
        max_w = 0
        while Point(c.x + max_w, c.y) in cells:
            max_w += 1
        for w in range(1, max_w + 1):
            h = 0
            while all(Point(c.x + i, c.y + h) in cells for i in range(w)):
                h += 1
                out.append(LatticeInterval(c, Point(c.x + w, c.y + h)))
    out.sort(key=lambda iv: (iv.lo.y, iv.lo.x, iv.hi.y, iv.hi.x))
    return tuple(out)
