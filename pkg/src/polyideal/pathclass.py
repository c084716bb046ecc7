"""Closed and weakly closed paths, and the four block configurations.

Configuration witnesses carry the index of the dihedral transformation that
moves them into a fixed reference position.  Marked-set recipes are written
once for that position and mapped back with the inverse transformation.

Reference positions (after applying ``transform``):

* L-configuration: ``C1 -> C3`` runs east, ``C3 -> C5`` runs north.
* weak L-configuration: ``[A, B]`` horizontal with ``B`` the right cell,
  ``[D, F]`` rising from the top edge of ``B``.
* ladder: horizontal blocks, the last block ``B_m`` below ``B_{m-1}`` and
  attached under its rightmost cell.
* weak ladder: horizontal block ``C_1 .. C_n`` read left to right, ``C``
  touching the upper left corner of ``C_1``, ``D`` below the block.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotPolyominoError, UnsupportedOrientationError
from .grid import (
    DIHEDRAL,
    HORIZONTAL,
    VERTICAL,
    CellCollection,
    Point,
    cell_corners,
    cell_key,
    inverse_transform,
    maximal_blocks,
    transform_cell,
    transform_point,
)

L_CONFIG = "L"
WEAK_L = "weak-L"
LADDER = "ladder"
WEAK_LADDER = "weak-ladder"
KINDS = (L_CONFIG, WEAK_L, LADDER, WEAK_LADDER)

_E, _W, _N, _S = Point(1, 0), Point(-1, 0), Point(0, 1), Point(0, -1)


def _corners(cells) -> frozenset[Point]:
    return frozenset(p for c in cells for p in cell_corners(c))


def _edge_adjacent(a: Point, b: Point) -> bool:
    return abs(a.x - b.x) + abs(a.y - b.y) == 1


# -- paths ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeaklyClosedPathWitness:
    ordering: tuple[Point, ...]  # A_1 .. A_n, A_n = A_0
    hooking_corner: Point

    @property
    def n(self) -> int:
        return len(self.ordering)

    def to_dict(self) -> dict:
        return {
            "ordering": [list(c) for c in self.ordering],
            "hooking_corner": list(self.hooking_corner),
        }


def _require_polyomino(P: CellCollection) -> None:
    if not P.is_polyomino():
        raise NotPolyominoError()


def _adjacency(P: CellCollection) -> dict[Point, list[Point]]:
    cells = P.cells
    return {
        c: sorted((c + d for d in (_E, _W, _N, _S) if c + d in cells), key=cell_key)
        for c in P.ordered
    }


def _walk_path(adj, start: Point) -> list[Point]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [c for c in adj[cur] if c != prev]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def _far_cells_disjoint(order: list[Point]) -> bool:
    """``V(A_i) and V(A_j)`` disjoint whenever ``j`` is at cyclic distance > 2."""
    n = len(order)
    corners = [frozenset(cell_corners(c)) for c in order]
    for i in range(n):
        for j in range(i + 1, n):
            gap = min(j - i, n - (j - i))
            if gap > 2 and corners[i] & corners[j]:
                return False
    return True


def recognize_closed_path(P: CellCollection) -> tuple[Point, ...] | None:
    """Cyclic ordering where consecutive cells share an edge, or ``None``."""
    _require_polyomino(P)
    adj = _adjacency(P)
    if len(P) < 6 or any(len(v) != 2 for v in adj.values()):
        return None
    order = _walk_path(adj, P.ordered[0])
    if len(order) != len(P) or not _far_cells_disjoint(order):
        return None
    return tuple(order)


def recognize_weakly_closed_path(P: CellCollection) -> WeaklyClosedPathWitness | None:
    """Witness ``A_1 .. A_n`` with hooking corner, or ``None``.

    The cell-adjacency graph must be a simple path whose end cells meet in a
    single vertex.  ``A_1`` is the end cell that comes first in (row, column)
    order.
    """
    _require_polyomino(P)
    n = len(P)
    if n <= 6:
        return None
    adj = _adjacency(P)
    degrees = [len(v) for v in adj.values()]
    if any(d == 0 or d > 2 for d in degrees) or degrees.count(1) != 2:
        return None
    ends = sorted((c for c, v in adj.items() if len(v) == 1), key=cell_key)
    order = _walk_path(adj, ends[0])
    if len(order) != n:
        return None
    witness = _check_weakly_closed(order)
    return witness


def _check_weakly_closed(order: list[Point]) -> WeaklyClosedPathWitness | None:
    n = len(order)
    if n <= 6 or len(set(order)) != n:
        return None
    for a, b in zip(order, order[1:]):
        if not _edge_adjacent(a, b):
            return None
    V = [frozenset(cell_corners(c)) for c in order]
    # A_0 = A_n is order[-1], A_1 is order[0]
    hook = V[-1] & V[0]
    if len(hook) != 1:
        return None
    if V[1] & V[-1] or V[-2] & V[0]:
        return None
    if not _far_cells_disjoint(order):
        return None
    return WeaklyClosedPathWitness(tuple(order), next(iter(hook)))


def verify_weakly_closed_path(P: CellCollection, w: WeaklyClosedPathWitness) -> bool:
    """Re-check the three defining conditions from scratch."""
    order = list(w.ordering)
    if set(order) != set(P.cells) or len(order) != len(P):
        return False
    checked = _check_weakly_closed(order)
    return checked is not None and checked.hooking_corner == w.hooking_corner


# -- configuration witnesses ----------------------------------------------------------

@dataclass(frozen=True)
class ConfigurationWitness:
    kind: str
    cells: tuple[Point, ...]
    blocks: tuple[tuple[Point, ...], ...] = ()
    c: Point | None = None
    d: Point | None = None
    contacts: tuple[Point, ...] = ()
    transform: int = 0
    c_block: str | None = None
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "cells": [list(c) for c in self.cells],
            "blocks": [[list(c) for c in b] for b in self.blocks],
            "contacts": [list(p) for p in self.contacts],
            "transform": self.transform,
        }
        if self.c is not None:
            out["c"] = list(self.c)
        if self.d is not None:
            out["d"] = list(self.d)
        if self.c_block is not None:
            out["c_block"] = self.c_block
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "ConfigurationWitness":
        return cls(
            kind=d["kind"],
            cells=tuple(Point(*c) for c in d["cells"]),
            blocks=tuple(tuple(Point(*c) for c in b) for b in d.get("blocks", [])),
            c=Point(*d["c"]) if "c" in d else None,
            d=Point(*d["d"]) if "d" in d else None,
            contacts=tuple(Point(*p) for p in d.get("contacts", [])),
            transform=d.get("transform", 0),
            c_block=d.get("c_block"),
        )


def _tc(k: int, cells) -> tuple[Point, ...]:
    return tuple(transform_cell(k, c) for c in cells)


def _first_transform(pred) -> int:
    for k in range(len(DIHEDRAL)):
        if pred(k):
            return k
    raise UnsupportedOrientationError()


# L-configuration -----------------------------------------------------------------

def _l_reference(k: int, chain) -> bool:
    c1, c2, c3, c4, c5 = _tc(k, chain)
    return c2 - c1 == _E and c3 - c2 == _E and c4 - c3 == _N and c5 - c4 == _N


def _normalize_l(chain) -> tuple[tuple[Point, ...], int]:
    rev = tuple(reversed(chain))
    best = None
    for k in range(len(DIHEDRAL)):
        for cand in (chain, rev):
            if _l_reference(k, cand):
                best = (cand, k)
                break
        if best:
            break
    if best is None:
        raise UnsupportedOrientationError()
    return best


def iter_L_configurations(P: CellCollection):
    cells = P.cells
    for c3 in P.ordered:
        for dh in (_W, _E):
            for dv in (_S, _N):
                chain = (c3 + dh + dh, c3 + dh, c3, c3 + dv, c3 + dv + dv)
                if all(c in cells for c in chain):
                    if cell_key(chain[0]) > cell_key(chain[-1]):
                        chain = tuple(reversed(chain))
                    _, k = _normalize_l(chain)
                    yield ConfigurationWitness(L_CONFIG, chain, transform=k)


def find_L_configuration(P: CellCollection) -> ConfigurationWitness | None:
    """Five cells ``C1..C5``: three in a row, then three in the orthogonal direction."""
    return next(iter_L_configurations(P), None)


def _verify_l(P: CellCollection, w: ConfigurationWitness) -> bool:
    if len(w.cells) != 5 or not all(c in P.cells for c in w.cells):
        return False
    c1, c2, c3, c4, c5 = w.cells
    d1, d2 = c2 - c1, c4 - c3
    if not (_edge_adjacent(c1, c2) and _edge_adjacent(c3, c4)):
        return False
    return c3 - c2 == d1 and c5 - c4 == d2 and d1.x * d2.x + d1.y * d2.y == 0


# helpers shared by the weak configurations ------------------------------------------

def _perp(orientation: str) -> tuple[Point, Point]:
    return (_S, _N) if orientation == HORIZONTAL else (_W, _E)


def _along(orientation: str) -> Point:
    return _E if orientation == HORIZONTAL else _N


def _diagonal_contacts(block) -> list[tuple[Point, Point]]:
    """(cell, shared corner) for the four cells meeting the block in one corner."""
    first, last = block[0], block[-1]
    horizontal = len(block) == 1 or last.y == first.y
    out = []
    if horizontal:
        for dy in (-1, 1):
            out.append((Point(first.x - 1, first.y + dy), Point(first.x, first.y + max(dy, 0))))
            out.append((Point(last.x + 1, last.y + dy), Point(last.x + 1, last.y + max(dy, 0))))
    else:
        for dx in (-1, 1):
            out.append((Point(first.x + dx, first.y - 1), Point(first.x + max(dx, 0), first.y)))
            out.append((Point(last.x + dx, last.y + 1), Point(last.x + max(dx, 0), last.y + 1)))
    return out


def _pure_corner_contact(P: CellCollection, c: Point, a1: Point) -> bool:
    """``c`` and the block meet at ``a1`` and nothing else of ``P`` sits at ``a1``.

    Of the four cells around ``a1`` exactly two (``c`` and one block cell,
    diagonally opposite) belong to ``P``.
    """
    around = [Point(a1.x - 1, a1.y - 1), Point(a1.x, a1.y - 1), Point(a1.x - 1, a1.y), Point(a1.x, a1.y)]
    return sum(1 for q in around if q in P.cells) == 2


def _shared_edge(a: Point, b: Point) -> tuple[Point, Point]:
    pts = sorted(frozenset(cell_corners(a)) & frozenset(cell_corners(b)), key=cell_key)
    return pts[0], pts[1]


def _on_same_maximal(P: CellCollection, orientation: str, p: Point, q: Point) -> bool:
    """Same maximal edge interval parallel to ``orientation``."""
    index = P.interval_index
    if orientation == HORIZONTAL:
        return p.y == q.y and index[p][1] == index[q][1]
    return p.x == q.x and index[p][0] == index[q][0]


def _block_orientation(block) -> str:
    return HORIZONTAL if block[0].y == block[-1].y else VERTICAL


# weak L-configuration ----------------------------------------------------------------

def _weak_l_reference(k: int, ab, pivot, df) -> bool:
    t_ab = _tc(k, ab)
    t_pivot = transform_cell(k, pivot)
    t_d, t_f = _tc(k, df)
    other = [c for c in t_ab if c != t_pivot][0]
    return t_pivot - other == _E and t_d - t_pivot == _N and t_f - t_d == _N


def iter_weak_L_configurations(P: CellCollection):
    cells = P.cells
    for orientation in (HORIZONTAL, VERTICAL):
        for blk in maximal_blocks(P, orientation):
            if len(blk) != 2:
                continue
            ab = blk.cells
            v_ab = _corners(ab)
            for pivot in ab:
                for side in _perp(orientation):
                    d, f = pivot + side, pivot + side + side
                    if d not in cells or f not in cells:
                        continue
                    shared = _corners((d, f)) & v_ab
                    if len(shared) != 2:
                        continue
                    a2, b2 = sorted(shared, key=cell_key)
                    for c, a1 in _diagonal_contacts(ab):
                        if c not in cells or c in (d, f):
                            continue
                        if _corners((c,)) & v_ab != {a1} or not _pure_corner_contact(P, c, a1):
                            continue
                        if not _on_same_maximal(P, orientation, a1, a2):
                            continue
                        k = _first_transform(lambda k: _weak_l_reference(k, ab, pivot, (d, f)))
                        yield ConfigurationWitness(
                            WEAK_L,
                            cells=tuple(sorted(set(ab) | {c, d, f}, key=cell_key)),
                            blocks=(ab, (d, f)),
                            c=c,
                            contacts=(a1, a2, b2),
                            transform=k,
                            extra={"pivot": pivot},
                        )


def find_weak_L_configuration(P: CellCollection) -> ConfigurationWitness | None:
    return next(iter_weak_L_configurations(P), None)


def _weak_l_pivot(w: ConfigurationWitness) -> Point:
    ab, df = w.blocks
    return [c for c in ab if _edge_adjacent(c, df[0])][0]


def _verify_weak_l(P: CellCollection, w: ConfigurationWitness) -> bool:
    if len(w.blocks) != 2 or w.c is None or len(w.contacts) != 3:
        return False
    ab, df = w.blocks
    cells = P.cells
    if not all(x in cells for x in (*ab, *df, w.c)):
        return False
    if len(ab) != 2 or len(df) < 2:
        return False
    orientation = _block_orientation(ab)
    if not _is_maximal_block(P, ab, orientation):
        return False
    if _block_orientation(df) == orientation or not _is_block(df):
        return False
    if w.c in ab or w.c in df:
        return False
    a1, a2, b2 = w.contacts
    v_ab = _corners(ab)
    if _corners((w.c,)) & v_ab != {a1} or not _pure_corner_contact(P, w.c, a1):
        return False
    if _corners(df) & v_ab != {a2, b2} or a2 == b2:
        return False
    return _on_same_maximal(P, orientation, a1, a2) and _on_same_maximal(P, orientation, a1, b2)


def _is_block(cells) -> bool:
    cells = list(cells)
    return all(_edge_adjacent(a, b) for a, b in zip(cells, cells[1:])) and (
        len({c.x for c in cells}) == 1 or len({c.y for c in cells}) == 1
    )


def _is_maximal_block(P: CellCollection, block, orientation: str) -> bool:
    if not _is_block(block) or len(block) < 2 or _block_orientation(block) != orientation:
        return False
    step = _along(orientation)
    lo = min(block, key=cell_key)
    hi = max(block, key=cell_key)
    return (lo - step) not in P.cells and (hi + step) not in P.cells


# ladders -------------------------------------------------------------------------------

def _ladder_graph(P: CellCollection, orientation: str):
    blocks = [b.cells for b in maximal_blocks(P, orientation) if len(b) >= 2]
    corners = [_corners(b) for b in blocks]
    contact = {}
    for i in range(len(blocks)):
        for j in range(len(blocks)):
            if i != j:
                shared = corners[i] & corners[j]
                if len(shared) == 2:
                    contact[(i, j)] = tuple(sorted(shared, key=cell_key))
    return blocks, contact


def _contacts_misaligned(P: CellCollection, orientation: str, s1, s2) -> bool:
    """``[a_i, b_i]`` not on the same edge interval as ``[a_{i+1}, b_{i+1}]``."""
    # a contact between parallel blocks is an edge perpendicular to the stacking
    return not _on_same_maximal(P, orientation, s1[0], s2[0])


def _ladder_paths(P: CellCollection, orientation: str, min_steps: int):
    blocks, contact = _ladder_graph(P, orientation)
    nbrs: dict[int, list[int]] = {}
    for i, j in contact:
        nbrs.setdefault(i, []).append(j)

    def extend(path):
        yield list(path)
        last = path[-1]
        for j in sorted(nbrs.get(last, ())):
            if j in path:
                continue
            if len(path) >= 2:
                prev = contact[(path[-2], last)]
                if not _contacts_misaligned(P, orientation, prev, contact[(last, j)]):
                    continue
            path.append(j)
            yield from extend(path)
            path.pop()

    for start in range(len(blocks)):
        for path in extend([start]):
            if len(path) >= min_steps:
                yield blocks, contact, path


def _ladder_witness(P, orientation, blocks, contact, path) -> ConfigurationWitness:
    bl = tuple(blocks[i] for i in path)
    k = None
    # read the ladder so that the hole lies north-east of the staircase
    for reading in (bl, bl[::-1]):
        for t in range(8):
            if _ladder_reference(t, reading) and _hole_north_east(P, t, reading):
                bl, k = reading, t
                break
        if k is not None:
            break
    if k is None:
        k = _first_transform(lambda k: _ladder_reference(k, bl))
    if bl[0] != tuple(blocks[i] for i in path)[0]:
        path = path[::-1]
    contacts = tuple(p for a, b in zip(path, path[1:]) for p in contact[(a, b)])
    return ConfigurationWitness(
        LADDER,
        cells=tuple(sorted({c for b in bl for c in b}, key=cell_key)),
        blocks=bl,
        contacts=contacts,
        transform=k,
    )


def _hole_north_east(P: CellCollection, k: int, blocks) -> bool:
    if not P.holes:
        return False
    hole = [transform_cell(k, c) for c in P.holes[0]]
    right = max(_tc(k, blocks[-2]), key=lambda c: c.x)
    return sum(h.x - right.x + h.y - right.y for h in hole) > 0


def _ladder_reference(k: int, blocks) -> bool:
    prev = sorted(_tc(k, blocks[-2]))
    last = sorted(_tc(k, blocks[-1]))
    if len({c.y for c in prev}) != 1 or len({c.y for c in last}) != 1:
        return False
    right = max(prev, key=lambda c: c.x)
    return (right + _S) in last and last[0].y == prev[0].y - 1


def find_ladder(P: CellCollection, min_steps: int = 3) -> ConfigurationWitness | None:
    """A ladder with at least ``min_steps`` blocks, extended to a maximal one."""
    if min_steps < 1:
        raise ValueError("min_steps must be positive")
    for orientation in (HORIZONTAL, VERTICAL):
        for blocks, contact, path in _ladder_paths(P, orientation, min_steps):
            path = _extend(P, orientation, contact, path, len(blocks))
            return _ladder_witness(P, orientation, blocks, contact, path)
    return None


def _extend(P, orientation, contact, path, n_blocks):
    """Grow a ladder greedily at both ends until no block can be attached."""
    path = list(path)

    def fits(a, b, c):
        return (a, b) in contact and (b, c) in contact and _contacts_misaligned(
            P, orientation, contact[(a, b)], contact[(b, c)])

    grown = True
    while grown:
        grown = False
        for j in range(n_blocks):
            if j in path:
                continue
            if fits(path[-2], path[-1], j):
                path.append(j)
                grown = True
                break
            if fits(j, path[0], path[1]):
                path.insert(0, j)
                grown = True
                break
    return path


def _verify_ladder(P: CellCollection, w: ConfigurationWitness, min_steps: int = 3) -> bool:
    bl = w.blocks
    if len(bl) < min_steps:
        return False
    orientation = _block_orientation(bl[0])
    if any(not _is_maximal_block(P, b, orientation) for b in bl):
        return False
    if len(set(bl)) != len(bl):
        return False
    segs = []
    for b1, b2 in zip(bl, bl[1:]):
        shared = _corners(b1) & _corners(b2)
        if len(shared) != 2:
            return False
        segs.append(tuple(sorted(shared, key=cell_key)))
    return all(_contacts_misaligned(P, orientation, s1, s2) for s1, s2 in zip(segs, segs[1:]))


# weak ladder ----------------------------------------------------------------------------

def _weak_ladder_reference(k: int, block, c) -> bool:
    tb = sorted(_tc(k, block))
    tc = transform_cell(k, c)
    if len({x.y for x in tb}) != 1:
        return False
    first = tb[0]
    return tc == Point(first.x - 1, first.y + 1)


def iter_weak_ladders(P: CellCollection):
    cells = P.cells
    for orientation in (HORIZONTAL, VERTICAL):
        for blk in maximal_blocks(P, orientation):
            if len(blk) < 2:
                continue
            block = blk.cells
            v_b = _corners(block)
            for c, a1 in _diagonal_contacts(block):
                if c not in cells or _corners((c,)) & v_b != {a1}:
                    continue
                if not _pure_corner_contact(P, c, a1):
                    continue
                for x in block:
                    for side in _perp(orientation):
                        d = x + side
                        if d not in cells or d == c or d in block:
                            continue
                        shared = _corners((d,)) & v_b
                        if len(shared) != 2:
                            continue
                        a2, b2 = sorted(shared, key=cell_key)
                        if _on_same_maximal(P, orientation, a1, a2):
                            continue
                        k = _first_transform(lambda k: _weak_ladder_reference(k, block, c))
                        yield ConfigurationWitness(
                            WEAK_LADDER,
                            cells=tuple(sorted(set(block) | {c, d}, key=cell_key)),
                            blocks=(block,),
                            c=c,
                            d=d,
                            contacts=(a1, a2, b2),
                            transform=k,
                            c_block=_c_block_orientation(P, c, orientation),
                        )


def _c_block_orientation(P: CellCollection, c: Point, block_orientation: str) -> str:
    """Orientation of the block through ``C``: perpendicular to the main block
    when ``C`` continues that way, otherwise parallel."""
    perp = VERTICAL if block_orientation == HORIZONTAL else HORIZONTAL
    step = _along(perp)
    if (c + step) in P.cells or (c - step) in P.cells:
        return perp
    return block_orientation


def find_weak_ladder(P: CellCollection) -> ConfigurationWitness | None:
    return next(iter_weak_ladders(P), None)


def _verify_weak_ladder(P: CellCollection, w: ConfigurationWitness) -> bool:
    if len(w.blocks) != 1 or w.c is None or w.d is None or len(w.contacts) != 3:
        return False
    block = w.blocks[0]
    orientation = _block_orientation(block)
    if not _is_maximal_block(P, block, orientation):
        return False
    if w.c not in P.cells or w.d not in P.cells or w.c == w.d or w.c in block or w.d in block:
        return False
    a1, a2, b2 = w.contacts
    v_b = _corners(block)
    if _corners((w.c,)) & v_b != {a1} or not _pure_corner_contact(P, w.c, a1):
        return False
    if _corners((w.d,)) & v_b != {a2, b2} or a2 == b2:
        return False
    return not _on_same_maximal(P, orientation, a1, a2)


# combined ----------------------------------------------------------------------------------

def find_any_prime_configuration(P: CellCollection) -> ConfigurationWitness | None:
    """First witness in the order L, weak L, ladder (>= 3 steps), weak ladder."""
    for finder in (find_L_configuration, find_weak_L_configuration, find_ladder, find_weak_ladder):
        w = finder(P)
        if w is not None:
            return w
    return None


def verify_configuration(P: CellCollection, w: ConfigurationWitness) -> bool:
    """Definitional re-check of a witness against ``P``."""
    checks = {
        L_CONFIG: _verify_l,
        WEAK_L: _verify_weak_l,
        LADDER: _verify_ladder,
        WEAK_LADDER: _verify_weak_ladder,
    }
    check = checks.get(w.kind)
    return bool(check and check(P, w))


# marked sets ----------------------------------------------------------------------------------

def marked_set_for_configuration(P: CellCollection, w: ConfigurationWitness) -> frozenset[Point]:
    """Vertices that receive the hole variable in the toric map for ``w``."""
    k = w.transform
    back = inverse_transform(k)

    def to_orig(points):
        return frozenset(transform_point(back, p) for p in points)

    if w.kind == L_CONFIG:
        return frozenset(cell_corners(w.cells[2]))
    if w.kind == WEAK_L:
        return frozenset(cell_corners(_weak_l_pivot(w)))
    if w.kind == LADDER:
        if not _ladder_reference(k, w.blocks):
            raise UnsupportedOrientationError()
        prev = sorted(_tc(k, w.blocks[-2]), key=lambda c: c.x)
        last = _tc(k, w.blocks[-1])
        b_cell = prev[-1] + _S
        if b_cell not in last:
            raise UnsupportedOrientationError()
        ll, lr, ul, ur = cell_corners(b_cell)
        pts = {cell_corners(c)[0] for c in prev} | {ll, ur, lr}
        return to_orig(pts)
    if w.kind == WEAK_LADDER:
        hook = _hooking_corner(P)
        if not _weak_ladder_reference(k, w.blocks[0], w.c):
            raise UnsupportedOrientationError()
        block = sorted(_tc(k, w.blocks[0]), key=lambda c: c.x)
        c = transform_cell(k, w.c)
        if w.c_block == _block_orientation(w.blocks[0]):
            # block through C parallel to the main block: upper right corners
            pts = {cell_corners(c)[3]} | {cell_corners(x)[3] for x in block}
        else:
            pts = {cell_corners(c)[0], cell_corners(block[0])[0]}
        return to_orig(pts) | {hook}
    raise UnsupportedOrientationError(f"unknown configuration kind {w.kind!r}")


def _hooking_corner(P: CellCollection) -> Point:
    wcp = recognize_weakly_closed_path(P)
    if wcp is None:
        raise ValueError("weak ladder recipe needs a weakly closed path")
    return wcp.hooking_corner
