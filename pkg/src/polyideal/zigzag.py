"""Zig-zag walks: search, verification and serialisation.

A walk is a cyclic sequence of distinct inner intervals ``I_1, ..., I_l``.
Interval ``I_i`` is entered at corner ``v_i`` and left at an adjacent corner
``v_{i+1}``; ``z_i`` is the corner opposite ``v_i`` and ``u_i`` the one opposite
``v_{i+1}``.  Consecutive intervals meet in exactly one point, the last meets
the first exactly in ``v_1``, ``v_i`` and ``v_{i+1}`` lie on one maximal edge
interval, and no inner interval contains two different ``z``'s among its
lattice points.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import NamedTuple

from .grid import CellCollection, LatticeInterval, Point

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "POLYIDEAL_ZIGZAG_BUDGET"

DIAG_ENTRY = "diag-entry"
ANTIDIAG_ENTRY = "antidiag-entry"


class OrientedStep(NamedTuple):
    interval: LatticeInterval
    v_entry: Point
    v_exit: Point
    z: Point
    u: Point

    @property
    def mode(self) -> str:
        return DIAG_ENTRY if self.v_entry in self.interval.diagonal else ANTIDIAG_ENTRY

    @classmethod
    def make(cls, interval: LatticeInterval, v_entry, v_exit) -> "OrientedStep":
        v_entry, v_exit = Point(*v_entry), Point(*v_exit)
        return cls(interval, v_entry, v_exit, interval.opposite(v_entry), interval.opposite(v_exit))

    def to_dict(self) -> dict:
        return {
            "lo": list(self.interval.lo),
            "hi": list(self.interval.hi),
            "v_entry": list(self.v_entry),
            "v_exit": list(self.v_exit),
            "z": list(self.z),
            "u": list(self.u),
            "mode": self.mode,
        }


@dataclass(frozen=True)
class ZigZagWalk:
    steps: tuple[OrientedStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def intervals(self) -> list[LatticeInterval]:
        return [s.interval for s in self.steps]

    def to_dict(self) -> dict:
        return {"length": len(self.steps), "steps": [s.to_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        for k, s in enumerate(self.steps, 1):
            lo, hi = s.interval
            lines.append(
                f"I{k} [({lo.x},{lo.y}),({hi.x},{hi.y})] "
                f"v=({s.v_entry.x},{s.v_entry.y}) z=({s.z.x},{s.z.y}) "
                f"exit=({s.v_exit.x},{s.v_exit.y})"
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "ZigZagWalk":
        steps = []
        for s in d["steps"]:
            iv = LatticeInterval(Point(*s["lo"]), Point(*s["hi"]))
            steps.append(OrientedStep.make(iv, s["v_entry"], s["v_exit"]))
        return cls(tuple(steps))


@dataclass(frozen=True)
class SearchInconclusive:
    """The node budget ran out before the search space was exhausted."""

    nodes: int
    budget: int

    def __bool__(self) -> bool:
        return False


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


# -- geometry helpers ----------------------------------------------------------

def _meet_in_point(a: LatticeInterval, b: LatticeInterval, p: Point) -> bool:
    inter = a.intersection(b)
    return inter is not None and inter.lo == p and inter.hi == p


def _same_maximal_interval(P: CellCollection, p: Point, q: Point) -> bool:
    index = P.interval_index
    if p not in index or q not in index or p == q:
        return False
    if p.x == q.x:
        return index[p][0] == index[q][0]
    if p.y == q.y:
        return index[p][1] == index[q][1]
    return False


def co_inner_table(P: CellCollection):
    """Predicate ``pred(p, q)``: some inner interval holds both as lattice points."""
    table = _co_inner_sets(P)

    def pred(p, q) -> bool:
        return Point(*q) in table.get(Point(*p), ())

    return pred


def _co_inner_sets(P: CellCollection) -> dict[Point, frozenset[Point]]:
    # only maximal inner intervals matter; every other one sits inside one of them
    ivs = P.inner_intervals
    maximal = [iv for iv in ivs if not any(o != iv and o.contains(iv.lo) and o.contains(iv.hi) for o in ivs)]
    out: dict[Point, set[Point]] = {}
    for iv in maximal:
        pts = iv.points()
        for p in pts:
            out.setdefault(p, set()).update(pts)
    return {p: frozenset(s) for p, s in out.items()}


def oriented_steps(P: CellCollection) -> list[OrientedStep]:
    """All eight orientations of every inner interval, in deterministic order."""
    out = []
    for iv in P.inner_intervals:
        for v in sorted(iv.corners, key=lambda p: (p.y, p.x)):
            for w in sorted(iv.corners, key=lambda p: (p.y, p.x)):
                if w != v and (w.x == v.x or w.y == v.y):
                    out.append(OrientedStep.make(iv, v, w))
    return out


# -- verification -------------------------------------------------------------------

def verify_zigzag_walk(P: CellCollection, W: ZigZagWalk) -> bool:
    """Check every defining condition directly, independent of the search."""
    steps = list(W.steps)
    n = len(steps)
    if n < 2:
        return False
    inner = set(P.inner_intervals)
    intervals = [s.interval for s in steps]
    if len(set(intervals)) != n or any(iv not in inner for iv in intervals):
        return False
    for s in steps:
        iv = s.interval
        if s.v_entry not in iv.corners or s.v_exit not in iv.corners:
            return False
        if s.z != iv.opposite(s.v_entry) or s.u != iv.opposite(s.v_exit):
            return False
        # {v_entry, z} and {u, v_exit} must be the two diagonals
        if {s.v_entry, s.z} == {s.u, s.v_exit}:
            return False
        if not _same_maximal_interval(P, s.v_entry, s.v_exit):
            return False
    for k in range(n):
        cur, nxt = steps[k], steps[(k + 1) % n]
        if cur.v_exit != nxt.v_entry:
            return False
        if not _meet_in_point(cur.interval, nxt.interval, cur.v_exit):
            return False
    zs = [s.z for s in steps]
    for i in range(n):
        for j in range(i + 1, n):
            if _co_inner_brute(P, zs[i], zs[j]):
                return False
    return True


def _co_inner_brute(P: CellCollection, p: Point, q: Point) -> bool:
    return any(iv.contains(p) and iv.contains(q) for iv in P.inner_intervals)


# -- search ---------------------------------------------------------------------------

class _Searcher:
    def __init__(self, P: CellCollection, max_len: int, budget: int):
        self.P = P
        self.max_len = max_len
        self.budget = budget
        self.nodes = 0
        self.steps = [s for s in oriented_steps(P) if _same_maximal_interval(P, s.v_entry, s.v_exit)]
        iv_index = {iv: k for k, iv in enumerate(P.inner_intervals)}
        self.iv_of = [iv_index[s.interval] for s in self.steps]
        co = _co_inner_sets(P)
        # z-compatibility as bitsets over step indices
        zs = [s.z for s in self.steps]
        self.z_conflict = []
        for s in self.steps:
            near = co.get(s.z, frozenset())
            mask = 0
            for t, z in enumerate(zs):
                if z in near:
                    mask |= 1 << t
            self.z_conflict.append(mask)
        by_entry: dict[Point, list[int]] = {}
        for t, s in enumerate(self.steps):
            by_entry.setdefault(s.v_entry, []).append(t)
        self.succ = []
        for s in self.steps:
            nxt = [t for t in by_entry.get(s.v_exit, ())
                   if _meet_in_point(s.interval, self.steps[t].interval, s.v_exit)]
            self.succ.append(nxt)

    def run(self):
        for first in range(len(self.steps)):
            found = self._from(first)
            if found is not None:
                return found
        return None

    def _from(self, first: int):
        s0 = self.steps[first]
        lo_iv = self.iv_of[first]
        path = [first]
        used_iv = 1 << lo_iv
        forbidden = self.z_conflict[first]

        def dfs(cur: int, used_iv: int, forbidden: int):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExceeded
            s = self.steps[cur]
            if len(path) >= 3 and s.v_exit == s0.v_entry and _meet_in_point(s.interval, s0.interval, s0.v_entry):
                return list(path)
            if len(path) >= self.max_len:
                return None
            for t in self.succ[cur]:
                iv = self.iv_of[t]
                if iv <= lo_iv or used_iv >> iv & 1 or forbidden >> t & 1:
                    continue
                path.append(t)
                res = dfs(t, used_iv | 1 << iv, forbidden | self.z_conflict[t])
                if res is not None:
                    return res
                path.pop()
            return None

        return dfs(first, used_iv, forbidden)


class _BudgetExceeded(Exception):
    pass


def find_zigzag_walk(P: CellCollection, max_len: int | None = None, budget: int | None = None):
    """Return a verified walk, ``None``, or :class:`SearchInconclusive`.

    Walks are searched up to rotation: the first interval is the one with the
    smallest index, and the lexicographically least walk is returned.
    """
    if max_len is None:
        max_len = 2 * (len(P.vertical_intervals) + len(P.horizontal_intervals))
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    if budget is None:
        budget = default_budget()
    s = _Searcher(P, max_len, budget)
    try:
        found = s.run()
    except _BudgetExceeded:
        return SearchInconclusive(s.nodes, budget)
    if found is None:
        return None
    walk = ZigZagWalk(tuple(s.steps[t] for t in found))
    if not verify_zigzag_walk(P, walk):  # pragma: no cover - search and verifier disagree
        raise AssertionError("search produced a walk that fails verification")
    return walk


def brute_force_zigzag(P: CellCollection, max_len: int) -> list[ZigZagWalk]:
    """Reference search: chain oriented steps naively, then run the verifier.

    Only chaining and distinctness prune the tree, so this is slow and meant
    for small collections.  Walks are reported once per rotation class.
    """
    steps = oriented_steps(P)
    out = []
    seen = set()

    def grow(path):
        last = path[-1]
        if len(path) >= 2 and last.v_exit == path[0].v_entry:
            w = ZigZagWalk(tuple(path))
            if verify_zigzag_walk(P, w):
                key = _rotation_key(w)
                if key not in seen:
                    seen.add(key)
                    out.append(w)
        if len(path) >= max_len:
            return
        used = {s.interval for s in path}
        for t in steps:
            if t.v_entry == last.v_exit and t.interval not in used and _meet_in_point(last.interval, t.interval, last.v_exit):
                path.append(t)
                grow(path)
                path.pop()

    for s in steps:
        grow([s])
    return out


def _rotation_key(w: ZigZagWalk):
    rots = [w.steps[k:] + w.steps[:k] for k in range(len(w.steps))]
    return min(rots)

