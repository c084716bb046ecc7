"""Exhaustive generation of fixed polyominoes and weakly closed paths, plus sweeps."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .algebra import hole_toric_map, toric_equality_report
from .classify import (
    INCONCLUSIVE,
    STATUSES,
    classify,
    consistency_audit,
)
from .grid import CellCollection, Point, cell_corners, cell_key
from .pathclass import (
    find_any_prime_configuration,
    marked_set_for_configuration,
    recognize_weakly_closed_path,
)

DEFAULT_MAX_N = 10
_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _normalize(cells) -> frozenset[Point]:
    mx = min(c[0] for c in cells)
    my = min(c[1] for c in cells)
    return frozenset(Point(c[0] - mx, c[1] - my) for c in cells)


def enumerate_fixed_polyominoes(n: int, max_n: int = DEFAULT_MAX_N + 2) -> Iterator[CellCollection]:
    """Every fixed polyomino with ``n`` cells exactly once (Redelmeier's method).

    Growth starts at the origin and only ever adds cells with ``y > 0`` or
    ``y == 0, x >= 0``, so the origin is the lowest-leftmost cell of the row
    ``y == 0`` and each polyomino arises from a single translate.
    """
    if n < 1 or n > max_n:
        raise ValueError(f"n must be between 1 and {max_n}")
    for cells in _redelmeier(n):
        yield CellCollection(_normalize(cells))


def _redelmeier(n: int):
    origin = (0, 0)
    poly: list = []

    def valid(c):
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    def rec(untried: list, seen: set):
        untried = list(untried)
        while untried:
            c = untried.pop()
            poly.append(c)
            if len(poly) == n:
                yield tuple(poly)
            else:
                new = []
                for dx, dy in _STEPS:
                    nb = (c[0] + dx, c[1] + dy)
                    if valid(nb) and nb not in seen:
                        new.append(nb)
                yield from rec(untried + new, seen | set(new))
            poly.pop()

    yield from rec([origin], {origin})


def bfs_grow_polyominoes(n: int) -> set[frozenset[Point]]:
    """Independent oracle: grow every polyomino one cell at a time, dedupe by translation."""
    level = {frozenset({Point(0, 0)})}
    for _ in range(n - 1):
        nxt = set()
        for poly in level:
            for c in poly:
                for dx, dy in _STEPS:
                    nb = Point(c.x + dx, c.y + dy)
                    if nb not in poly:
                        nxt.add(_normalize(poly | {nb}))
        level = nxt
    return level


def enumerate_weakly_closed_paths(n: int) -> Iterator[CellCollection]:
    """All fixed weakly closed paths with ``n`` cells, each once, by direct path growth.

    Yields nothing for ``n <= 6``.
    """
    if n <= 6:
        return
    seen: set[frozenset[Point]] = set()
    found = []
    path = [Point(0, 0)]
    corners = [frozenset(cell_corners(path[0]))]

    def grow():
        k = len(path)
        if k == n:
            # only A_n may touch A_1, and in a single vertex
            if len(corners[-1] & corners[0]) == 1:
                key = _normalize(path)
                if key not in seen:
                    seen.add(key)
                    P = CellCollection(key)
                    if recognize_weakly_closed_path(P) is not None:
                        found.append(P)
            return
        last = path[-1]
        for dx, dy in _STEPS:
            c = Point(last.x + dx, last.y + dy)
            if c in path:
                continue
            cv = frozenset(cell_corners(c))
            # cells three or more places back must be vertex-disjoint, except the
            # first cell, which the last cell may touch at the hooking corner
            bad = False
            for j in range(k - 2):
                if cv & corners[j] and not (j == 0 and k == n - 1):
                    bad = True
                    break
            if bad:
                continue
            path.append(c)
            corners.append(cv)
            grow()
            path.pop()
            corners.pop()

    grow()
    found.sort(key=lambda P: [cell_key(c) for c in P.ordered])
    yield from found


def minimal_unconfigured_weakly_closed_path(n_max: int = 14) -> CellCollection | None:
    """Smallest weakly closed path (first in enumeration order) with none of the
    four configurations."""
    for n in range(7, n_max + 1):
        for P in enumerate_weakly_closed_paths(n):
            if find_any_prime_configuration(P) is None:
                return P
    return None


# -- sweeps ----------------------------------------------------------------------------

@dataclass
class SweepReport:
    n_max: int
    degree: int
    totals: dict[int, dict[str, int]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    toric_checks: dict[str, int] = field(default_factory=lambda: {"passed": 0, "failed": 0})
    toric_failures: list[dict] = field(default_factory=list)
    inconclusive: list[dict] = field(default_factory=list)
    runtime_s: float = 0.0

    @property
    def total(self) -> int:
        return sum(sum(row.values()) for row in self.totals.values())

    def merge(self, other: "SweepReport") -> None:
        for n, row in other.totals.items():
            mine = self.totals.setdefault(n, {s: 0 for s in STATUSES})
            for s, k in row.items():
                mine[s] = mine.get(s, 0) + k
        self.violations.extend(other.violations)
        for k, v in other.toric_checks.items():
            self.toric_checks[k] = self.toric_checks.get(k, 0) + v
        self.toric_failures.extend(other.toric_failures)
        self.inconclusive.extend(other.inconclusive)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "degree": self.degree,
            "total": self.total,
            "totals": {str(n): row for n, row in sorted(self.totals.items())},
            "violations": self.violations,
            "toric_checks": self.toric_checks,
            "toric_failures": self.toric_failures,
            "inconclusive": self.inconclusive,
            "runtime_s": round(self.runtime_s, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_tsv(self) -> str:
        lines = ["n\t" + "\t".join(STATUSES) + "\ttotal"]
        for n, row in sorted(self.totals.items()):
            vals = [row.get(s, 0) for s in STATUSES]
            lines.append(f"{n}\t" + "\t".join(map(str, vals)) + f"\t{sum(vals)}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        width = max(len(s) for s in STATUSES)
        head = f"{'n':>3}  " + "  ".join(f"{s:>{width}}" for s in STATUSES) + f"  {'total':>7}"
        lines = [head, "-" * len(head)]
        for n, row in sorted(self.totals.items()):
            vals = [row.get(s, 0) for s in STATUSES]
            lines.append(f"{n:>3}  " + "  ".join(f"{v:>{width}}" for v in vals) + f"  {sum(vals):>7}")
        lines.append("")
        lines.append(f"violations: {len(self.violations)}")
        lines.append(f"toric checks (degree {self.degree}): {self.toric_checks['passed']} passed, "
                     f"{self.toric_checks['failed']} failed")
        lines.append(f"inconclusive: {len(self.inconclusive)}")
        lines.append(f"runtime: {self.runtime_s:.2f} s")
        return "\n".join(lines) + "\n"


def _cells_list(P: CellCollection) -> list[list[int]]:
    return [list(c) for c in P.ordered]


def _sweep_one(n: int, degree: int, budget: int | None) -> SweepReport:
    rep = SweepReport(n_max=n, degree=degree)
    row = {s: 0 for s in STATUSES}
    for P in enumerate_fixed_polyominoes(n):
        v = classify(P, budget=budget, oracle_degree=degree)
        row[v.status] += 1
        if v.status == INCONCLUSIVE:
            rep.inconclusive.append({"cells": _cells_list(P), "rule": v.rule, "reason": v.reason})
        problems = consistency_audit(P, v, budget=budget)
        if problems:
            rep.violations.append({"cells": _cells_list(P), "problems": problems})
        if v.oracle is not None:
            ok = v.oracle is not None and v.oracle.passed
            rep.toric_checks["passed" if ok else "failed"] += 1
            if not ok:
                rep.toric_failures.append({"cells": _cells_list(P), "verdict": v.oracle.verdict if v.oracle else None})
    rep.totals[n] = row
    return rep


def conjecture_sweep(n_max: int, degree: int = 4, jobs: int = 1, budget: int | None = None,
                     cap: int = DEFAULT_MAX_N) -> SweepReport:
    """Classify and audit every fixed polyomino with at most ``n_max`` cells.

    Weakly closed paths with a configuration get the hole-marked toric check
    at ``degree`` through the classifier; the counts land in ``toric_checks``.
    Work is split by cell count; results are merged in order of ``n``.
    """
    if n_max < 1 or n_max > cap:
        raise ValueError(f"n_max must be between 1 and {cap}")
    t0 = time.perf_counter()
    report = SweepReport(n_max=n_max, degree=degree)
    sizes = list(range(1, n_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_sweep_one, sizes, [degree] * len(sizes), [budget] * len(sizes)))
    else:
        parts = [_sweep_one(n, degree, budget) for n in sizes]
    for part in parts:
        report.merge(part)
    report.runtime_s = time.perf_counter() - t0
    return report


def recipe_report(P: CellCollection, degree: int = 4):
    """Toric check of a weakly closed path against the marked map of its first configuration."""
    config = find_any_prime_configuration(P)
    if config is None:
        return None, None
    marked = marked_set_for_configuration(P, config)
    return config, toric_equality_report(P, hole_toric_map(P, marked), degree)


__all__ = [
    "SweepReport",
    "bfs_grow_polyominoes",
    "conjecture_sweep",
    "enumerate_fixed_polyominoes",
    "enumerate_weakly_closed_paths",
    "minimal_unconfigured_weakly_closed_path",
    "recipe_report",
]
