"""Parsing, rendering and computer-algebra export.

ASCII grids use ``#`` for a cell and ``.`` for an empty square.  Row ``r``
(counted from the top, starting at 0) holds the cells with
``y = height - 1 - r``; column ``c`` is ``x = c``.

JSON input is an object ``{"cells": [[x, y], ...]}`` with integer entries.

The CAS export is a Singular script::

    // <comment lines>
    ring R = 0, (<x variables>), dp;
    ideal I =
      <generator>,
      ...
      <generator>;
    // optional, only when a map is given:
    ring S = 0, (<target variables>), dp;
    map phi = R,
      <image of first x variable>,
      ...;

Variables are ``x_<x>_<y>`` for the vertex ``(x, y)``; a negative coordinate
``-k`` is written ``mk``.  Targets are ``v<i>``, ``h<j>`` and ``w``.  Images
are listed in the order of the ring variables of ``R``.
"""
from __future__ import annotations

import json
import string
import warnings
from importlib import resources
from typing import Iterable

from .algebra import MonomialMap, inner_2_minors, x_var
from .errors import ParseError, UnknownOverlayError
from .grid import CellCollection, Point, cell_key
from .pathclass import ConfigurationWitness
from .zigzag import ZigZagWalk

OVERLAYS = ("holes", "edge-intervals", "witness", "walk")
ASCII_OVERLAYS = ("holes", "witness", "walk")
UNIT = 20
MARGIN = 1

CELL = "#"
EMPTY = "."
HOLE_MARK = "o"
WITNESS_MARK = "@"
WALK_MARK = "+"


# -- parsing --------------------------------------------------------------------------

def parse_ascii(text: str) -> CellCollection:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ParseError("empty grid")
    lines = [ln.rstrip("\r") for ln in lines]
    width = len(lines[0])
    height = len(lines)
    cells = []
    for r, ln in enumerate(lines):
        if len(ln) != width:
            raise ParseError(f"ragged row: expected {width} characters, got {len(ln)}",
                             line=r + 1, column=min(len(ln), width) + 1)
        for c, ch in enumerate(ln):
            if ch == CELL:
                cells.append((c, height - 1 - r))
            elif ch != EMPTY:
                raise ParseError(f"illegal character {ch!r}", line=r + 1, column=c + 1)
    if not cells:
        raise ParseError("grid has no cells")
    return CellCollection(cells)


def parse_json(text: str) -> CellCollection:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from None
    if not isinstance(data, dict) or "cells" not in data:
        raise ParseError('expected an object with a "cells" list')
    raw = data["cells"]
    if not isinstance(raw, list):
        raise ParseError('"cells" must be a list')
    seen = set()
    dupes = []
    for k, c in enumerate(raw):
        if not (isinstance(c, list) and len(c) == 2
                and all(isinstance(t, int) and not isinstance(t, bool) for t in c)):
            raise ParseError(f"cell {k} is not a pair of integers: {c!r}")
        p = (c[0], c[1])
        if p in seen:
            dupes.append(p)
        seen.add(p)
    if not seen:
        raise ParseError("no cells given")
    if dupes:
        warnings.warn(f"duplicate cells ignored: {sorted(set(dupes))}", stacklevel=2)
    return CellCollection(seen)


def parse_text(text: str) -> CellCollection:
    """JSON if the text starts with ``{``, ASCII otherwise."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_ascii(text)


def to_json(P: CellCollection) -> str:
    return json.dumps({"cells": [list(c) for c in sorted(P.cells, key=lambda c: (c.x, c.y))]})


FIXTURES = ("F1", "F2", "F3", "F4", "F5", "F6", "F7")


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files("polyideal").joinpath("fixtures", f"{name}.txt").read_text()


def load_fixture(name: str) -> CellCollection:
    return parse_ascii(fixture_text(name))


# -- rendering ------------------------------------------------------------------------

def _check_overlays(overlays: Iterable[str], allowed=OVERLAYS) -> list[str]:
    out = []
    for o in overlays:
        if o not in OVERLAYS:
            raise UnknownOverlayError(f"unknown overlay {o!r}; choose from {', '.join(OVERLAYS)}")
        if o not in allowed:
            raise UnknownOverlayError(f"overlay {o!r} is not available in this format")
        if o not in out:
            out.append(o)
    return out


def _need(overlays, witness, walk):
    if "witness" in overlays and witness is None:
        raise ValueError("the witness overlay needs a configuration witness")
    if "walk" in overlays and walk is None:
        raise ValueError("the walk overlay needs a zig-zag walk")


def render_ascii(P: CellCollection, overlays: Iterable[str] = (),
                 witness: ConfigurationWitness | None = None, walk: ZigZagWalk | None = None) -> str:
    """Text picture of ``P`` over its bounding box, top row first.

    With no overlays the output parses back to ``P`` up to translation.
    """
    overlays = _check_overlays(overlays, ASCII_OVERLAYS)
    _need(overlays, witness, walk)
    box = P.bounding_box
    marks: dict[Point, str] = {}
    if "holes" in overlays:
        for h in P.holes:
            for c in h.cells:
                marks[c] = HOLE_MARK
    if "walk" in overlays:
        for iv in walk.intervals:
            for x in range(iv.lo.x, iv.hi.x):
                for y in range(iv.lo.y, iv.hi.y):
                    marks[Point(x, y)] = WALK_MARK
    if "witness" in overlays:
        for c in witness.cells:
            marks[Point(*c)] = WITNESS_MARK
    rows = []
    for y in range(box.hi.y - 1, box.lo.y - 1, -1):
        row = []
        for x in range(box.lo.x, box.hi.x):
            p = Point(x, y)
            if p in marks:
                row.append(marks[p])
            else:
                row.append(CELL if p in P.cells else EMPTY)
        rows.append("".join(row))
    return "\n".join(rows)


def render_svg(P: CellCollection, overlays: Iterable[str] = (),
               witness: ConfigurationWitness | None = None, walk: ZigZagWalk | None = None,
               unit: int = UNIT) -> str:
    """Deterministic SVG; one ``<g>`` per layer, ids ``cells``, ``holes``,
    ``edge-intervals``, ``witness`` and ``walk``."""
    overlays = _check_overlays(overlays)
    _need(overlays, witness, walk)
    box = P.bounding_box
    w = box.width + 2 * MARGIN
    h = box.height + 2 * MARGIN

    def X(x):
        return (x - box.lo.x + MARGIN) * unit

    def Y(y):
        return (box.hi.y - y + MARGIN) * unit

    def rect(c, cls, cid, fill):
        return (f'    <rect id="{cid}" class="{cls}" x="{X(c[0])}" y="{Y(c[1] + 1)}" '
                f'width="{unit}" height="{unit}" fill="{fill}"/>')

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * unit}" height="{h * unit}" '
        f'viewBox="0 0 {w * unit} {h * unit}">',
        f'  <rect id="background" x="0" y="0" width="{w * unit}" height="{h * unit}" fill="#ffffff"/>',
        '  <g id="cells" stroke="#222222" stroke-width="1">',
    ]
    for c in P.ordered:
        out.append(rect(c, "cell", f"cell_{c.x}_{c.y}", "#9ecae1"))
    out.append("  </g>")

    if "holes" in overlays:
        out.append('  <g id="holes" stroke="#555555" stroke-width="1">')
        for k, hole in enumerate(P.holes):
            for c in hole.ordered:
                out.append(rect(c, f"hole hole-{k}", f"hole_{k}_{c.x}_{c.y}", "#bdbdbd"))
        out.append("  </g>")

    if "edge-intervals" in overlays:
        out.append('  <g id="edge-intervals" stroke-width="3" stroke-linecap="round">')
        for k, iv in enumerate(P.horizontal_intervals):
            out.append(f'    <line id="h{k}" class="horizontal" x1="{X(iv.lo)}" y1="{Y(iv.line)}" '
                       f'x2="{X(iv.hi)}" y2="{Y(iv.line)}" stroke="#e6550d"/>')
        for k, iv in enumerate(P.vertical_intervals):
            out.append(f'    <line id="v{k}" class="vertical" x1="{X(iv.line)}" y1="{Y(iv.lo)}" '
                       f'x2="{X(iv.line)}" y2="{Y(iv.hi)}" stroke="#31a354"/>')
        out.append("  </g>")

    if "witness" in overlays:
        out.append(f'  <g id="witness" class="{witness.kind}" stroke="#756bb1" stroke-width="2">')
        for c in sorted(witness.cells, key=cell_key):
            out.append(rect(c, "witness-cell", f"witness_{c[0]}_{c[1]}", "#bcbddc"))
        for name in ("c", "d"):
            p = getattr(witness, name)
            if p is not None:
                cx, cy = X(p[0]) + unit // 2, Y(p[1]) - unit // 2
                out.append(f'    <circle id="witness_{name}" cx="{cx}" cy="{cy}" r="{unit // 4}" fill="#54278f"/>')
        out.append("  </g>")

    if "walk" in overlays:
        out.append('  <g id="walk" fill="none" stroke="#de2d26" stroke-width="2">')
        for k, s in enumerate(walk.steps, 1):
            lo, hi = s.interval
            out.append(f'    <rect id="walk_I{k}" x="{X(lo.x)}" y="{Y(hi.y)}" width="{(hi.x - lo.x) * unit}" '
                       f'height="{(hi.y - lo.y) * unit}" stroke-dasharray="4 2"/>')
        pts = " ".join(f"{X(s.v_entry.x)},{Y(s.v_entry.y)}" for s in walk.steps)
        out.append(f'    <polygon id="walk_path" points="{pts}"/>')
        for k, s in enumerate(walk.steps, 1):
            out.append(f'    <circle id="walk_z{k}" cx="{X(s.z.x)}" cy="{Y(s.z.y)}" r="{unit // 5}" fill="#de2d26"/>')
        out.append("  </g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(P: CellCollection, fmt: str = "ascii", overlays: Iterable[str] = (), **evidence) -> str:
    if fmt == "ascii":
        return render_ascii(P, overlays, **evidence)
    if fmt == "svg":
        return render_svg(P, overlays, **evidence)
    raise ValueError(f"unknown format {fmt!r}")


# -- CAS export -------------------------------------------------------------------------

_SCRIPT = string.Template("""\
// inner 2-minor ideal of a cell collection
// cells ($n_cells): $cells
ring R = 0, ($ring_vars), dp;
ideal I =
$generators;
""")

_MAP = string.Template("""\
// image table, marked vertices: $marked
ring S = 0, ($target_vars), dp;
map phi = R,
$images;
""")


def _join_lines(items: list[str]) -> str:
    return ",\n".join(f"  {t}" for t in items)


def export_cas(P: CellCollection, mapping: MonomialMap | None = None) -> str:
    ring_vars = sorted(x_var(p) for p in P.vertex_set)
    gens = [str(g) for g in inner_2_minors(P)]
    text = _SCRIPT.substitute(
        n_cells=len(P),
        cells=" ".join(f"({c.x},{c.y})" for c in P.ordered),
        ring_vars=", ".join(map(str, ring_vars)),
        # a collection without inner intervals gives the zero ideal
        generators=_join_lines(gens) if gens else "  0",
    )
    if mapping is not None:
        marked = " ".join(f"({p[0]},{p[1]})" for p in sorted(mapping.marked)) or "none"
        text += _MAP.substitute(
            marked=marked,
            target_vars=", ".join(map(str, mapping.target_variables())),
            images=_join_lines([str(mapping.image(v)) for v in ring_vars]),
        )
    return text


__all__ = [
    "FIXTURES",
    "OVERLAYS",
    "export_cas",
    "fixture_text",
    "load_fixture",
    "parse_ascii",
    "parse_json",
    "parse_text",
    "render",
    "render_ascii",
    "render_svg",
    "to_json",
]
