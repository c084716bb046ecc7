"""Command-line interface.

Exit codes: 0 when a verdict or report was produced, 2 when the result is
inconclusive, 1 on errors.

Search limits come from, in increasing priority: built-in defaults, the
environment variable ``POLYIDEAL_ZIGZAG_BUDGET``, a ``--config`` file, and
explicit flags.  The config file holds ``key = value`` lines (``#`` starts a
comment) with the keys ``zigzag_budget``, ``max_len`` and ``oracle_degree``.
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
from pathlib import Path

from . import io
from .algebra import edge_ring_map, hole_toric_map, inner_2_minors, toric_equality_report
from .classify import DEFAULT_ORACLE_DEGREE, INCONCLUSIVE, classify
from .enumerate import conjecture_sweep
from .errors import PolyIdealError
from .graph import build_graph, chordless_witness, dump_graph
from .grid import Point
from .pathclass import find_any_prime_configuration, marked_set_for_configuration, recognize_weakly_closed_path
from .zigzag import SearchInconclusive, default_budget, find_zigzag_walk

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

CONFIG_KEYS = {"zigzag_budget": int, "max_len": int, "oracle_degree": int}


def read_config(path) -> dict:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.read_string("[polyideal]\n" + Path(path).read_text())
    out = {}
    for key, value in parser["polyideal"].items():
        if key not in CONFIG_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = CONFIG_KEYS[key](value)
    return out


def _settings(args) -> dict:
    cfg = {"zigzag_budget": default_budget(), "max_len": None, "oracle_degree": DEFAULT_ORACLE_DEGREE}
    if args.config:
        cfg.update(read_config(args.config))
    if getattr(args, "budget", None) is not None:
        cfg["zigzag_budget"] = args.budget
    return cfg


def _load(args):
    if args.fixture:
        return io.load_fixture(args.fixture)
    if args.input is None:
        raise ValueError("give --input FILE, --input - or --fixture NAME")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    return io.parse_text(text)


def parse_marked(spec: str, P) -> frozenset[Point] | None:
    """``none`` gives ``None``; ``auto`` asks the configuration recipe; otherwise
    a list such as ``3,0;4,0``."""
    if spec == "none":
        return None
    if spec == "auto":
        if recognize_weakly_closed_path(P) is None:
            raise ValueError("--marked auto needs a weakly closed path")
        config = find_any_prime_configuration(P)
        if config is None:
            raise ValueError("--marked auto: no configuration found")
        return marked_set_for_configuration(P, config)
    out = []
    for item in spec.split(";"):
        item = item.strip()
        if not item:
            continue
        x, y = item.split(",")
        out.append(Point(int(x), int(y)))
    return frozenset(out)


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands ------------------------------------------------------------------------

def cmd_classify(args) -> int:
    P = _load(args)
    cfg = _settings(args)
    v = classify(P, budget=cfg["zigzag_budget"], oracle_degree=args.degree or cfg["oracle_degree"])
    if args.format == "json":
        _emit(v.to_json(), args.out)
    else:
        lines = [f"status: {v.status}", f"rule: {v.rule}", f"reason: {v.citation}"]
        if v.reason:
            lines.append(f"note: {v.reason}")
        if v.oracle is not None:
            lines.append(f"toric check: {v.oracle.verdict}")
        _emit("\n".join(lines), args.out)
    return EXIT_INCONCLUSIVE if v.status == INCONCLUSIVE else EXIT_OK


def cmd_zigzag(args) -> int:
    P = _load(args)
    cfg = _settings(args)
    walk = find_zigzag_walk(P, max_len=args.max_len or cfg["max_len"], budget=cfg["zigzag_budget"])
    if isinstance(walk, SearchInconclusive):
        _emit(json.dumps({"result": "inconclusive", "nodes": walk.nodes, "budget": walk.budget}), args.out)
        return EXIT_INCONCLUSIVE
    if walk is None:
        _emit(json.dumps({"result": "none"}) if args.format == "json" else "no zig-zag walk", args.out)
        return EXIT_OK
    _emit(walk.to_json() if args.format == "json" else walk.to_text(), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    P = _load(args)
    G = build_graph(P)
    witness = chordless_witness(G)
    text = dump_graph(G) + f"weakly_chordal {str(witness is None).lower()}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_minors(args) -> int:
    P = _load(args)
    gens = inner_2_minors(P)
    _emit("\n".join([f"# {len(gens)} inner 2-minors"] + [str(g) for g in gens]), args.out)
    return EXIT_OK


def cmd_toric_check(args) -> int:
    P = _load(args)
    marked = parse_marked(args.marked, P)
    m = edge_ring_map(P) if marked is None else hole_toric_map(P, marked)
    report = toric_equality_report(P, m, args.degree)
    _emit(json.dumps(report.to_dict(), indent=2), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    P = _load(args)
    overlays = [o for item in args.overlay for o in item.split(",") if o]
    evidence = {}
    if "witness" in overlays:
        evidence["witness"] = find_any_prime_configuration(P) if recognize_weakly_closed_path(P) else None
        if evidence["witness"] is None:
            raise ValueError("no configuration witness to draw")
    if "walk" in overlays:
        walk = find_zigzag_walk(P, budget=_settings(args)["zigzag_budget"])
        if not walk:
            raise ValueError("no zig-zag walk to draw")
        evidence["walk"] = walk
    _emit(io.render(P, args.format, overlays, **evidence), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _settings(args)
    report = conjecture_sweep(args.max_n, degree=args.degree, jobs=args.jobs, budget=cfg["zigzag_budget"])
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "sweep.json").write_text(report.to_json() + "\n")
        (out / "sweep.tsv").write_text(report.to_tsv())
        from .plotting import save_sweep_png

        save_sweep_png(report, out / "sweep.png")
    sys.stdout.write(report.to_text())
    if report.violations:
        return EXIT_ERROR
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK


def cmd_export_cas(args) -> int:
    P = _load(args)
    marked = parse_marked(args.marked, P) if args.marked else None
    mapping = None
    if args.marked:
        mapping = edge_ring_map(P) if marked is None else hole_toric_map(P, marked)
    _emit(io.export_cas(P, mapping), args.out)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyideal", description="Primality tools for polyomino ideals.")
    ap.add_argument("--config", help="key = value file with search limits")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_input(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--input", help="ASCII or JSON file, or - for standard input")
        g.add_argument("--fixture", choices=io.FIXTURES, help="bundled example collection")
        p.add_argument("--out", help="write the result here instead of standard output")
        return p

    p = with_input(sub.add_parser("classify", help="primality verdict with evidence"))
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--budget", type=int, help="zig-zag search node budget")
    p.add_argument("--degree", type=int, help="degree bound of the toric check")
    p.set_defaults(func=cmd_classify)

    p = with_input(sub.add_parser("zigzag", help="search for a zig-zag walk"))
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--budget", type=int)
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_zigzag)

    p = with_input(sub.add_parser("graph", help="dump the bipartite interval graph"))
    p.set_defaults(func=cmd_graph)

    p = with_input(sub.add_parser("minors", help="list the inner 2-minors"))
    p.set_defaults(func=cmd_minors)

    p = with_input(sub.add_parser("toric-check", help="compare the minor ideal with a toric kernel"))
    p.add_argument("--degree", type=int, default=DEFAULT_ORACLE_DEGREE)
    p.add_argument("--marked", default="none", help="none, auto, or a list like '3,0;4,0'")
    p.set_defaults(func=cmd_toric_check)

    p = with_input(sub.add_parser("render", help="draw the collection"))
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--overlay", action="append", default=[],
                   help="holes, edge-intervals, witness or walk; repeat or separate with commas")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sweep", help="classify and audit every polyomino up to a size")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--degree", type=int, default=DEFAULT_ORACLE_DEGREE)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--out", help="directory for sweep.json, sweep.tsv and sweep.png")
    p.set_defaults(func=cmd_sweep)

    p = with_input(sub.add_parser("export-cas", help="Singular script of the minor ideal"))
    p.add_argument("--marked", help="add an image table: none (edge ring), auto, or a vertex list")
    p.set_defaults(func=cmd_export_cas)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PolyIdealError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
