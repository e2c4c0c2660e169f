"""Command-line interface: ``sensorelect {elect,analyze,simulate,gen}``."""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Optional, Sequence

import numpy as np

from . import fixtures
from .election import InternalInvariant, Leader, analyze, elect
from .geometry import DEFAULT_TOL, Configuration, DegenerateInput, Tolerance
from .report import (
    ConfigError,
    agreement_dict,
    build_report,
    config_document,
    load_config,
    render_json,
    render_svg,
    render_text,
)
from .simulation import run_agreement
from .words import Orientation

EXIT_OK, EXIT_ERROR, EXIT_IMPOSSIBLE = 0, 1, 2

GEN_KINDS = ("ngon", "arrow", "fig3", "fig4", "fig5", "mirror-no-axis", "center", "random")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors exit 1; exit 2 is reserved for an Impossible outcome."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _tolerance(args, overrides: dict) -> Tolerance:
    abs_ = args.tol_abs if args.tol_abs is not None else overrides.get("abs", DEFAULT_TOL.abs)
    rel = args.tol_rel if args.tol_rel is not None else overrides.get("rel", DEFAULT_TOL.rel)
    for flag, v in (("--tol-abs", abs_), ("--tol-rel", rel)):
        if not (math.isfinite(v) and v >= 0):
            raise UsageError(f"{flag}: must be a finite non-negative number")
    return Tolerance(abs=float(abs_), rel=float(rel))


def _load(args) -> tuple[Optional[str], Configuration, Tolerance]:
    name, config, overrides = load_config(args.file)
    return name, config, _tolerance(args, overrides)


def _emit(report: dict, as_json: bool, out) -> None:
    out.write(render_json(report) if as_json else render_text(report))


def _report(args, with_svg: bool) -> tuple[dict, object]:
    name, config, tol = _load(args)
    chirality = args.chirality == "on"
    orientation = Orientation(args.orientation)
    start = time.perf_counter()
    analysis = analyze(config, tol)
    outcome = elect(config, chirality, orientation, tol)
    elapsed = time.perf_counter() - start
    report = build_report(config, chirality, orientation, tol, name, analysis, outcome)
    if args.timing:
        report["timing_ms"] = round(elapsed * 1e3, 3)
    if with_svg and args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(analysis, outcome))
    return report, outcome


def cmd_elect(args, out) -> int:
    report, outcome = _report(args, with_svg=False)
    _emit(report, args.json, out)
    return EXIT_OK if isinstance(outcome, Leader) else EXIT_IMPOSSIBLE


def cmd_analyze(args, out) -> int:
    report, _ = _report(args, with_svg=True)
    _emit(report, args.json, out)
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    if args.runs < 1:
        raise UsageError("--runs: must be at least 1")
    _, config, tol = _load(args)
    chirality = args.chirality == "on"
    rows = []
    for i in range(args.runs):
        rep = run_agreement(config, chirality, args.seed + i, tol)
        rows.append(agreement_dict(rep, run=i))
    unanimous = sum(r["unanimous"] for r in rows)
    summary = {"runs": args.runs, "unanimous": unanimous, "all_unanimous": unanimous == args.runs}
    if args.json:
        out.write(render_json({"runs": rows, "summary": summary}))
    else:
        for row in rows:
            out.write(render_text(row).replace("\n", "; ").rstrip("; ") + "\n")
        out.write(render_text({"summary": summary}))
    return EXIT_OK if summary["all_unanimous"] else EXIT_IMPOSSIBLE


def _gen_config(args) -> tuple[str, Configuration]:
    kind = args.kind
    if kind == "ngon":
        n = args.n if args.n is not None else args.count
        if n is None:
            raise UsageError("n: ngon needs a vertex count (gen ngon 6 or --n 6)")
        if n < 1:
            raise UsageError("n: must be at least 1")
        return f"ngon{n}", fixtures.ngon(n, args.radius, math.radians(args.phase))
    if args.count is not None:
        raise UsageError(f"count: {kind} takes no positional count")
    if kind == "random":
        n = args.n
        if n is None:
            raise UsageError("n: random needs --n")
        if n < 1 or (args.asymmetric and n < 3):
            raise UsageError("n: must be at least 1 (at least 3 with --asymmetric)")
        rng = np.random.default_rng(args.seed)
        if args.asymmetric:
            return f"random{n}-asym-s{args.seed}", fixtures.random_asymmetric(n, rng)
        return f"random{n}-s{args.seed}", fixtures.random_uniform(n, rng)
    return kind, fixtures.FIGURES[kind]()


def cmd_gen(args, out) -> int:
    name, config = _gen_config(args)
    text = json.dumps(config_document(config, name)) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sensorelect",
        description="Decide and simulate leader election among anonymous sensors in the plane.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, orientation=True):
        p.add_argument("file", help="JSON configuration file")
        p.add_argument("--chirality", choices=("on", "off"), default="off")
        if orientation:
            p.add_argument("--orientation", choices=("cw", "ccw"), default="ccw",
                           help="orientation the sensors share when chirality is on")
        p.add_argument("--tol-abs", type=float, default=None)
        p.add_argument("--tol-rel", type=float, default=None)
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("elect", help="elect a leader or explain why none exists")
    common(p)
    p.add_argument("--timing", action="store_true", help="include wall-clock timing (breaks replayability)")
    p.set_defaults(func=cmd_elect)

    p = sub.add_parser("analyze", help="full word analysis; never fails on Impossible")
    common(p)
    p.add_argument("--svg", metavar="PATH", help="also write a diagram")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate", help="every sensor elects in its own frame")
    common(p, orientation=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=20)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gen", help="write a fixture configuration as JSON")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("count", nargs="?", type=int, help="vertex count for ngon")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--asymmetric", action="store_true")
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--phase", type=float, default=0.0, help="ngon phase in degrees")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ConfigError, UsageError, DegenerateInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InternalInvariant as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
