"""Command-line front end.

Commands:
    constants   sharp thresholds, best quartic constants, named enclosures
    eval        evaluate one library function at a point
    verify      run a registered check suite; exit 0 iff everything is ok
    table       CSV table for one of the fixed inequality chains
    special     enclosure + oracle + containment verdict for one quantity

Exit codes: 0 all verified, 1 violation/inconclusive, 2 usage error.
Output for fixed flags and seed is byte-identical (no timestamps; CSV uses
17 significant digits, JSON uses repr round-tripping).
"""

from __future__ import annotations

import argparse
import enum
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__, constants, core, corpus, integrals, means

_HALF_PI = math.pi / 2.0


class Command(enum.Enum):
    CONSTANTS = "constants"
    EVAL = "eval"
    VERIFY = "verify"
    TABLE = "table"
    SPECIAL = "special"


class OutputFormat(enum.Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class RunConfig:
    command: Command
    output_format: OutputFormat = OutputFormat.TEXT
    points: int = 4096
    seed: int = 20250810
    tolerance: float = 1e-12

    def __post_init__(self):
        if self.points < 64:
            raise ValueError("--points must be >= 64")
        if not 1e-15 <= self.tolerance <= 1e-3:
            raise ValueError("--tol must lie in [1e-15, 1e-3]")


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _emit_rows(rows: list[dict], cfg: RunConfig, text_line) -> None:
    if cfg.output_format is OutputFormat.JSON:
        print(json.dumps(rows))
    elif cfg.output_format is OutputFormat.CSV:
        keys = list(rows[0].keys()) if rows else []
        print(",".join(keys))
        for r in rows:
            print(",".join(_fmt(r[k]) if isinstance(r[k], float) else str(r[k]) for k in keys))
    else:
        for r in rows:
            print(text_line(r))


def cmd_constants(cfg: RunConfig) -> int:
    edge = constants.solve_sinc_lower_edge(cfg.tolerance)
    upper = constants.sinc_upper_edge()
    q_upper = constants.quartic_constants(upper.value)
    q_lower = constants.quartic_constants(edge.value)
    catalan = integrals.catalan_enclosure()
    trigamma = integrals.trigamma_half_enclosure()
    rows = [
        {"name": "sinc_lower_edge", "value": edge.value, "note": f"certified radius {edge.certified_radius:.1e}"},
        {"name": "sinc_upper_edge", "value": upper.value, "note": "sqrt(15)/5; also the sinhc lower edge"},
        {"name": "quartic_c_lo_at_upper_edge", "value": q_upper.c_lo, "note": "best lower x^4 constant at sqrt(15)/5"},
        {"name": "quartic_c_hi_at_lower_edge", "value": q_lower.c_hi, "note": "best upper x^4 constant at the lower edge"},
        {"name": "leibniz_ratio_bound", "value": 11.0 * math.pi ** 2 / 360.0, "note": "11*pi^2/360"},
        {"name": "sb_bound_at_b_eq_2a", "value": (11.0 + 8.0 * math.sqrt(2.0)) / 27.0, "note": "(11+8*sqrt2)/27"},
        {"name": "catalan_lo", "value": catalan.lo, "note": "encloses Catalan's constant"},
        {"name": "catalan_hi", "value": catalan.hi, "note": ""},
        {"name": "trigamma_half_lo", "value": trigamma.lo, "note": "encloses trigamma(1/2) = pi^2/2"},
        {"name": "trigamma_half_hi", "value": trigamma.hi, "note": ""},
    ]
    _emit_rows(rows, cfg, lambda r: f"{r['name']:<30} = {_fmt(r['value'])}"
               + (f"   ({r['note']})" if r["note"] else ""))
    return 0


_EVAL_FNS = {
    "sinc": lambda p, x: core.sinc(x),
    "sinhc": lambda p, x: core.sinhc(x),
    "cos-bound": lambda p, x: core.cos_bound(p, x),
    "cosh-bound": lambda p, x: core.cosh_bound(p, x),
    "cos-power": lambda p, x: core.cos_power_bound(p, x),
    "cosh-power": lambda p, x: core.cosh_power_bound(p, x),
    "sinc-gap": lambda p, x: core.sinc_gap(p, x),
    "sinhc-gap": lambda p, x: core.sinhc_gap(p, x),
    "scaled-gap": lambda p, x: core.sinhc_gap_scaled(p, x),
}


def cmd_eval(cfg: RunConfig, fn: str, x: float, p: float | None) -> int:
    needs_p = fn not in ("sinc", "sinhc")
    if needs_p and p is None:
        print(f"--p is required for {fn}", file=sys.stderr)
        return 2
    try:
        result = _EVAL_FNS[fn](p, x)
    except (ValueError, OverflowError, FloatingPointError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, core.GapEvaluation):
        rows = [{"fn": fn, "x": x, "value": result.value,
                 "method": result.method.value, "tail_bound": result.tail_bound}]
        _emit_rows(rows, cfg, lambda r: f"{fn}({_fmt(x)}) = {_fmt(r['value'])} "
                   f"[{r['method']}, tail<={r['tail_bound']:.2e}]")
    else:
        rows = [{"fn": fn, "x": x, "value": float(result)}]
        _emit_rows(rows, cfg, lambda r: f"{fn}({_fmt(x)}) = {_fmt(r['value'])}")
    return 0


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    results = corpus.run_suite(suite, points=cfg.points, seed=cfg.seed)
    rows = [
        {"suite": r.suite, "id": r.id, "kind": r.kind, "ok": r.ok,
         "expected": r.expected, "observed": r.observed, "detail": r.detail}
        for r in results
    ]
    _emit_rows(rows, cfg, lambda r: f"[{'ok' if r['ok'] else 'FAIL':>4}] {r['suite']:<12} "
               f"{r['id']}  ({r['observed']}; {r['detail']})")
    n_bad = sum(not r.ok for r in results)
    if cfg.output_format is OutputFormat.TEXT:
        print(f"{len(results) - n_bad}/{len(results)} checks ok")
    return 0 if n_bad == 0 else 1


_CHAIN_DOMAINS = {"m1c": (0.0, _HALF_PI), "m2c": (0.0, 20.0)}


def chain_table(chain: str, xs) -> tuple[list[str], list[list[float]]]:
    """Header and rows (x, member values, adjacent margins) for a chain."""
    chain = chain.lower()
    if chain == "m1c":
        members = corpus.cos_chain_members()
        args = [float(x) for x in xs]
        key = "x"
    elif chain == "m2c":
        members = corpus.cosh_chain_members()
        args = [float(x) for x in xs]
        key = "x"
    elif chain == "meanchain":
        members = corpus.mean_chain_members()
        args = list(xs)  # MeanPoints or (a, b) tuples
        key = "pair"
    else:
        raise ValueError(f"unknown chain {chain!r}")
    names = [name for name, _ in members]
    if key == "x":
        header = ["x"] + names + [f"margin_{i}" for i in range(1, len(names))]
    else:
        header = ["a", "b"] + names + [f"margin_{i}" for i in range(1, len(names))]
    rows = []
    for arg in args:
        vals = [float(fn(arg)) for _, fn in members]
        margins = [b - a for a, b in zip(vals, vals[1:])]
        if key == "x":
            rows.append([float(arg)] + vals + margins)
        else:
            a, b = (arg.a, arg.b) if isinstance(arg, means.MeanPoint) else arg
            rows.append([float(a), float(b)] + vals + margins)
    return header, rows


def cmd_table(cfg: RunConfig, chain: str, pair: list[float] | None) -> int:
    chain = chain.lower()
    if chain in _CHAIN_DOMAINS:
        lo, hi = _CHAIN_DOMAINS[chain]
        xs = np.linspace(lo, hi, cfg.points)
        header, rows = chain_table(chain, xs)
    else:
        if pair is not None:
            pts = [means.MeanPoint(pair[0], pair[1])]
        else:
            pts = means.random_pairs(cfg.points, cfg.seed, ratio_span=(1e-3, 1e3),
                                     scale_span=(0.5, 2.0))
        header, rows = chain_table(chain, pts)
    print(",".join(header))
    for row in rows:
        print(",".join(_fmt(v) for v in row))
    return 0


def cmd_special(cfg: RunConfig, name: str, t: float | None, p: float | None,
                a: float | None, b: float | None, terms: int) -> int:
    name = name.lower()
    if name == "si":
        t = _HALF_PI if t is None else t
        p = 2.0 / 3.0 if p is None else p
        enc = integrals.si_enclosure(t, p)
        oracle = integrals.si_reference(t).value
    elif name == "sh":
        t = 1.0 if t is None else t
        enc = integrals.sh_enclosure(t)
        oracle = integrals.sh_reference(t).value
    elif name == "trigamma-half":
        enc = integrals.trigamma_half_enclosure()
        oracle = math.pi ** 2 / 2.0
    elif name == "catalan":
        enc = integrals.catalan_enclosure()
        oracle = integrals.catalan_reference(terms)
    elif name == "sb":
        if a is None or b is None:
            print("--a and --b are required for sb", file=sys.stderr)
            return 2
        m = means.MeanPoint(a, b)
        bound, mean = means.sb_lower_bound(m), means.sb_mean(m)
        ok = bound <= mean
        rows = [{"name": "sb", "a": a, "b": b, "lower_bound": bound,
                 "sb_mean": mean, "ok": ok}]
        _emit_rows(rows, cfg, lambda r: f"sb({_fmt(a)}, {_fmt(b)}): bound {_fmt(bound)} "
                   f"<= mean {_fmt(mean)} : {'ok' if ok else 'VIOLATION'}")
        return 0 if ok else 1
    elif name == "log-mean":
        if a is None or b is None:
            print("--a and --b are required for log-mean", file=sys.stderr)
            return 2
        m = means.MeanPoint(a, b)
        enc = means.log_mean_sandwich(m)
        oracle = means.log_mean(m)
    else:
        print(f"unknown special quantity {name!r}", file=sys.stderr)
        return 2
    ok = enc.contains(oracle)
    rows = [{"name": name, "lo": enc.lo, "hi": enc.hi, "oracle": oracle, "contained": ok}]
    _emit_rows(rows, cfg, lambda r: f"{name}: enclosure [{_fmt(enc.lo)}, {_fmt(enc.hi)}] "
               f"oracle {_fmt(oracle)} : {'contained' if ok else 'NOT CONTAINED'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sincbounds",
        description="Sharp cosine-family bounds for sinc/sinhc: constants, "
                    "verification suites, chain tables and enclosures.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=[f.value for f in OutputFormat],
                        default="text", help="output format (default text)")
        sp.add_argument("--points", type=int, default=4096,
                        help="grid size / row count (default 4096, min 64)")
        sp.add_argument("--seed", type=int, default=20250810,
                        help="seed for randomised pair checks")
        sp.add_argument("--tol", type=float, default=1e-12,
                        help="root-solver tolerance in [1e-15, 1e-3]")

    common(sub.add_parser("constants", help="print the sharp constants"))

    sp = sub.add_parser("eval", help="evaluate one function at a point")
    common(sp)
    sp.add_argument("--fn", choices=sorted(_EVAL_FNS), required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--p", type=float, default=None)

    sp = sub.add_parser("verify", help="run a registered check suite")
    common(sp)
    sp.add_argument("--suite", choices=("all",) + corpus.SUITES, default="all")

    sp = sub.add_parser("table", help="emit a CSV chain table")
    common(sp)
    sp.add_argument("--chain", choices=("m1c", "m2c", "meanchain"), required=True)
    sp.add_argument("--pair", type=float, nargs=2, metavar=("A", "B"), default=None,
                    help="explicit pair for the mean chain")

    sp = sub.add_parser("special", help="enclosure vs oracle for one quantity")
    common(sp)
    sp.add_argument("--name", choices=("si", "sh", "trigamma-half", "catalan", "sb", "log-mean"),
                    required=True)
    sp.add_argument("--t", type=float, default=None)
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--b", type=float, default=None)
    sp.add_argument("--terms", type=int, default=1_000_000)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            command=Command(args.command),
            output_format=OutputFormat(args.format),
            points=args.points,
            seed=args.seed,
            tolerance=args.tol,
        )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    try:
        if cfg.command is Command.CONSTANTS:
            return cmd_constants(cfg)
        if cfg.command is Command.EVAL:
            return cmd_eval(cfg, args.fn, args.x, args.p)
        if cfg.command is Command.VERIFY:
            return cmd_verify(cfg, args.suite)
        if cfg.command is Command.TABLE:
            return cmd_table(cfg, args.chain, args.pair)
        return cmd_special(cfg, args.name, args.t, args.p, args.a, args.b, args.terms)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
