"""Command line front end.

    cyclecert check problem.prob
    cyclecert check problem.prob --json report.json
    cyclecert check problem.prob --sweep b=0:2:1/4
    cyclecert check problem.prob --samples curve.csv --window -3,3,-3,3 --res 400

``check`` loads a problem file, runs its certificate, prints the human
summary to stdout, and exits 0 when certified, 2 when inconclusive, and 1
on any error.  ``--json`` writes the machine-readable report next to the
human text.  ``--sweep`` re-runs the certificate over an inclusive grid of
values for one [params] entry.  ``--samples`` writes a sign-sampling CSV of
the candidate curve (plotting aid only, not a certificate).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .errors import CycleCertError
from .problems import export_curve_samples, load_problem, run_certificate

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecert",
        description="machine-checkable limit-cycle bounds for planar "
                    "polynomial and rational vector fields")
    parser.add_argument("--version", action="version",
                        version=f"cyclecert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser(
        "check", help="run the certificate declared in a problem file")
    check.add_argument("file", help="path to the problem file")
    check.add_argument("--json", metavar="OUT.json", dest="json_out",
                       help="write the machine-readable report here")
    check.add_argument("--sweep", metavar="PARAM=LO:HI:STEP",
                       help="re-run over an inclusive grid of one "
                            "[params] value")
    check.add_argument("--samples", metavar="OUT.csv",
                       help="write sign samples of the candidate curve "
                            "(needs --window)")
    check.add_argument("--window", metavar="X0,X1,Y0,Y1",
                       help="sampling window, four exact rationals")
    check.add_argument("--res", type=int, default=200, metavar="N",
                       help="sampling grid resolution per axis "
                            "(default 200)")
    return parser


def _parse_sweep(text: str):
    try:
        name, grid = text.split("=", 1)
        lo_s, hi_s, step_s = grid.split(":")
        lo, hi, step = Fraction(lo_s), Fraction(hi_s), Fraction(step_s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(
            f"bad --sweep {text!r}; expected PARAM=LO:HI:STEP with exact "
            f"rationals")
    name = name.strip()
    if not name:
        raise ValueError("bad --sweep: empty parameter name")
    if step <= 0:
        raise ValueError("bad --sweep: step must be positive")
    if hi < lo:
        raise ValueError("bad --sweep: HI must be at least LO")
    values = []
    v = lo
    while v <= hi:
        values.append(v)
        v += step
    return name, values


def _parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(
            f"bad --window {text!r}; expected X0,X1,Y0,Y1")
    try:
        x0, x1, y0, y1 = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(
            f"bad --window {text!r}; entries must be exact rationals")
    return x0, x1, y0, y1


def _run_check(args) -> int:
    if args.samples and not args.window:
        print("error: --samples needs --window", file=sys.stderr)
        return 1

    if args.sweep:
        return _run_sweep(args)

    try:
        spec = load_problem(args.file)
    except (CycleCertError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report = run_certificate(spec)
    print(report.human_summary)

    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
        print(f"report written to {args.json_out}")

    if args.samples:
        if report.candidate_v is None:
            print("error: this method carries no candidate curve to "
                  "sample", file=sys.stderr)
            return 1
        try:
            window = _parse_window(args.window)
            export_curve_samples(report.candidate_v, window, args.res,
                                 args.samples)
        except (CycleCertError, ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"curve samples written to {args.samples} (plotting aid, "
              f"not a certificate)")

    return report.exit_code_hint


def _run_sweep(args) -> int:
    try:
        name, values = _parse_sweep(args.sweep)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    results = []
    worst = 0
    for value in values:
        try:
            spec = load_problem(args.file, overrides={name: value})
            report = run_certificate(spec)
        except (CycleCertError, OSError) as exc:
            print(f"{name}={value}: error ({type(exc).__name__}: {exc})")
            results.append({"parameter_value": str(value),
                            "status": "error",
                            "error": type(exc).__name__,
                            "message": str(exc)})
            worst = 1
            continue
        line = f"{name}={value}: {report.status}"
        if report.bound is not None:
            line += f" bound={report.bound}"
        print(line)
        results.append({"parameter_value": str(value),
                        "report": report.as_dict()})
        if report.status == "error":
            worst = 1
        elif report.status == "inconclusive" and worst == 0:
            worst = 2

    if args.json_out:
        doc = {"version": __version__,
               "sweep": {"parameter": name,
                         "values": [str(v) for v in values]},
               "results": results}
        with open(args.json_out, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(f"sweep report written to {args.json_out}")
    return worst


def _glue_dash_values(argv: List[str]) -> List[str]:
    """Turn ["--window", "-2,2,-2,2"] into ["--window=-2,2,-2,2"] so window
    corners may be negative without the = syntax."""
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in ("--window", "--sweep") and i + 1 < len(argv):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_glue_dash_values(list(argv)))
    if args.command == "check":
        return _run_check(args)
    parser.error(f"unknown command {args.command!r}")  # pragma: no cover
    return 1  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
