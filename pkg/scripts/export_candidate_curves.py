#!/usr/bin/env python3
"""Export sign-sampling CSVs of candidate curves for plotting.

Each certified example whose method carries a candidate V gets a CSV of
grid signs and zero-crossing midpoints under the output directory.  The
CSVs are plotting aids; nothing in them feeds back into a certificate.

Usage: python3 scripts/export_candidate_curves.py [out_dir] [resolution]
"""

import sys
from pathlib import Path

from cyclecert import export_curve_samples, load_problem, run_certificate

WINDOW = (-3, 3, -3, 3)


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("curves")
    res = int(sys.argv[2]) if len(sys.argv) > 2 else 200
    problems = Path(__file__).resolve().parent.parent / "problems"
    out_dir.mkdir(parents=True, exist_ok=True)
    wrote = 0
    for path in sorted(problems.glob("*.prob")):
        report = run_certificate(load_problem(str(path)))
        if report.candidate_v is None:
            continue
        target = out_dir / (path.stem + ".csv")
        export_curve_samples(report.candidate_v, WINDOW, res, str(target))
        print(f"{path.name:32s} -> {target}")
        wrote += 1
    if not wrote:
        print("no examples carry a candidate curve", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
