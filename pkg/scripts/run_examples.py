#!/usr/bin/env python3
"""Run every problem file in problems/ and print a one-line outcome each.

Usage: python3 scripts/run_examples.py [problems_dir]
"""

import sys
from pathlib import Path

from cyclecert import load_problem, run_certificate


def main() -> int:
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "problems"
    paths = sorted(root.glob("*.prob"))
    if not paths:
        print(f"no .prob files under {root}", file=sys.stderr)
        return 1
    worst = 0
    for path in paths:
        report = run_certificate(load_problem(str(path)))
        bound = "-" if report.bound is None else str(report.bound)
        print(f"{path.name:32s} {report.method:15s} {report.status:13s} "
              f"bound={bound}")
        worst = max(worst, report.exit_code_hint)
    return worst


if __name__ == "__main__":
    sys.exit(main())
