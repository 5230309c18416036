#!/usr/bin/env python3
"""Run the full inequality-verification corpus and write a JSON report.

Usage:
    python scripts/run_verification.py [--points N] [--seed S] [--out DIR]
"""

import argparse
import json
import sys
import time
from pathlib import Path

from sincbounds.corpus import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=8192)
    ap.add_argument("--seed", type=int, default=20250810)
    ap.add_argument("--out", type=Path, default=Path("out"))
    args = ap.parse_args()

    t0 = time.perf_counter()
    results = run_suite("all", points=args.points, seed=args.seed)
    elapsed = time.perf_counter() - t0

    rows = [
        {"suite": r.suite, "id": r.id, "kind": r.kind, "ok": r.ok,
         "expected": r.expected, "observed": r.observed, "detail": r.detail}
        for r in results
    ]
    args.out.mkdir(parents=True, exist_ok=True)
    report = args.out / "verification_report.json"
    report.write_text(json.dumps(rows, indent=2))

    n_bad = sum(not r.ok for r in results)
    by_suite = {}
    for r in results:
        ok, total = by_suite.get(r.suite, (0, 0))
        by_suite[r.suite] = (ok + r.ok, total + 1)
    for suite, (ok, total) in by_suite.items():
        print(f"{suite:<14} {ok}/{total}")
    print(f"total          {len(results) - n_bad}/{len(results)} in {elapsed:.2f} s")
    print(f"report: {report}")
    return 0 if n_bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
