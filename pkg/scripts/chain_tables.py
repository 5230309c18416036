#!/usr/bin/env python3
"""Write CSV tables for the two fixed-parameter chains and the mean chain.

Usage:
    python scripts/chain_tables.py [--points N] [--seed S] [--out DIR]
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from sincbounds.cli import chain_table
from sincbounds.means import random_pairs


def _write(path: Path, header, rows) -> None:
    with path.open("w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=101)
    ap.add_argument("--seed", type=int, default=20250810)
    ap.add_argument("--out", type=Path, default=Path("out"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    header, rows = chain_table("m1c", np.linspace(0.0, np.pi / 2, args.points))
    _write(args.out / "chain_trig.csv", header, rows)
    header, rows = chain_table("m2c", np.linspace(0.0, 20.0, args.points))
    _write(args.out / "chain_hyp.csv", header, rows)
    pairs = random_pairs(args.points, args.seed, ratio_span=(1e-3, 1e3), scale_span=(0.5, 2.0))
    header, rows = chain_table("meanchain", pairs)
    _write(args.out / "chain_means.csv", header, rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
