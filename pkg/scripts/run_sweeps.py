#!/usr/bin/env python3
"""Run every inequality sweep and write JSON + CSV reports.

Usage: python scripts/run_sweeps.py [--samples 500] [--points 20]
       [--seed 0] [--out-dir out]
"""

import argparse
import json
import pathlib
import time

from bidisk import Theorem, run_sweep, summarize, sweep_report, write_records_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--points", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir", default="out")
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    total_violations = 0
    for theorem in Theorem:
        t0 = time.perf_counter()
        records = run_sweep(
            theorem,
            n_problems=args.samples,
            points_per_problem=args.points,
            seed=args.seed,
        )
        elapsed = time.perf_counter() - t0
        s = summarize(theorem.value, records)
        total_violations += s.violations
        stem = out_dir / f"sweep_{theorem.value}"
        with open(f"{stem}.json", "w", encoding="utf-8") as fh:
            json.dump(sweep_report(theorem.value, records), fh, indent=2)
        write_records_csv(f"{stem}.csv", records)
        print(
            f"{theorem.value:10s} samples={s.samples} violations={s.violations} "
            f"min_margin={s.min_margin:.3e} [{elapsed:.1f}s]"
        )
    return 1 if total_violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
