#!/usr/bin/env python3
"""Tabulate univalence radii against the data bounds.

Writes two CSV tables: r0 and R0 of the bounded-field variant over a
range of sup bounds M, and of the full-problem variant along the
diagonal (M, M, M).

Usage: python scripts/landau_scan.py [--out-dir out]
"""

import argparse
import pathlib

import numpy as np

from bidisk import landau_ibdp, landau_t2


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="out")
    args = ap.parse_args()
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    with open(out_dir / "landau_t2.csv", "w", encoding="utf-8") as fh:
        fh.write("m,r0,residual,R0_lower\n")
        for m in np.geomspace(np.pi / 4.0, 16.0, 25):
            res = landau_t2(float(m))
            fh.write(f"{m:.17g},{res.r0:.17g},{res.residual:.17g},{res.R0_lower:.17g}\n")

    with open(out_dir / "landau_ibdp.csv", "w", encoding="utf-8") as fh:
        fh.write("m,r0,residual,R0_lower\n")
        for m in np.geomspace(0.25, 16.0, 25):
            res = landau_ibdp(float(m), float(m), float(m))
            fh.write(f"{m:.17g},{res.r0:.17g},{res.residual:.17g},{res.R0_lower:.17g}\n")

    print(f"wrote {out_dir}/landau_t2.csv and {out_dir}/landau_ibdp.csv")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
