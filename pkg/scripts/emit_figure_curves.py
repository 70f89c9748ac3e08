#!/usr/bin/env python3
"""Emit the three standard rate/relative-distance comparison datasets.

Each CSV compares the published asymptotic bounds against the residual-chain
bound (with MRRW as the locality-free rate bound) for one fixed locality:
(r=4, delta=3), (r=6, delta=3), and (r=12, delta=9), all over GF(2).
Plotting is left to external tools.
"""

import argparse
from pathlib import Path

from lrckit.asymptotic import default_grid, emit_curves

PARAM_SETS = {
    "locality_4_3": dict(r=4, delta=3, q=2),
    "locality_6_3": dict(r=6, delta=3, q=2),
    "locality_12_9": dict(r=12, delta=9, q=2),
}

CURVES = ["prakash", "cm_rdelta", "abhmt", "local_griesmer", "reschain"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="curves", help="output directory")
    parser.add_argument("--grid", type=int, default=512, help="grid points in [0, 1]")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = default_grid(args.grid)
    for name, params in PARAM_SETS.items():
        path = out_dir / f"{name}.csv"
        emit_curves(CURVES, grid, **params, out=path, lc_choice="best", ropt_choice="mrrw")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
