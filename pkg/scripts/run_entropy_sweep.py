#!/usr/bin/env python3
"""Entropy landscape over the (theta, phi) parameter plane at fixed step.

Produces a long-format CSV and an SVG heatmap per requested step.  The
default 101 x 101 grid resolves the two maximal ridges around
(theta, phi) = (pi/2, pi/4) and (3pi/2, 7pi/4); a t=9 sweep takes on the
order of seconds.
"""

import argparse
import csv
from pathlib import Path

from iqwalk.analysis import default_sweep_grid, entropy_sweep
from iqwalk.plotting import save_heatmap


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, nargs="+", default=[9, 8])
    parser.add_argument("--points", type=int, default=101)
    parser.add_argument("--outdir", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    grid_angles = default_sweep_grid(args.points)
    for t in args.steps:
        grid = entropy_sweep(t, grid_angles, grid_angles)
        out = args.outdir / f"entropy_sweep_t{t}.csv"
        with out.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["theta", "phi", "entropy"])
            for i, theta in enumerate(grid.theta_values):
                for j, phi in enumerate(grid.phi_values):
                    writer.writerow([float(theta), float(phi), float(grid.entropy[i, j])])
        svg = save_heatmap(args.outdir / f"entropy_sweep_t{t}.svg", grid)
        print(f"t={t}: max entropy {grid.entropy.max():.6f}; wrote {out} and {svg}")


if __name__ == "__main__":
    main()
