#!/usr/bin/env python3
"""Long-run scaling: adjacent-step trace distance and position variance.

Evolves to 1000 steps at the maximal-entanglement operating point, fits
power laws, and reports the fitted exponents (variance grows ballistically,
close to t^2, for both quantum walks; the classical baseline is exactly
linear; the adjacent-step coin trace distance decays close to t^-3).
Writes CSVs, SVG log-log plots and a JSON summary.
"""

import argparse
import csv
import json
from pathlib import Path

import numpy as np

from iqwalk.analysis import (
    Series,
    crw_variance_series,
    fit_power_law,
    trace_distance_series,
    variance_series,
)
from iqwalk.plotting import save_series


def write_series_csv(path: Path, columns, rows) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=1000)
    parser.add_argument("--fit-min", type=int, default=10)
    parser.add_argument("--variance-fit-min", type=int, default=100)
    parser.add_argument("--outdir", type=Path, default=Path("results"))
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    theta = np.pi / 2
    distance = trace_distance_series(args.steps, theta, np.pi / 4)
    distance_fit = fit_power_law(distance, args.fit_min, args.steps)
    write_series_csv(
        args.outdir / "trace_distance.csv",
        ["t", "D"],
        zip(distance.t_values.tolist(), distance.y_values.tolist()),
    )
    save_series(
        args.outdir / "trace_distance.svg",
        [Series(distance.t_values, distance.y_values, "adjacent-step distance")],
        "trace distance",
        loglog=True,
        fit=distance_fit,
    )

    walks = {
        "defect": variance_series(args.steps, theta, np.pi / 4),
        "hadamard": variance_series(args.steps, theta, 0.0),
        "classical": crw_variance_series(args.steps),
    }
    variance_fits = {
        name: fit_power_law(series, args.variance_fit_min, args.steps)
        for name, series in walks.items()
    }
    write_series_csv(
        args.outdir / "variance.csv",
        ["t", "variance", "walk_type"],
        (
            (int(t), float(v), name)
            for name, series in walks.items()
            for t, v in zip(series.t_values, series.y_values)
        ),
    )
    save_series(
        args.outdir / "variance.svg",
        [Series(s.t_values, s.y_values, name) for name, s in walks.items()],
        "position variance",
        loglog=True,
    )

    summary = {
        "trace_distance": {
            "exponent": distance_fit.exponent,
            "r_squared": distance_fit.r_squared,
            "fit_range": list(distance_fit.fit_range),
        },
        "variance_exponents": {
            name: fit.exponent for name, fit in variance_fits.items()
        },
        "variance_at_11": {
            name: float(series.y_values[10]) for name, series in walks.items()
        },
    }
    out = args.outdir / "scaling_summary.json"
    out.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(json.dumps(summary, indent=2, sort_keys=True))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
