"""Minimal static SVG renderings of the experiment outputs.

matplotlib is imported lazily so the CLI stays usable on systems where the
plotting stack is broken; every function writes a single SVG file and
returns its path.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .analysis import PowerLawFit, Series, SweepGrid
from .observables import ProbVector


def _axes(xlabel: str, ylabel: str):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    return fig, ax


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, format="svg")
    import matplotlib.pyplot as plt

    plt.close(fig)
    return path


def save_distribution(path: Path, dist: ProbVector, label: str = "") -> Path:
    fig, ax = _axes("position", "probability")
    ax.bar(dist.positions, dist.probs, width=1.6, label=label or None)
    if label:
        ax.legend()
    return _save(fig, path)


def save_series(
    path: Path,
    series_list: list[Series],
    ylabel: str,
    loglog: bool = False,
    fit: PowerLawFit | None = None,
) -> Path:
    fig, ax = _axes("step t", ylabel)
    for series in series_list:
        ax.plot(series.t_values, series.y_values, label=series.label or None)
    if fit is not None:
        lo, hi = fit.fit_range
        ts = np.linspace(lo, hi, 64)
        ax.plot(
            ts,
            fit.amplitude * ts**fit.exponent,
            "--",
            label=f"fit t^{fit.exponent:.3f}",
        )
    if loglog:
        ax.set_xscale("log")
        ax.set_yscale("log")
    if any(s.label for s in series_list) or fit is not None:
        ax.legend()
    return _save(fig, path)


def save_heatmap(path: Path, grid: SweepGrid) -> Path:
    fig, ax = _axes("coin phase phi", "initial phase theta")
    mesh = ax.pcolormesh(
        grid.phi_values, grid.theta_values, grid.entropy, vmin=0.0, vmax=1.0
    )
    fig.colorbar(mesh, ax=ax, label=f"entropy at t={grid.t}")
    return _save(fig, path)
