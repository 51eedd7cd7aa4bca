"""Batch experiments on top of the step engine.

Parameter sweeps of the entanglement entropy over the initial-state phase
theta and the origin coin phase phi, step-indexed series (entropy, adjacent
-step trace distance, position variance), and power-law fitting of such
series by least squares in log-log space.

Series are computed on a single evolving state per parameter point, so a
length-N series costs one N-step evolution, not N of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import oracle
from .core import balanced_initial_state, evolve, iqw_coin_map, step
from .observables import (
    position_distribution,
    position_mean_variance,
    reduced_coin_density,
    trace_distance,
    von_neumann_entropy,
)


class NonPositiveData(ValueError):
    """Power-law fit range contains a non-positive value."""


@dataclass(frozen=True)
class SweepGrid:
    """Entropy over a (theta, phi) grid at fixed step; shape (n_theta, n_phi)."""

    theta_values: np.ndarray
    phi_values: np.ndarray
    t: int
    entropy: np.ndarray


@dataclass(frozen=True)
class Series:
    """A step-indexed scalar series with strictly increasing ``t_values``."""

    t_values: np.ndarray
    y_values: np.ndarray
    label: str = ""


@dataclass(frozen=True)
class PowerLawFit:
    """Result of fitting y = amplitude * t^exponent over ``fit_range``."""

    exponent: float
    amplitude: float
    r_squared: float
    fit_range: tuple[int, int]


def entropy_of_walk(theta: float, phi: float, t: int) -> float:
    """Re-exported for convenience; see :mod:`iqwalk.observables`."""
    from .observables import entropy_of_walk as _eow

    return _eow(theta, phi, t)


def entropy_sweep(
    t: int, theta_grid: Sequence[float], phi_grid: Sequence[float]
) -> SweepGrid:
    """Entanglement entropy at step ``t`` for every (theta, phi) grid point."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    thetas = np.asarray(theta_grid, dtype=float)
    phis = np.asarray(phi_grid, dtype=float)
    if thetas.size == 0 or phis.size == 0:
        raise ValueError("theta and phi grids must be non-empty")
    grid = np.empty((thetas.size, phis.size))
    for j, phi in enumerate(phis):
        coins = iqw_coin_map(phi)
        for i, theta in enumerate(thetas):
            state = evolve(balanced_initial_state(theta), coins, t)
            grid[i, j] = von_neumann_entropy(reduced_coin_density(state))
    return SweepGrid(theta_values=thetas, phi_values=phis, t=t, entropy=grid)


def default_sweep_grid(points: int = 101) -> np.ndarray:
    """Uniform grid of ``points`` angles over [0, 2*pi)."""
    return np.linspace(0.0, 2.0 * np.pi, points, endpoint=False)


def entropy_curve(t_max: int, theta: float, phi: float) -> Series:
    """Entropy after each step 1..t_max of one evolving walk."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    state = balanced_initial_state(theta)
    coins = iqw_coin_map(phi)
    ys = np.empty(t_max)
    for t in range(1, t_max + 1):
        state = step(state, coins)
        ys[t - 1] = von_neumann_entropy(reduced_coin_density(state))
    return Series(np.arange(1, t_max + 1), ys, label="entropy")


def trace_distance_series(t_max: int, theta: float, phi: float) -> Series:
    """Adjacent-step coin-state trace distance D(t) for t = 2..t_max."""
    if t_max < 2:
        raise ValueError(f"t_max must be >= 2, got {t_max}")
    state = balanced_initial_state(theta)
    coins = iqw_coin_map(phi)
    state = step(state, coins)
    prev = reduced_coin_density(state)
    ys = np.empty(t_max - 1)
    for t in range(2, t_max + 1):
        state = step(state, coins)
        rho = reduced_coin_density(state)
        ys[t - 2] = trace_distance(rho, prev)
        prev = rho
    return Series(np.arange(2, t_max + 1), ys, label="trace_distance")


def variance_series(t_max: int, theta: float, phi: float) -> Series:
    """Position variance after each step 1..t_max of one evolving walk."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    state = balanced_initial_state(theta)
    coins = iqw_coin_map(phi)
    ys = np.empty(t_max)
    for t in range(1, t_max + 1):
        state = step(state, coins)
        _, nu = position_mean_variance(position_distribution(state))
        ys[t - 1] = nu
    return Series(np.arange(1, t_max + 1), ys, label="variance")


def crw_variance_series(t_max: int) -> Series:
    """Variance of the classical random walk, step by step (equals t)."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    ys = np.empty(t_max)
    for t in range(1, t_max + 1):
        _, nu = position_mean_variance(oracle.crw_distribution(t))
        ys[t - 1] = nu
    return Series(np.arange(1, t_max + 1), ys, label="crw_variance")


def filter_parity(series: Series, parity: str) -> Series:
    """Restrict a series to odd or even steps (``parity`` in all/odd/even)."""
    if parity == "all":
        return series
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be all, odd or even, got {parity!r}")
    remainder = 1 if parity == "odd" else 0
    mask = series.t_values % 2 == remainder
    return Series(series.t_values[mask], series.y_values[mask], series.label)


def fit_power_law(series: Series, t_min: int, t_max: int) -> PowerLawFit:
    """Least-squares line on (log t, log y) over t in [t_min, t_max].

    The slope is the exponent, exp(intercept) the amplitude; r_squared comes
    from the linear regression in log space.  Raises
    :class:`NonPositiveData` if the range contains y <= 0 and ``ValueError``
    if it holds fewer than 10 points.
    """
    mask = (series.t_values >= t_min) & (series.t_values <= t_max)
    ts = np.asarray(series.t_values[mask], dtype=float)
    ys = np.asarray(series.y_values[mask], dtype=float)
    if ts.size < 10:
        raise ValueError(
            f"need at least 10 points in [{t_min}, {t_max}], got {ts.size}"
        )
    if np.any(ys <= 0.0):
        raise NonPositiveData(
            f"series contains non-positive values in [{t_min}, {t_max}]"
        )
    log_t = np.log(ts)
    log_y = np.log(ys)
    slope, intercept = np.polyfit(log_t, log_y, 1)
    residuals = log_y - (slope * log_t + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((log_y - np.mean(log_y)) ** 2))
    if ss_tot > 1e-20:
        r_squared = max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    else:
        # constant data up to rounding: a flat line is a perfect fit
        r_squared = 1.0 if ss_res <= 1e-20 else 0.0
    return PowerLawFit(
        exponent=float(slope),
        amplitude=float(np.exp(intercept)),
        r_squared=r_squared,
        fit_range=(int(t_min), int(t_max)),
    )
