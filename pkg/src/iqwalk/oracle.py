"""Brute-force verification engine independent of the recursion stepper.

Builds the single-step walk unitary as an explicit dense matrix on the
truncated lattice ``x in [-t_max, t_max]`` and evolves flattened state
vectors by repeated matrix-vector products.  Deliberately dense and slow:
it exists to cross-check the fast engine for small ``t``, where the full
dimension ``2 (2 t_max + 1)`` stays tiny.

Also provides the classical-random-walk baseline distribution and helpers
for drawing Haar-random coins in randomized checks.

Basis layout of a dense vector: index ``coin * (2 t_max + 1) + (x + t_max)``.
Columns at the lattice edge ``|x| = t_max`` lose the amplitude that would
leave the window, so they are not unitary; ``oracle_evolve`` refuses any
evolution whose support could reach the edge.
"""

from __future__ import annotations

import numpy as np

from .core import CoinMap, WalkState
from .observables import ProbVector


class TruncationViolation(ValueError):
    """Evolution would push amplitude past the truncated lattice edge."""


def lattice_positions(t_max: int) -> np.ndarray:
    return np.arange(-t_max, t_max + 1)


def dense_index(coin: int, x: int, t_max: int) -> int:
    return coin * (2 * t_max + 1) + (x + t_max)


def build_step_unitary(t_max: int, coins: CoinMap) -> np.ndarray:
    """Dense matrix for one step (coin at each site, then conditional shift).

    Column ``(c, x)``: the coin at ``x`` contributes ``C(x)[0, c]`` at
    ``(0, x - 1)`` and ``C(x)[1, c]`` at ``(1, x + 1)``; targets outside
    ``[-t_max, t_max]`` are dropped (truncation).
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    npos = 2 * t_max + 1
    u = np.zeros((2 * npos, 2 * npos), dtype=complex)
    for x in range(-t_max, t_max + 1):
        c = coins.coin_at(x)
        for cin in (0, 1):
            col = dense_index(cin, x, t_max)
            if x - 1 >= -t_max:
                u[dense_index(0, x - 1, t_max), col] = c[0, cin]
            if x + 1 <= t_max:
                u[dense_index(1, x + 1, t_max), col] = c[1, cin]
    return u


def dense_state(state: WalkState, t_max: int) -> np.ndarray:
    """Embed a walk state into the flat dense basis of half-width ``t_max``."""
    npos = 2 * t_max + 1
    vec = np.zeros(2 * npos, dtype=complex)
    for i, x in enumerate(state.positions()):
        if abs(int(x)) > t_max:
            if abs(state.amp0[i]) > 0.0 or abs(state.amp1[i]) > 0.0:
                raise TruncationViolation(
                    f"state occupies x={int(x)} outside |x| <= {t_max}"
                )
            continue
        vec[dense_index(0, int(x), t_max)] = state.amp0[i]
        vec[dense_index(1, int(x), t_max)] = state.amp1[i]
    return vec


def dense_amplitudes(vec: np.ndarray, t_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Split a dense vector into (coin-0, coin-1) amplitude arrays over x."""
    npos = 2 * t_max + 1
    return vec[:npos], vec[npos:]


def _support_radius(vec: np.ndarray, t_max: int) -> int:
    a0, a1 = dense_amplitudes(vec, t_max)
    occupied = (np.abs(a0) > 0.0) | (np.abs(a1) > 0.0)
    if not np.any(occupied):
        return 0
    xs = lattice_positions(t_max)[occupied]
    return int(np.max(np.abs(xs)))


def oracle_evolve(initial: np.ndarray, u: np.ndarray, steps: int) -> np.ndarray:
    """Repeated dense matrix-vector product ``u^steps @ initial``.

    Raises :class:`TruncationViolation` unless
    ``steps <= t_max - support_radius``, which guarantees the non-unitary
    boundary columns are never exercised.
    """
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    npos = u.shape[0] // 2
    t_max = (npos - 1) // 2
    radius = _support_radius(initial, t_max)
    if steps > t_max - radius:
        raise TruncationViolation(
            f"{steps} steps from support radius {radius} would reach the "
            f"lattice edge |x| = {t_max}"
        )
    vec = initial
    for _ in range(steps):
        vec = u @ vec
    return vec


def max_amplitude_difference(state: WalkState, vec: np.ndarray, t_max: int) -> float:
    """Largest entrywise |difference| between a walk state and a dense vector."""
    return float(np.max(np.abs(dense_state(state, t_max) - vec)))


def crw_distribution(t: int) -> ProbVector:
    """Symmetric classical random walk: P(x) = C(t, (t+x)/2) / 2^t.

    Probabilities come from the multiplicative recurrence
    p[k+1] = p[k] (t - k)/(k + 1) seeded with 2^-t; relative error stays
    below 1e-10 for t <= 1000.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    probs = np.empty(t + 1)
    probs[0] = 0.5**t
    for k in range(t):
        probs[k + 1] = probs[k] * (t - k) / (k + 1)
    return ProbVector(positions=np.arange(-t, t + 1, 2), probs=probs)


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-random 2x2 unitary via QR of a complex Ginibre matrix."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    # fix the column phases so the distribution is Haar
    phases = np.exp(-1j * np.angle(np.diag(r)))
    return q * phases[None, :]


def random_coin_map(
    rng: np.random.Generator,
    n_overrides: int = 2,
    position_range: int = 6,
) -> CoinMap:
    """Random unitary default coin plus random unitary overrides near x=0."""
    positions = rng.choice(
        np.arange(-position_range, position_range + 1),
        size=min(n_overrides, 2 * position_range + 1),
        replace=False,
    )
    overrides = {int(x): random_unitary(rng) for x in positions}
    return CoinMap(random_unitary(rng), overrides)
