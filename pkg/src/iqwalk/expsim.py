"""Simulated measurement pipeline: projective counting and coin tomography.

Models how the coin state would be read out in a photon-counting experiment:
project every occupied position onto four polarization-type bases (H, V,
diagonal, circular), attenuate the expected counts by a fixed dB loss per
step, draw independent Poisson counts per (position, basis) cell, and
reconstruct the reduced coin density matrix from the aggregated counts by
linear inversion on the Bloch vector.

Conventions pinned here (they must match for the round trip to be exact):

* the projector states are kets; a projection amplitude is the standard
  inner product conj(c0) a + conj(c1) b,
* basis L is the ket (1, -i)/sqrt(2), so its aggregated relative frequency
  p_L satisfies bloch_y = 1 - 2 p_L,
* the diagonal and circular counts are normalized by the same-run H+V total,
  which doubles as the photon-number reference.

All randomness flows through an explicitly seeded generator; identical
inputs and seed reproduce counts bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import WalkState, balanced_initial_state, evolve, iqw_coin_map
from .observables import CoinDensity, reduced_coin_density, von_neumann_entropy

MEAS_LABELS = ("H", "V", "D", "L")

_SQRT2_INV = 1.0 / np.sqrt(2.0)


class EmptyCounts(ValueError):
    """No H or V counts: the photon-number reference is undefined."""


@dataclass(frozen=True)
class MeasBasis:
    """Measurement basis: a label and the unit-norm projector ket (c0, c1)."""

    label: str
    projector_state: tuple[complex, complex]


_BASES = {
    "H": MeasBasis("H", (1.0 + 0j, 0j)),
    "V": MeasBasis("V", (0j, 1.0 + 0j)),
    "D": MeasBasis("D", (_SQRT2_INV + 0j, _SQRT2_INV + 0j)),
    "L": MeasBasis("L", (_SQRT2_INV + 0j, -1j * _SQRT2_INV)),
}


def measurement_basis(label: str) -> MeasBasis:
    """Look up one of the four bases by its label (H, V, D or L)."""
    try:
        return _BASES[label]
    except KeyError:
        raise ValueError(f"unknown basis label {label!r}, expected one of H,V,D,L")


@dataclass(frozen=True)
class CountsTable:
    """Detector counts per (position, basis) for one walk state.

    ``rows`` holds (position, basis label, count) triples.  Counts from
    :func:`simulate_counts` are non-negative integers; :func:`expected_counts`
    fills in the real-valued Poisson means instead (the noiseless table).
    """

    t: int
    rows: tuple[tuple[int, str, float], ...]
    n0: float
    loss_db_per_step: float

    def totals(self) -> dict[str, float]:
        """Counts aggregated over positions, one entry per basis label."""
        out = dict.fromkeys(MEAS_LABELS, 0.0)
        for _, label, count in self.rows:
            out[label] += count
        return out


def projection_probability(state: WalkState, x: int, basis: MeasBasis | str) -> float:
    """|<basis|psi(x)>|^2 for the coin amplitudes stored at position ``x``."""
    if isinstance(basis, str):
        basis = measurement_basis(basis)
    c0, c1 = basis.projector_state
    amp = np.conj(c0) * state.amplitude(x, 0) + np.conj(c1) * state.amplitude(x, 1)
    return float(abs(amp) ** 2)


def loss_factor(loss_db_per_step: float, t: int) -> float:
    """Count attenuation 10^(-loss_db * t / 10) after ``t`` steps."""
    return float(10.0 ** (-loss_db_per_step * t / 10.0))


def _occupied_positions(state: WalkState) -> np.ndarray:
    xs = state.positions()
    return xs[((xs + state.t) % 2 == 0) & (np.abs(xs) <= state.t)]


def _mean_counts(state: WalkState, n0: float, loss_db_per_step: float):
    if n0 <= 0.0:
        raise ValueError(f"n0 must be positive, got {n0}")
    if loss_db_per_step < 0.0:
        raise ValueError(f"loss must be non-negative, got {loss_db_per_step}")
    scale = n0 * loss_factor(loss_db_per_step, state.t)
    for x in _occupied_positions(state):
        for label in MEAS_LABELS:
            yield int(x), label, scale * projection_probability(state, int(x), label)


def expected_counts(state: WalkState, n0: float, loss_db_per_step: float) -> CountsTable:
    """Noiseless table: the exact Poisson means, no sampling applied."""
    rows = tuple(_mean_counts(state, n0, loss_db_per_step))
    return CountsTable(state.t, rows, n0, loss_db_per_step)


def simulate_counts(
    state: WalkState, n0: float, loss_db_per_step: float, seed: int
) -> CountsTable:
    """Independent Poisson draw per (position, basis); deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    rows = tuple(
        (x, label, int(rng.poisson(mean)))
        for x, label, mean in _mean_counts(state, n0, loss_db_per_step)
    )
    return CountsTable(state.t, rows, n0, loss_db_per_step)


def reconstruct_density(counts: CountsTable) -> CoinDensity:
    """Linear-inversion tomography of the coin state from aggregated counts.

    Relative frequencies p_H, p_D, p_L (each normalized by the H+V total)
    give the Bloch vector (2 p_D - 1, 1 - 2 p_L, 2 p_H - 1).  If sampling
    noise pushes an eigenvalue of the inverted matrix below zero it is
    clipped to zero and the trace renormalized, so the result is always a
    valid density matrix.
    """
    totals = counts.totals()
    reference = totals["H"] + totals["V"]
    if reference <= 0.0:
        raise EmptyCounts("total H+V counts are zero")
    p_h = totals["H"] / reference
    p_d = totals["D"] / reference
    p_l = totals["L"] / reference
    bx = 2.0 * p_d - 1.0
    by = 1.0 - 2.0 * p_l
    bz = 2.0 * p_h - 1.0
    rho = 0.5 * np.array(
        [[1.0 + bz, bx - 1j * by], [bx + 1j * by, 1.0 - bz]], dtype=complex
    )
    evals, evecs = np.linalg.eigh(rho)
    if evals[0] < 0.0:
        evals = np.clip(evals, 0.0, None)
        rho = (evecs * evals) @ evecs.conj().T
        rho /= np.trace(rho).real
    return CoinDensity(float(rho[0, 0].real), float(rho[1, 1].real), complex(rho[0, 1]))


def experimental_entropy(
    theta: float, phi: float, t: int, n0: float, loss: float, seed: int
) -> float:
    """Full pipeline: evolve, count with noise, reconstruct, take the entropy."""
    state = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t)
    counts = simulate_counts(state, n0, loss, seed)
    return von_neumann_entropy(reconstruct_density(counts))


def theoretical_density(theta: float, phi: float, t: int) -> CoinDensity:
    """Exact reduced coin density the pipeline is trying to recover."""
    state = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t)
    return reduced_coin_density(state)
