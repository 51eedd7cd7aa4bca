"""Quantities derived from a walk state.

Everything here is a pure function of its inputs: the reduced coin density
matrix, its von Neumann entropy (in bits), trace distance and Uhlmann
fidelity between coin states, the position distribution with its mean and
variance, and the Bhattacharyya-type similarity between two distributions.

Because the coin is a single qubit, trace distance, fidelity and entropy all
use exact 2x2 closed forms rather than general matrix decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import WalkState, balanced_initial_state, evolve, iqw_coin_map


@dataclass(frozen=True)
class CoinDensity:
    """Reduced coin density matrix [[pop0, coherence], [conj(coherence), pop1]].

    ``pop0`` and ``pop1`` are the |0> and |1> populations (real, summing to 1
    within 1e-10 for states obtained from a normalized walk); ``coherence``
    is the off-diagonal element sum_x a(x) * conj(b(x)).
    """

    pop0: float
    pop1: float
    coherence: complex

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.pop0, self.coherence],
                [np.conj(self.coherence), self.pop1],
            ],
            dtype=complex,
        )

    def eigenvalues(self) -> tuple[float, float]:
        """Eigenvalue pair (descending), clamped to [0, 1].

        For a trace-1 matrix the pair is (1 +- sqrt(1 + 4(|c|^2 - p0*p1)))/2;
        floating-point noise can push |c| slightly past 1/2, hence the clamp.
        """
        disc = 1.0 + 4.0 * (abs(self.coherence) ** 2 - self.pop0 * self.pop1)
        root = np.sqrt(max(disc, 0.0))
        lo = min(max(0.5 * (1.0 - root), 0.0), 1.0)
        hi = min(max(0.5 * (1.0 + root), 0.0), 1.0)
        return hi, lo


@dataclass(frozen=True)
class ProbVector:
    """Position distribution over the occupied (parity-valid) lattice sites."""

    positions: np.ndarray
    probs: np.ndarray

    def as_dict(self) -> dict[int, float]:
        return {int(x): float(p) for x, p in zip(self.positions, self.probs)}


def reduced_coin_density(state: WalkState) -> CoinDensity:
    """Partial trace of the pure coin-walker state over the position register."""
    pop0 = float(np.sum(np.abs(state.amp0) ** 2))
    pop1 = float(np.sum(np.abs(state.amp1) ** 2))
    coherence = complex(np.sum(state.amp0 * np.conj(state.amp1)))
    return CoinDensity(pop0, pop1, coherence)


def _plog2p(p: float) -> float:
    # 0 * log2(0) := 0
    return p * np.log2(p) if p > 0.0 else 0.0


def von_neumann_entropy(rho: CoinDensity) -> float:
    """Entropy -sum(lambda * log2(lambda)) in bits; 0 separable, 1 maximal."""
    lam1, lam2 = rho.eigenvalues()
    return -_plog2p(lam1) - _plog2p(lam2)


def entropy_of_walk(theta: float, phi: float, t: int) -> float:
    """Coin-walker entanglement entropy after ``t`` steps.

    Balanced initial state with phase ``theta``, Hadamard coin everywhere with
    the extra phase ``phi`` at the origin.
    """
    state = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t)
    return von_neumann_entropy(reduced_coin_density(state))


def trace_distance(rho1: CoinDensity, rho2: CoinDensity) -> float:
    """Trace distance (1/2) Tr |rho1 - rho2| between two coin states.

    The difference of two trace-1 qubit states is traceless Hermitian, so the
    distance equals its largest singular value sqrt(d^2 + |c|^2) with ``d``
    the diagonal and ``c`` the off-diagonal element of the difference.
    """
    d = rho1.pop0 - rho2.pop0
    c = rho1.coherence - rho2.coherence
    return float(np.sqrt(d * d + abs(c) ** 2))


def fidelity(rho1: CoinDensity, rho2: CoinDensity) -> float:
    """Uhlmann fidelity (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2.

    For qubits this equals the closed form Tr(rho1 rho2) +
    2 sqrt(det(rho1) det(rho2)); determinants are clamped at zero against
    roundoff and the result is clipped to [0, 1].
    """
    tr = (
        rho1.pop0 * rho2.pop0
        + rho1.pop1 * rho2.pop1
        + 2.0 * float(np.real(rho1.coherence * np.conj(rho2.coherence)))
    )
    det1 = max(rho1.pop0 * rho1.pop1 - abs(rho1.coherence) ** 2, 0.0)
    det2 = max(rho2.pop0 * rho2.pop1 - abs(rho2.coherence) ** 2, 0.0)
    return float(min(max(tr + 2.0 * np.sqrt(det1 * det2), 0.0), 1.0))


def position_distribution(state: WalkState) -> ProbVector:
    """P(x) = |a(x)|^2 + |b(x)|^2 over the parity-valid positions |x| <= t."""
    xs = state.positions()
    mask = ((xs + state.t) % 2 == 0) & (np.abs(xs) <= state.t)
    probs = np.abs(state.amp0) ** 2 + np.abs(state.amp1) ** 2
    return ProbVector(positions=xs[mask], probs=probs[mask])


def position_mean_variance(p: ProbVector) -> tuple[float, float]:
    """First moment and central second moment of a position distribution."""
    x = np.asarray(p.positions, dtype=float)
    w = np.asarray(p.probs, dtype=float)
    mu = float(np.sum(w * x))
    nu = float(np.sum(w * (x - mu) ** 2))
    return mu, nu


def similarity(p_a: ProbVector, p_b: ProbVector) -> float:
    """Bhattacharyya overlap sum_x sqrt(P_a(x) P_b(x)).

    Distributions are aligned on the union of their supports (missing entries
    count as zero): 1 for identical distributions, 0 for disjoint supports.
    """
    b = p_b.as_dict()
    total = 0.0
    for x, pa in zip(p_a.positions, p_a.probs):
        pb = b.get(int(x), 0.0)
        if pa > 0.0 and pb > 0.0:
            total += np.sqrt(pa * pb)
    return float(total)
