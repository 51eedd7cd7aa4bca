"""1-D discrete-time coined quantum walk simulator with per-site coins.

Exact amplitude evolution, coin-walker entanglement observables, a dense
brute-force cross-check engine, a simulated photon-counting tomography
pipeline, and batch analysis (sweeps, scaling series, power-law fits).
"""

from .core import (
    CoinMap,
    NotNormalized,
    WalkState,
    balanced_initial_state,
    evolve,
    general_initial_state,
    hadamard_coin,
    identity_coin,
    iqw_coin_map,
    phase_defect_coin,
    step,
)
from .observables import (
    CoinDensity,
    ProbVector,
    entropy_of_walk,
    fidelity,
    position_distribution,
    position_mean_variance,
    reduced_coin_density,
    similarity,
    trace_distance,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "CoinDensity",
    "CoinMap",
    "NotNormalized",
    "ProbVector",
    "WalkState",
    "balanced_initial_state",
    "entropy_of_walk",
    "evolve",
    "fidelity",
    "general_initial_state",
    "hadamard_coin",
    "identity_coin",
    "iqw_coin_map",
    "phase_defect_coin",
    "position_distribution",
    "position_mean_variance",
    "reduced_coin_density",
    "similarity",
    "step",
    "trace_distance",
    "von_neumann_entropy",
]
