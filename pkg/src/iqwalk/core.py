"""State representation and unitary evolution of a 1-D coined quantum walk.

The coin is a qubit: the |0> component moves the walker one site to the left,
the |1> component one site to the right.  Starting from the origin, after
``t`` steps the state is supported on ``x in [-t, t]`` and only at positions
with the same parity as ``t``.  Amplitudes are stored in dense complex arrays
of length ``2 t + 1`` (array index ``i`` holds position ``x = i + offset``),
wrong-parity slots included as exact zeros, so that one step is a handful of
vectorised array operations.

The coin operator may differ from site to site (a ``CoinMap``); the walk with
a Hadamard coin everywhere except for an extra phase factor at the origin is
provided by :func:`iqw_coin_map`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

UNITARITY_TOL = 1e-12

_SQRT2_INV = 1.0 / np.sqrt(2.0)


class NotNormalized(ValueError):
    """Initial coin amplitudes do not form a unit vector."""


def hadamard_coin() -> np.ndarray:
    """Return the 2x2 Hadamard coin (1/sqrt(2)) [[1, 1], [1, -1]]."""
    return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) * _SQRT2_INV


def phase_defect_coin(phi: float) -> np.ndarray:
    """Hadamard coin times the phase factor exp(i*phi).

    Reduces to the plain Hadamard coin for ``phi = 0``.
    """
    return np.exp(1j * phi) * hadamard_coin()


def identity_coin() -> np.ndarray:
    """Return the 2x2 identity coin (routes |0> left, |1> right unchanged)."""
    return np.eye(2, dtype=complex)


def is_unitary(u: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    """True if ``u`` is a 2x2 matrix with ``u^dag u = I`` within ``tol``."""
    u = np.asarray(u)
    if u.shape != (2, 2):
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(2))) <= tol)


@dataclass(frozen=True)
class CoinMap:
    """Assignment of a 2x2 unitary coin operator to every lattice position.

    ``default_coin`` applies everywhere except at the positions listed in
    ``overrides``.  Unitarity is checked once at construction (not per step).
    Instances are immutable and safe to share between threads.
    """

    default_coin: np.ndarray
    overrides: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        default = np.array(self.default_coin, dtype=complex)
        if not is_unitary(default):
            raise ValueError("default coin is not a 2x2 unitary")
        fixed = {}
        for x, u in self.overrides.items():
            u = np.array(u, dtype=complex)
            if not is_unitary(u):
                raise ValueError(f"coin override at x={x} is not a 2x2 unitary")
            fixed[int(x)] = u
        object.__setattr__(self, "default_coin", default)
        object.__setattr__(self, "overrides", fixed)

    def coin_at(self, x: int) -> np.ndarray:
        """Coin operator acting at position ``x``."""
        return self.overrides.get(x, self.default_coin)


def iqw_coin_map(phi: float) -> CoinMap:
    """Position-inhomogeneous map: Hadamard everywhere, exp(i*phi)*H at x=0.

    ``phi = 0`` gives the homogeneous Hadamard walk.
    """
    return CoinMap(hadamard_coin(), {0: phase_defect_coin(phi)})


@dataclass(frozen=True)
class WalkState:
    """Coined-walk state after ``t`` steps.

    ``amp0[i]`` and ``amp1[i]`` are the coin-|0> and coin-|1> amplitudes at
    position ``x = i + offset``.  Treat instances as immutable: evolution
    returns new states and never writes into existing arrays.
    """

    t: int
    offset: int
    amp0: np.ndarray
    amp1: np.ndarray

    def amplitude(self, x: int, coin: int) -> complex:
        """Stored amplitude at ``(x, coin)``; exact zero outside the support."""
        if coin not in (0, 1):
            raise ValueError(f"coin must be 0 or 1, got {coin}")
        arr = self.amp0 if coin == 0 else self.amp1
        i = x - self.offset
        if 0 <= i < arr.shape[0]:
            return complex(arr[i])
        return 0j

    def positions(self) -> np.ndarray:
        """All stored lattice positions (both parities)."""
        return np.arange(self.offset, self.offset + self.amp0.shape[0])

    def norm_squared(self) -> float:
        """Total probability; 1 within 1e-12 for any state reached by ``step``."""
        return float(np.sum(np.abs(self.amp0) ** 2) + np.sum(np.abs(self.amp1) ** 2))


def balanced_initial_state(theta: float) -> WalkState:
    """Walker at the origin with coin (|0> + exp(i*theta)|1>)/sqrt(2).

    Equal coin populations for every ``theta``; ``theta`` enters only through
    the 2*pi-periodic relative phase.
    """
    amp0 = np.array([_SQRT2_INV], dtype=complex)
    amp1 = np.array([np.exp(1j * theta) * _SQRT2_INV], dtype=complex)
    return WalkState(t=0, offset=0, amp0=amp0, amp1=amp1)


def general_initial_state(a0: complex, b0: complex) -> WalkState:
    """Walker at the origin with coin amplitudes ``(a0, b0)``.

    Raises :class:`NotNormalized` unless |a0|^2 + |b0|^2 = 1 within 1e-9.
    """
    norm2 = abs(a0) ** 2 + abs(b0) ** 2
    if abs(norm2 - 1.0) > 1e-9:
        raise NotNormalized(f"|a0|^2 + |b0|^2 = {norm2!r}, expected 1")
    return WalkState(
        t=0,
        offset=0,
        amp0=np.array([a0], dtype=complex),
        amp1=np.array([b0], dtype=complex),
    )


def step(state: WalkState, coins: CoinMap) -> WalkState:
    """Advance the walk one step: coin at every site, then conditional shift.

    At each position ``x`` the local coin maps ``(a, b) -> C(x) (a, b)``; the
    resulting |0> component is routed to ``x - 1`` and the |1> component to
    ``x + 1``.  The arrays grow by one slot on each side, the step count by
    one; normalization is preserved within 1e-12 per step.
    """
    n = state.amp0.shape[0]
    d = coins.default_coin
    c0 = d[0, 0] * state.amp0 + d[0, 1] * state.amp1
    c1 = d[1, 0] * state.amp0 + d[1, 1] * state.amp1
    for x, u in coins.overrides.items():
        i = x - state.offset
        if 0 <= i < n:
            a, b = state.amp0[i], state.amp1[i]
            c0[i] = u[0, 0] * a + u[0, 1] * b
            c1[i] = u[1, 0] * a + u[1, 1] * b
    amp0 = np.zeros(n + 2, dtype=complex)
    amp1 = np.zeros(n + 2, dtype=complex)
    amp0[:n] = c0  # |0> lands one site to the left
    amp1[2:] = c1  # |1> lands one site to the right
    return WalkState(t=state.t + 1, offset=state.offset - 1, amp0=amp0, amp1=amp1)


def evolve(state: WalkState, coins: CoinMap, steps: int) -> WalkState:
    """Apply ``step`` repeatedly; ``steps = 0`` returns the input unchanged."""
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    for _ in range(steps):
        state = step(state, coins)
    return state
