"""Self-contained correctness checks behind the ``verify`` CLI subcommand.

Each check returns (name, passed, detail).  They mirror the test suite's
cross-engine and invariant checks but run without pytest so a deployed
install can be audited with one command.
"""

from __future__ import annotations

import numpy as np

from . import core, expsim, observables, oracle

Check = tuple[str, bool, str]


def check_oracle_equivalence(instances: int, seed: int) -> Check:
    """Random coin maps and initial phases: stepper vs dense matrix engine."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(instances):
        coins = oracle.random_coin_map(rng)
        theta = rng.uniform(0.0, 2.0 * np.pi)
        t = int(rng.integers(1, 13))
        state = core.balanced_initial_state(theta)
        evolved = core.evolve(state, coins, t)
        u = oracle.build_step_unitary(t, coins)
        vec = oracle.oracle_evolve(oracle.dense_state(state, t), u, t)
        worst = max(worst, oracle.max_amplitude_difference(evolved, vec, t))
    return (
        "oracle-equivalence",
        worst < 1e-12,
        f"{instances} instances, max |diff| = {worst:.3e}",
    )


def check_normalization_parity(seed: int) -> Check:
    """Norm within 1e-9 and exact wrong-parity zeros along long evolutions."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    parity_ok = True
    cases = [(np.pi / 2, np.pi / 4, 1000), (np.pi / 2, 0.0, 300)]
    cases += [
        (rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi), 200) for _ in range(3)
    ]
    for theta, phi, t_max in cases:
        state = core.balanced_initial_state(theta)
        coins = core.iqw_coin_map(phi)
        for _ in range(t_max):
            state = core.step(state, coins)
        worst = max(worst, abs(state.norm_squared() - 1.0))
        xs = state.positions()
        odd = (xs + state.t) % 2 != 0
        if np.any(state.amp0[odd] != 0.0) or np.any(state.amp1[odd] != 0.0):
            parity_ok = False
    return (
        "normalization-parity",
        worst < 1e-9 and parity_ok,
        f"max |norm-1| = {worst:.3e}, parity zeros exact = {parity_ok}",
    )


def check_entropy_and_eigenvalues(seed: int) -> Check:
    """Entropy in [0,1]; eigenvalue sum/product identities on random states."""
    rng = np.random.default_rng(seed)
    worst_sum = worst_prod = 0.0
    bounds_ok = True
    for _ in range(50):
        coins = oracle.random_coin_map(rng)
        state = core.evolve(
            core.balanced_initial_state(rng.uniform(0, 2 * np.pi)),
            coins,
            int(rng.integers(0, 30)),
        )
        rho = observables.reduced_coin_density(state)
        lam1, lam2 = rho.eigenvalues()
        e = observables.von_neumann_entropy(rho)
        bounds_ok &= 0.0 <= e <= 1.0
        worst_sum = max(worst_sum, abs(lam1 + lam2 - 1.0))
        det = rho.pop0 * rho.pop1 - abs(rho.coherence) ** 2
        worst_prod = max(worst_prod, abs(lam1 * lam2 - det))
    return (
        "entropy-eigenvalue-identities",
        bounds_ok and worst_sum < 1e-10 and worst_prod < 1e-10,
        f"|sum-1| <= {worst_sum:.3e}, |prod-det| <= {worst_prod:.3e}",
    )


def _random_density(rng: np.random.Generator) -> observables.CoinDensity:
    # uniform over the Bloch ball
    v = rng.normal(size=3)
    v *= rng.uniform() ** (1 / 3) / np.linalg.norm(v)
    bx, by, bz = v
    return observables.CoinDensity(
        (1 + bz) / 2, (1 - bz) / 2, (bx - 1j * by) / 2
    )


def check_trace_distance_axioms(seed: int) -> Check:
    """Symmetry, identity of indiscernibles and triangle inequality."""
    rng = np.random.default_rng(seed)
    ok = True
    for _ in range(200):
        r1, r2, r3 = (_random_density(rng) for _ in range(3))
        d12 = observables.trace_distance(r1, r2)
        d21 = observables.trace_distance(r2, r1)
        d13 = observables.trace_distance(r1, r3)
        d23 = observables.trace_distance(r2, r3)
        ok &= abs(d12 - d21) < 1e-12
        ok &= observables.trace_distance(r1, r1) < 1e-12
        ok &= d13 <= d12 + d23 + 1e-10
    return ("trace-distance-axioms", ok, "200 random triples")


def check_global_phase(seed: int) -> Check:
    """A global phase on the initial coin state changes nothing observable."""
    rng = np.random.default_rng(seed)
    ok = True
    for _ in range(10):
        theta = rng.uniform(0, 2 * np.pi)
        alpha = rng.uniform(0, 2 * np.pi)
        phi = rng.uniform(0, 2 * np.pi)
        t = int(rng.integers(1, 15))
        coins = core.iqw_coin_map(phi)
        base = core.balanced_initial_state(theta)
        phase = np.exp(1j * alpha)
        shifted = core.general_initial_state(
            phase * base.amp0[0], phase * base.amp1[0]
        )
        s1 = core.evolve(base, coins, t)
        s2 = core.evolve(shifted, coins, t)
        ok &= float(np.max(np.abs(s2.amp0 - phase * s1.amp0))) < 1e-12
        ok &= float(np.max(np.abs(s2.amp1 - phase * s1.amp1))) < 1e-12
        e1 = observables.von_neumann_entropy(observables.reduced_coin_density(s1))
        e2 = observables.von_neumann_entropy(observables.reduced_coin_density(s2))
        ok &= abs(e1 - e2) < 1e-12
    return ("global-phase-invariance", ok, "10 random phases")


def check_tomography_roundtrip(seed: int) -> Check:
    """Noiseless counts reproduce the reduced density matrix exactly."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(20):
        state = core.evolve(
            core.balanced_initial_state(rng.uniform(0, 2 * np.pi)),
            core.iqw_coin_map(rng.uniform(0, 2 * np.pi)),
            int(rng.integers(0, 12)),
        )
        exact = observables.reduced_coin_density(state)
        rebuilt = expsim.reconstruct_density(expsim.expected_counts(state, 1e6, 0.0))
        worst = max(
            worst, float(np.max(np.abs(rebuilt.as_matrix() - exact.as_matrix())))
        )
    return (
        "tomography-roundtrip",
        worst < 1e-10,
        f"max entrywise error = {worst:.3e}",
    )


def check_crw_variance() -> Check:
    """Classical baseline variance equals t within 1e-10 for t <= 64."""
    worst = 0.0
    for t in range(1, 65):
        _, nu = observables.position_mean_variance(oracle.crw_distribution(t))
        worst = max(worst, abs(nu - t))
    return ("crw-variance", worst < 1e-10, f"max |nu - t| = {worst:.3e}")


def check_evolve_composition(seed: int) -> Check:
    """evolve(p + q) equals evolve(p) then evolve(q) entrywise."""
    rng = np.random.default_rng(seed)
    ok = True
    for _ in range(10):
        coins = oracle.random_coin_map(rng)
        state = core.balanced_initial_state(rng.uniform(0, 2 * np.pi))
        p, q = int(rng.integers(0, 8)), int(rng.integers(0, 8))
        whole = core.evolve(state, coins, p + q)
        parts = core.evolve(core.evolve(state, coins, p), coins, q)
        ok &= float(np.max(np.abs(whole.amp0 - parts.amp0))) < 1e-12
        ok &= float(np.max(np.abs(whole.amp1 - parts.amp1))) < 1e-12
    return ("evolve-composition", ok, "10 random splits")


def run_all(instances: int = 200, seed: int = 20240811) -> list[Check]:
    """Run every check; callers decide how to report the results."""
    return [
        check_oracle_equivalence(instances, seed),
        check_normalization_parity(seed + 1),
        check_entropy_and_eigenvalues(seed + 2),
        check_trace_distance_axioms(seed + 3),
        check_global_phase(seed + 4),
        check_tomography_roundtrip(seed + 5),
        check_crw_variance(),
        check_evolve_composition(seed + 6),
    ]
