import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqwalk.core import (
    CoinMap,
    balanced_initial_state,
    evolve,
    identity_coin,
    iqw_coin_map,
    step,
)
from iqwalk.observables import (
    CoinDensity,
    position_mean_variance,
    von_neumann_entropy,
)
from iqwalk.oracle import (
    TruncationViolation,
    build_step_unitary,
    crw_distribution,
    dense_amplitudes,
    dense_index,
    dense_state,
    max_amplitude_difference,
    oracle_evolve,
    random_coin_map,
    random_unitary,
)
from strategies import angles, coin_maps


def _density_from_dense(vec, t_max):
    a0, a1 = dense_amplitudes(vec, t_max)
    return CoinDensity(
        float(np.sum(np.abs(a0) ** 2)),
        float(np.sum(np.abs(a1) ** 2)),
        complex(np.sum(a0 * np.conj(a1))),
    )


class TestBuildStepUnitary:
    def test_identity_coins_give_pure_routing(self):
        u = build_step_unitary(1, CoinMap(identity_coin()))
        # coin 0 at x=0 moves to (0, -1); coin 1 at x=0 moves to (1, +1)
        col0 = u[:, dense_index(0, 0, 1)]
        assert col0[dense_index(0, -1, 1)] == 1.0
        assert np.sum(np.abs(col0)) == 1.0
        col1 = u[:, dense_index(1, 0, 1)]
        assert col1[dense_index(1, 1, 1)] == 1.0
        assert np.sum(np.abs(col1)) == 1.0

    def test_dimensions(self):
        u = build_step_unitary(2, iqw_coin_map(0.0))
        assert u.shape == (10, 10)

    def test_rejects_too_small_lattice(self):
        with pytest.raises(ValueError):
            build_step_unitary(0, iqw_coin_map(0.0))

    def test_matches_stepper_on_one_step(self):
        s0 = balanced_initial_state(np.pi / 2)
        coins = iqw_coin_map(0.0)
        u = build_step_unitary(2, coins)
        vec = u @ dense_state(s0, 2)
        assert max_amplitude_difference(step(s0, coins), vec, 2) < 1e-15

    def test_interior_block_unitarity(self):
        t_max = 8
        u = build_step_unitary(t_max, iqw_coin_map(np.pi / 4))
        gram = u.conj().T @ u
        npos = 2 * t_max + 1
        interior = [
            dense_index(c, x, t_max)
            for c in (0, 1)
            for x in range(-t_max + 1, t_max)
        ]
        block = gram[np.ix_(interior, interior)]
        assert np.max(np.abs(block - np.eye(2 * (npos - 2)))) < 1e-10


class TestOracleEvolve:
    def test_zero_steps_unchanged(self):
        u = build_step_unitary(3, iqw_coin_map(0.3))
        vec = dense_state(balanced_initial_state(0.1), 3)
        out = oracle_evolve(vec, u, 0)
        assert np.array_equal(out, vec)

    def test_truncation_guard(self):
        u = build_step_unitary(3, iqw_coin_map(0.0))
        vec = dense_state(balanced_initial_state(0.0), 3)
        with pytest.raises(TruncationViolation):
            oracle_evolve(vec, u, 4)

    def test_norm_preserved(self):
        t_max = 10
        u = build_step_unitary(t_max, iqw_coin_map(np.pi / 4))
        vec = dense_state(balanced_initial_state(np.pi / 2), t_max)
        out = oracle_evolve(vec, u, t_max)
        assert abs(np.linalg.norm(out) - 1.0) < 1e-10

    def test_nine_step_entropy_is_maximal(self):
        t_max = 10
        u = build_step_unitary(t_max, iqw_coin_map(np.pi / 4))
        vec = oracle_evolve(
            dense_state(balanced_initial_state(np.pi / 2), t_max), u, 9
        )
        e = von_neumann_entropy(_density_from_dense(vec, t_max))
        assert e == pytest.approx(1.0, abs=1e-9)

    def test_random_map_matches_engine(self):
        rng = np.random.default_rng(11)
        coins = random_coin_map(rng)
        s0 = balanced_initial_state(rng.uniform(0, 2 * np.pi))
        evolved = evolve(s0, coins, 10)
        u = build_step_unitary(10, coins)
        vec = oracle_evolve(dense_state(s0, 10), u, 10)
        assert max_amplitude_difference(evolved, vec, 10) < 1e-12


class TestCrwDistribution:
    def test_t_zero(self):
        assert crw_distribution(0).as_dict() == {0: 1.0}

    def test_t_one(self):
        assert crw_distribution(1).as_dict() == {-1: 0.5, 1: 0.5}

    def test_t_two(self):
        assert crw_distribution(2).as_dict() == {-2: 0.25, 0: 0.5, 2: 0.25}

    def test_variance_eleven(self):
        _, nu = position_mean_variance(crw_distribution(11))
        assert nu == pytest.approx(11.0, abs=1e-10)

    def test_variance_exact_up_to_64(self):
        for t in range(1, 65):
            _, nu = position_mean_variance(crw_distribution(t))
            assert abs(nu - t) < 1e-10

    def test_normalized_at_large_t(self):
        p = crw_distribution(1000)
        assert np.sum(p.probs) == pytest.approx(1.0, abs=1e-10)

    def test_rejects_negative_t(self):
        with pytest.raises(ValueError):
            crw_distribution(-1)


def test_random_unitary_is_unitary():
    rng = np.random.default_rng(3)
    for _ in range(25):
        u = random_unitary(rng)
        assert np.max(np.abs(u.conj().T @ u - np.eye(2))) < 1e-12


@given(theta=angles, coins=coin_maps(), t=st.integers(min_value=1, max_value=12))
@settings(max_examples=30, deadline=None)
def test_cross_engine_equivalence(theta, coins, t):
    s0 = balanced_initial_state(theta)
    evolved = evolve(s0, coins, t)
    u = build_step_unitary(t, coins)
    vec = oracle_evolve(dense_state(s0, t), u, t)
    assert max_amplitude_difference(evolved, vec, t) < 1e-12
