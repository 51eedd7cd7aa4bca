import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqwalk.core import (
    CoinMap,
    balanced_initial_state,
    evolve,
    general_initial_state,
    identity_coin,
    iqw_coin_map,
    step,
)
from iqwalk.observables import (
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
from strategies import angles, bloch_densities, walk_states

PURE_UP = CoinDensity(1.0, 0.0, 0.0)
PURE_DOWN = CoinDensity(0.0, 1.0, 0.0)
MIXED = CoinDensity(0.5, 0.5, 0.0)


class TestReducedCoinDensity:
    def test_initial_balanced_state(self):
        rho = reduced_coin_density(balanced_initial_state(np.pi / 2))
        assert rho.pop0 == pytest.approx(0.5, abs=1e-12)
        assert rho.pop1 == pytest.approx(0.5, abs=1e-12)
        assert rho.coherence == pytest.approx(-0.5j, abs=1e-12)

    def test_one_step_coherence_vanishes(self):
        # |0> and |1> weight end up on disjoint positions after one step
        s = step(balanced_initial_state(np.pi / 2), iqw_coin_map(np.pi / 4))
        rho = reduced_coin_density(s)
        assert rho.pop0 == pytest.approx(0.5, abs=1e-12)
        assert rho.pop1 == pytest.approx(0.5, abs=1e-12)
        assert abs(rho.coherence) < 1e-12

    def test_product_state_stays_separable(self):
        s = evolve(general_initial_state(1.0, 0.0), CoinMap(identity_coin()), 5)
        rho = reduced_coin_density(s)
        assert rho.pop0 == 1.0
        assert rho.pop1 == 0.0
        assert rho.coherence == 0.0

    def test_two_step_coherence_hand_value(self):
        s = evolve(balanced_initial_state(np.pi / 2), iqw_coin_map(np.pi / 4), 2)
        assert reduced_coin_density(s).coherence == pytest.approx(-0.25j, abs=1e-12)


class TestEntropy:
    def test_pure_state_zero(self):
        assert von_neumann_entropy(PURE_UP) == 0.0

    def test_maximally_mixed_one(self):
        assert von_neumann_entropy(MIXED) == pytest.approx(1.0, abs=1e-15)

    def test_step_two_table_value(self):
        assert entropy_of_walk(np.pi / 2, np.pi / 4, 2) == pytest.approx(0.81128, abs=1e-5)

    def test_step_nine_maximal(self):
        assert entropy_of_walk(np.pi / 2, np.pi / 4, 9) == pytest.approx(1.0, abs=1e-6)

    def test_step_four_table_value(self):
        assert entropy_of_walk(np.pi / 2, np.pi / 4, 4) == pytest.approx(0.99967, abs=1e-5)

    def test_homogeneous_step_four(self):
        assert entropy_of_walk(np.pi / 2, 0.0, 4) == pytest.approx(0.896, abs=1e-3)

    def test_even_steps_stay_nearly_maximal(self):
        state = balanced_initial_state(np.pi / 2)
        coins = iqw_coin_map(np.pi / 4)
        for t in range(1, 201):
            state = step(state, coins)
            if t >= 4 and t % 2 == 0:
                assert von_neumann_entropy(reduced_coin_density(state)) >= 0.999

    @pytest.mark.parametrize("phi", [0.0, np.pi / 4])
    def test_balanced_populations_at_operating_points(self, phi):
        state = balanced_initial_state(np.pi / 2)
        coins = iqw_coin_map(phi)
        for _ in range(200):
            state = step(state, coins)
            rho = reduced_coin_density(state)
            assert abs(rho.pop0 - 0.5) <= 1e-9


class TestTraceDistance:
    def test_identical_states(self):
        rho = CoinDensity(0.7, 0.3, 0.1 + 0.2j)
        assert trace_distance(rho, rho) == 0.0

    def test_orthogonal_pure_states(self):
        assert trace_distance(PURE_UP, PURE_DOWN) == pytest.approx(1.0, abs=1e-15)

    def test_hand_value_after_two_steps(self):
        s1 = step(balanced_initial_state(np.pi / 2), iqw_coin_map(np.pi / 4))
        s2 = step(s1, iqw_coin_map(np.pi / 4))
        d = trace_distance(reduced_coin_density(s2), reduced_coin_density(s1))
        assert d == pytest.approx(0.25, abs=1e-12)


class TestFidelity:
    def test_identical(self):
        rho = CoinDensity(0.6, 0.4, 0.2 - 0.1j)
        assert fidelity(rho, rho) == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal(self):
        assert fidelity(PURE_UP, PURE_DOWN) == 0.0

    def test_pure_versus_mixed(self):
        assert fidelity(PURE_UP, MIXED) == pytest.approx(0.5, abs=1e-15)


class TestPositionDistribution:
    def test_initial_state(self):
        dist = position_distribution(balanced_initial_state(0.0))
        assert dist.as_dict() == {0: pytest.approx(1.0, abs=1e-15)}

    def test_one_step_hadamard(self):
        s = step(balanced_initial_state(np.pi / 2), iqw_coin_map(0.0))
        d = position_distribution(s).as_dict()
        assert d[-1] == pytest.approx(0.5, abs=1e-12)
        assert d[1] == pytest.approx(0.5, abs=1e-12)
        assert set(d) == {-1, 1}

    def test_eleven_steps_normalized_on_valid_parity(self):
        s = evolve(balanced_initial_state(np.pi / 2), iqw_coin_map(np.pi / 4), 11)
        dist = position_distribution(s)
        assert np.sum(dist.probs) == pytest.approx(1.0, abs=1e-10)
        assert np.all((dist.positions + 11) % 2 == 0)
        assert dist.positions.shape[0] == 12

    def test_mean_variance_point_mass(self):
        mu, nu = position_mean_variance(ProbVector(np.array([0]), np.array([1.0])))
        assert (mu, nu) == (0.0, 0.0)

    def test_mean_variance_symmetric_pair(self):
        p = ProbVector(np.array([-1, 1]), np.array([0.5, 0.5]))
        mu, nu = position_mean_variance(p)
        assert mu == 0.0
        assert nu == pytest.approx(1.0, abs=1e-15)


class TestSimilarity:
    def test_identical_distributions(self):
        p = ProbVector(np.array([-1, 1]), np.array([0.5, 0.5]))
        assert similarity(p, p) == pytest.approx(1.0, abs=1e-12)

    def test_disjoint_supports(self):
        p = ProbVector(np.array([0]), np.array([1.0]))
        q = ProbVector(np.array([2]), np.array([1.0]))
        assert similarity(p, q) == 0.0

    def test_partial_overlap(self):
        p = ProbVector(np.array([-1, 1]), np.array([0.5, 0.5]))
        q = ProbVector(np.array([-1]), np.array([1.0]))
        assert similarity(p, q) == pytest.approx(np.sqrt(0.5), abs=1e-12)

    def test_walk_distributions_close_to_one(self):
        s = evolve(balanced_initial_state(np.pi / 2), iqw_coin_map(np.pi / 4), 11)
        d = position_distribution(s)
        assert similarity(d, d) == pytest.approx(1.0, abs=1e-12)


# --- property tests ---------------------------------------------------------


@given(state=walk_states())
@settings(max_examples=40, deadline=None)
def test_entropy_bounds_and_eigenvalue_identities(state):
    rho = reduced_coin_density(state)
    e = von_neumann_entropy(rho)
    assert 0.0 <= e <= 1.0
    lam1, lam2 = rho.eigenvalues()
    assert abs(lam1 + lam2 - 1.0) < 1e-10
    det = rho.pop0 * rho.pop1 - abs(rho.coherence) ** 2
    assert abs(lam1 * lam2 - det) < 1e-10


@given(r1=bloch_densities(), r2=bloch_densities(), r3=bloch_densities())
@settings(max_examples=60, deadline=None)
def test_trace_distance_metric_axioms(r1, r2, r3):
    assert trace_distance(r1, r1) < 1e-12
    assert abs(trace_distance(r1, r2) - trace_distance(r2, r1)) < 1e-12
    assert trace_distance(r1, r3) <= trace_distance(r1, r2) + trace_distance(r2, r3) + 1e-10
    assert 0.0 <= trace_distance(r1, r2) <= 1.0 + 1e-12


@given(r1=bloch_densities(), r2=bloch_densities())
@settings(max_examples=40, deadline=None)
def test_fidelity_symmetric_and_bounded(r1, r2):
    f12 = fidelity(r1, r2)
    assert 0.0 <= f12 <= 1.0
    assert f12 == pytest.approx(fidelity(r2, r1), abs=1e-10)


@given(theta=angles, phi=angles, t=st.integers(min_value=1, max_value=10))
@settings(max_examples=25, deadline=None)
def test_similarity_symmetric_and_maximal_only_on_equal(theta, phi, t):
    s = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t)
    p = position_distribution(s)
    q = ProbVector(p.positions[:-1], p.probs[:-1])  # drop one site: not equal
    assert similarity(p, q) == pytest.approx(similarity(q, p), abs=1e-12)
    assert similarity(p, p) == pytest.approx(1.0, abs=1e-12)
    if np.sum(q.probs) < 1.0 - 1e-9:
        assert similarity(p, q) < 1.0 - 1e-12


@given(theta=angles, alpha=angles, phi=angles, t=st.integers(min_value=0, max_value=10))
@settings(max_examples=25, deadline=None)
def test_observables_ignore_global_phase(theta, alpha, phi, t):
    coins = iqw_coin_map(phi)
    base = balanced_initial_state(theta)
    phase = np.exp(1j * alpha)
    shifted = general_initial_state(phase * base.amp0[0], phase * base.amp1[0])
    s1 = evolve(base, coins, t)
    s2 = evolve(shifted, coins, t)
    e1 = von_neumann_entropy(reduced_coin_density(s1))
    e2 = von_neumann_entropy(reduced_coin_density(s2))
    assert abs(e1 - e2) < 1e-12
    d1 = position_distribution(s1)
    d2 = position_distribution(s2)
    assert np.max(np.abs(d1.probs - d2.probs)) < 1e-12
