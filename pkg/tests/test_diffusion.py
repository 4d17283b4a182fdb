import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metro_graph import (
    DimensionMismatchError,
    FlowSignal,
    SolverDivergenceError,
    estimate_population,
    forward_flux,
    round_trip_residual,
)
from oracles import (
    dense_population_oracle,
    make_net,
    path_net,
    random_connected_net,
    random_net,
    star_net,
)


class TestForwardFlux:
    def test_two_station_link(self):
        # The populous end loses passengers to the sparse end.
        sig = forward_flux(path_net(2), [1.0, 0.0])
        assert list(sig.q) == [-1.0, 1.0]

    def test_three_station_ramp(self):
        sig = forward_flux(path_net(3), [2.0, 1.0, 0.0])
        assert list(sig.q) == [-1.0, 0.0, 1.0]

    def test_scales_linearly_with_diffusivity(self):
        phi = np.array([3.0, 0.0, 1.0, 5.0])
        net = make_net(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        base = forward_flux(net, phi, k=1.0).q
        assert np.allclose(forward_flux(net, phi, k=2.5).q, 2.5 * base)

    def test_constant_population_moves_nothing(self):
        sig = forward_flux(star_net(4), np.full(5, 7.3))
        assert np.all(sig.q == 0.0)

    def test_component_sums_reported(self):
        net = make_net(4, [(0, 1), (2, 3)])
        sig = forward_flux(net, [5.0, 1.0, 2.0, 2.0])
        assert sig.component_sums.shape == (2,)
        assert np.allclose(sig.component_sums, 0.0, atol=1e-12)

    def test_period_carried_through(self):
        sig = forward_flux(path_net(2), [1.0, 0.0], period="AM peak")
        assert sig.period == "AM peak"

    def test_conservation_over_random_graphs(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            net = random_net(rng, 1, 20)
            phi = rng.normal(0.0, 100.0, net.n)
            sig = forward_flux(net, phi, k=float(rng.uniform(0.5, 2.0)))
            bound = 1e-12 * max(1.0, float(np.linalg.norm(phi)))
            assert np.abs(sig.component_sums).max() <= bound

    def test_rejects_wrong_length(self):
        with pytest.raises(DimensionMismatchError):
            forward_flux(path_net(3), [1.0, 2.0])

    def test_rejects_nonpositive_diffusivity(self):
        with pytest.raises(ValueError):
            forward_flux(path_net(2), [1.0, 0.0], k=0.0)

    def test_rejects_nan_signal(self):
        with pytest.raises(ValueError):
            forward_flux(path_net(2), [np.nan, 0.0])


class TestEstimatePopulation:
    def test_three_station_ramp_recovered(self):
        est = estimate_population(path_net(3), [1.0, 0.0, -1.0])
        assert np.allclose(est.phi, [0.0, 1.0, 2.0], atol=1e-10)

    def test_raw_is_zero_mean_per_component(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            net = random_net(rng, 1, 15)
            q = rng.normal(0.0, 10.0, net.n)
            est = estimate_population(net, q)
            labels = net.component_labels
            for c in range(net.n_components):
                assert abs(est.raw_phi[labels == c].mean()) < 1e-9

    def test_phi_minimum_zero_per_component(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            net = random_net(rng, 1, 15)
            q = rng.normal(0.0, 10.0, net.n)
            est = estimate_population(net, q)
            labels = net.component_labels
            for c in range(net.n_components):
                sub = est.phi[labels == c]
                assert np.all(sub >= -1e-12)
                assert abs(sub.min()) < 1e-9

    def test_halving_diffusivity_doubles_population(self):
        rng = np.random.default_rng(10)
        net = random_connected_net(rng, 10, 10)
        q = rng.normal(0.0, 5.0, net.n)
        q -= q.mean()
        full = estimate_population(net, q, k=1.0)
        half = estimate_population(net, q, k=0.5)
        assert np.allclose(half.phi, 2.0 * full.phi, atol=1e-8)

    def test_linear_in_flow(self):
        rng = np.random.default_rng(11)
        net = random_connected_net(rng, 12, 12)
        q = rng.normal(0.0, 5.0, net.n)
        q -= q.mean()
        one = estimate_population(net, q)
        three = estimate_population(net, 3.0 * q)
        assert np.allclose(three.raw_phi, 3.0 * one.raw_phi, atol=1e-8)

    def test_accepts_flow_signal_object(self):
        net = path_net(3)
        phi = np.array([0.0, 1.0, 2.0])
        sig = forward_flux(net, phi)
        est = estimate_population(net, sig)
        assert np.allclose(est.phi, phi, atol=1e-10)

    def test_unexplained_mean_is_projected_and_reported(self):
        net = path_net(3)
        q = np.array([1.0, 0.0, -1.0]) + 4.0  # constant offset on top
        est = estimate_population(net, q)
        assert np.allclose(est.projected_out, [4.0])
        assert np.allclose(est.phi, [0.0, 1.0, 2.0], atol=1e-10)

    def test_components_solved_independently(self):
        # Two disjoint 2-chains; a singleton absorbs its own flow entirely.
        net = make_net(5, [(0, 1), (2, 3)])
        q = np.array([2.0, -2.0, 6.0, -6.0, 5.0])
        est = estimate_population(net, q)
        assert np.allclose(est.phi, [0.0, 2.0, 0.0, 6.0, 0.0], atol=1e-10)
        assert np.allclose(est.projected_out, [0.0, 0.0, 5.0])

    def test_round_trip_recovers_flow(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            net = random_connected_net(rng, 2, 40)
            phi = rng.normal(0.0, 50.0, net.n)
            k = float(rng.uniform(0.5, 2.0))
            q = forward_flux(net, phi, k=k).q
            est = estimate_population(net, q, k=k)
            back = forward_flux(net, est.phi, k=k).q
            denom = max(1.0, float(np.linalg.norm(q)))
            assert np.linalg.norm(back - q) / denom < 1e-8

    def test_matches_dense_pseudo_inverse(self):
        rng = np.random.default_rng(13)
        for _ in range(25):
            net = random_net(rng, 1, 30)
            q = rng.normal(0.0, 20.0, net.n)
            est = estimate_population(net, q)
            phi_ref, raw_ref = dense_population_oracle(net, q)
            scale = max(1.0, float(np.abs(phi_ref).max()))
            assert np.abs(est.phi - phi_ref).max() / scale < 1e-8
            assert np.abs(est.raw_phi - raw_ref).max() / scale < 1e-8

    def test_residual_reported_small(self):
        net = path_net(20)
        q = forward_flux(net, np.arange(20.0)).q
        est = estimate_population(net, q)
        assert est.residual < 1e-10
        assert round_trip_residual(net, q, est) < 1e-10

    def test_iteration_cap_raises(self):
        net = path_net(40)
        q = forward_flux(net, np.arange(40.0) ** 2).q
        with pytest.raises(SolverDivergenceError):
            estimate_population(net, q, maxiter=2)

    def test_zero_flow_gives_zero_population(self):
        net = path_net(5)
        est = estimate_population(net, np.zeros(5))
        assert np.all(est.phi == 0.0)
        assert est.residual == 0.0

    def test_rejects_wrong_length(self):
        with pytest.raises(DimensionMismatchError):
            estimate_population(path_net(3), [1.0, -1.0])

    def test_rejects_bad_diffusivity(self):
        with pytest.raises(ValueError):
            estimate_population(path_net(2), [1.0, -1.0], k=-3.0)


class TestRoundTripResidual:
    def test_consistent_flow_residual_tiny(self):
        rng = np.random.default_rng(14)
        net = random_connected_net(rng, 15, 15)
        q = forward_flux(net, rng.normal(0.0, 10.0, net.n)).q
        est = estimate_population(net, q)
        assert round_trip_residual(net, q, est) < 1e-9

    def test_offset_flow_ignores_unexplained_mean(self):
        net = path_net(4)
        q = forward_flux(net, np.array([3.0, 1.0, 0.0, 2.0])).q
        est = estimate_population(net, q + 10.0)
        assert round_trip_residual(net, q + 10.0, est) < 1e-9


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_forward_then_inverse_is_identity_up_to_anchor(data):
    n = data.draw(st.integers(min_value=2, max_value=25))
    seed = data.draw(st.integers(min_value=0, max_value=2**31))
    rng = np.random.default_rng(seed)
    net = random_connected_net(rng, n, n)
    phi = rng.normal(0.0, 10.0, net.n)
    phi -= phi.min()  # same anchoring convention as the estimate
    q = forward_flux(net, phi).q
    est = estimate_population(net, q)
    scale = max(1.0, float(np.abs(phi).max()))
    assert np.abs(est.phi - phi).max() / scale < 1e-7


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_estimate_insensitive_to_constant_flow_offset(data):
    n = data.draw(st.integers(min_value=2, max_value=20))
    seed = data.draw(st.integers(min_value=0, max_value=2**31))
    offset = data.draw(st.floats(min_value=-1e3, max_value=1e3))
    rng = np.random.default_rng(seed)
    net = random_connected_net(rng, n, n)
    q = rng.normal(0.0, 10.0, net.n)
    base = estimate_population(net, q)
    shifted = estimate_population(net, q + offset)
    assert np.allclose(base.phi, shifted.phi, atol=1e-6)
