import math

import numpy as np
import pytest

import cvteleport as cv


def optimal_spec(N, n1, n2, rbar):
    return cv.ResourceSpec(N, n1, n2, rbar, cv.d_N_opt(N, n1, n2, rbar),
                           constrain_bias=False)


class TestSimulate:
    def test_two_mode_agreement(self):
        spec = optimal_spec(2, 1, 1, 0.5)
        est = cv.simulate(cv.McConfig(samples=400_000, seed=1, spec=spec))
        analytic = 1 / (1 + math.exp(-1))
        assert abs(est.fidelity_mean - analytic) < 3 * est.std_error

    def test_three_mode_agreement(self):
        spec = optimal_spec(3, 1, 1, 0.5)
        est = cv.simulate(cv.McConfig(samples=400_000, seed=2, spec=spec))
        analytic = cv.optimal_fidelity(3, 1, 1, 0.5).fidelity_opt
        assert abs(est.fidelity_mean - analytic) < 3 * est.std_error

    def test_deterministic(self):
        spec = optimal_spec(3, 1.2, 1.0, 0.4)
        cfg = cv.McConfig(samples=50_000, seed=777, spec=spec)
        a, b = cv.simulate(cfg), cv.simulate(cfg)
        assert a == b  # bit-identical, all fields

    def test_seed_changes_estimate(self):
        spec = optimal_spec(2, 1, 1, 0.3)
        a = cv.simulate(cv.McConfig(samples=50_000, seed=1, spec=spec))
        b = cv.simulate(cv.McConfig(samples=50_000, seed=2, spec=spec))
        assert a.fidelity_mean != b.fidelity_mean

    def test_error_shrinks_with_samples(self):
        # doubling samples shrinks the standard error by sqrt(2) +- 15 %
        spec = optimal_spec(2, 1, 1, 0.5)
        ratios = []
        for seed in range(10):
            small = cv.simulate(cv.McConfig(samples=40_000, seed=seed, spec=spec))
            big = cv.simulate(cv.McConfig(samples=80_000, seed=seed + 100, spec=spec))
            ratios.append(small.std_error / big.std_error)
        assert np.mean(ratios) == pytest.approx(math.sqrt(2), rel=0.15)

    def test_guards(self):
        spec = optimal_spec(2, 1, 1, 0.5)
        with pytest.raises(ValueError):
            cv.McConfig(samples=1, seed=0, spec=spec)


class TestVarianceOfForm:
    def test_zero_coefficients(self):
        spec = cv.ResourceSpec(2, 1, 1, 0.5, 0.0)
        est = cv.variance_of_form(np.zeros(4), spec, samples=10_000, seed=3)
        assert est.var_x_rel_hat == 0.0

    def test_single_mode_vacuum_x(self):
        spec = cv.ResourceSpec(2, 1, 1, 0.0, 0.0)
        c = np.array([1.0, 0.0, 0.0, 0.0])
        est = cv.variance_of_form(c, spec, samples=200_000, seed=4)
        assert abs(est.var_x_rel_hat - 1.0) < 3 * est.std_error

    def test_x_rel_two_mode(self):
        spec = cv.ResourceSpec(2, 1, 1, 0.5, 0.0)
        c = np.array([1.0, 0.0, -1.0, 0.0])
        est = cv.variance_of_form(c, spec, samples=400_000, seed=5)
        assert abs(est.var_x_rel_hat - 2 * math.exp(-1)) < 3 * est.std_error

    def test_matches_quadratic_form(self):
        rng = np.random.default_rng(29)
        spec = cv.ResourceSpec(3, 1.3, 1.1, 0.6, 0.1)
        sigma = cv.build_resource(spec).entries
        for seed in range(3):
            c = rng.uniform(-1, 1, size=6)
            exact = float(c @ sigma @ c)
            est = cv.variance_of_form(c, spec, samples=400_000, seed=seed)
            assert abs(est.var_x_rel_hat - exact) < 4 * est.std_error

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            cv.variance_of_form(np.zeros(3), cv.ResourceSpec(2, 1, 1, 0.1), 100, 0)
