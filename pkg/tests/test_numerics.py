"""Quadrature, Rayleigh quotients, shooting solver, random trial states."""

import math

import numpy as np
import pytest
import sympy

from geoball import (
    ConvergenceError,
    QuadratureSpec,
    RadialFunction,
    ball,
    eigenfunction,
    eigenvalue,
    integrate_weighted,
    momentum_stddev,
    momentum_variance_laplacian,
    random_trial_function,
    rayleigh_quotient,
    solve_eigenvalue_numeric,
    weighted_norm,
)


class TestQuadratureSpec:
    def test_defaults(self):
        spec = QuadratureSpec()
        assert spec.node_count == 64 and spec.panels == 8

    def test_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(node_count=8)
        with pytest.raises(ValueError):
            QuadratureSpec(node_count=20, panels=8)
        with pytest.raises(ValueError):
            QuadratureSpec(panels=0)
        with pytest.raises(ValueError):
            QuadratureSpec(scheme="trapezoid")

    def test_convergence_order(self):
        # fixed 2-node panels: composite order 4, so error drops ~16x per
        # panel doubling on an analytic weight
        b = ball(1.0, 0.9 * math.pi)
        exact = integrate_weighted(lambda r: 1.0, b, QuadratureSpec(512, 8))
        errs = []
        for panels in (8, 16, 32, 64):
            spec = QuadratureSpec(node_count=2 * panels, panels=panels)
            errs.append(abs(integrate_weighted(lambda r: 1.0, b, spec) - exact))
        rates = [math.log2(errs[i] / errs[i + 1]) for i in range(len(errs) - 1)]
        assert all(rate > 3.5 for rate in rates)


class TestIntegrateWeighted:
    def test_flat_unit(self):
        assert integrate_weighted(lambda r: 1.0, ball(0.0, 1.0)) == pytest.approx(1.0 / 3.0, rel=1e-14)

    def test_sphere_nearly_full(self):
        # integral of sin^2 over (0, pi) is pi/2; the last 1e-12 sliver
        # contributes O(1e-36)
        b = ball(1.0, math.pi * (1.0 - 1e-12))
        assert integrate_weighted(lambda r: 1.0, b) == pytest.approx(math.pi / 2.0, rel=1e-13)

    def test_normalized_ground_state(self):
        b = ball(-1.0, 2.0)
        f = eigenfunction(b, 1)
        assert integrate_weighted(lambda r: f(r) ** 2, b) == pytest.approx(1.0, abs=1e-12)

    def test_scalar_callable_fallback(self):
        b = ball(0.0, 1.0)
        got = integrate_weighted(lambda r: math.exp(float(r)), b)
        ref = integrate_weighted(lambda r: np.exp(r), b)
        assert got == pytest.approx(ref, rel=1e-14)

    def test_bad_spec_type(self):
        with pytest.raises(ValueError):
            integrate_weighted(lambda r: 1.0, ball(0.0, 1.0), quad="fine")


class TestRayleighQuotient:
    def test_flat_ground_state_sharp(self):
        b = ball(0.0, 1.0)
        assert rayleigh_quotient(eigenfunction(b, 1), b) == pytest.approx(math.pi**2, rel=1e-10)

    def test_hemisphere_ground_state(self):
        b = ball(1.0, math.pi / 2)
        assert rayleigh_quotient(eigenfunction(b, 1), b) == pytest.approx(3.0, rel=1e-8)

    def test_polynomial_against_symbolic_oracle(self):
        # psi = (1 - r) r on the flat unit ball; exact value from symbolic
        # antiderivatives
        r = sympy.Symbol("r", positive=True)
        psi = (1 - r) * r
        num = sympy.integrate(sympy.diff(psi, r) ** 2 * r**2, (r, 0, 1))
        den = sympy.integrate(psi**2 * r**2, (r, 0, 1))
        exact = float(num / den)
        assert exact == 14.0

        b = ball(0.0, 1.0)
        trial = RadialFunction(
            ball=b,
            func=lambda x: (1.0 - np.asarray(x, float)) * np.asarray(x, float),
            deriv=lambda x: 1.0 - 2.0 * np.asarray(x, float),
        )
        got = rayleigh_quotient(trial, b)
        assert got == pytest.approx(exact, rel=1e-12)
        assert got >= math.pi**2

    def test_zero_norm_rejected(self):
        b = ball(0.0, 1.0)
        zero = RadialFunction(ball=b, func=lambda r: 0.0 * np.asarray(r, float))
        with pytest.raises(ValueError):
            rayleigh_quotient(zero, b)

    def test_finite_difference_path_matches_analytic(self):
        b = ball(-1.0, 2.0)
        f = eigenfunction(b, 1)
        grid = np.linspace(0.0, b.radius, 4097)
        sampled = RadialFunction.from_samples(b, grid, f(grid))
        assert rayleigh_quotient(sampled, b) == pytest.approx(rayleigh_quotient(f, b), rel=1e-7)

    def test_from_samples_validation(self):
        b = ball(0.0, 1.0)
        with pytest.raises(ValueError):
            RadialFunction.from_samples(b, np.array([0.0, 0.3, 1.0]), np.zeros(3))
        with pytest.raises(ValueError):  # non-uniform
            RadialFunction.from_samples(b, np.array([0.0, 0.1, 0.3, 0.6, 1.0]), np.zeros(5))


class TestTwoFormConsistency:
    @pytest.mark.parametrize("K,r0", [(-4.0, 1.0), (-1.0, 2.0), (0.0, 1.0), (1.0, math.pi / 2)])
    def test_gradient_vs_laplacian_form(self, K, r0):
        b = ball(K, r0)
        for seed in (3, 17):
            trial = random_trial_function(b, seed, 4)
            grad_form = rayleigh_quotient(trial, b)
            lap_form = momentum_variance_laplacian(trial, b)
            assert lap_form == pytest.approx(grad_form, rel=1e-5)


class TestShooting:
    def test_flat_base_case(self):
        res = solve_eigenvalue_numeric(ball(0.0, 1.0), 1, tol=1e-10)
        assert res.lambda_hat == pytest.approx(math.pi**2, rel=1e-8)
        assert res.interior_zeros == 0
        assert res.boundary_residual < 1e-6

    def test_hemisphere(self):
        res = solve_eigenvalue_numeric(ball(1.0, math.pi / 2), 1)
        assert res.lambda_hat == pytest.approx(3.0, rel=1e-8)

    def test_hyperbolic(self):
        res = solve_eigenvalue_numeric(ball(-1.0, math.pi), 1)
        assert res.lambda_hat == pytest.approx(2.0, rel=1e-8)

    def test_node_counts(self):
        b = ball(-1.0, 2.0)
        for n in (1, 2, 3, 4):
            res = solve_eigenvalue_numeric(b, n)
            assert res.interior_zeros == n - 1

    def test_deterministic(self):
        b = ball(4.0, 1.2)
        r1 = solve_eigenvalue_numeric(b, 2)
        r2 = solve_eigenvalue_numeric(b, 2)
        assert r1.lambda_hat == r2.lambda_hat
        assert r1.iterations == r2.iterations

    def test_hinted_matches_blind(self):
        b = ball(-4.0, 1.5)
        blind = solve_eigenvalue_numeric(b, 3)
        hinted = solve_eigenvalue_numeric(b, 3, hinted=True)
        assert hinted.lambda_hat == pytest.approx(blind.lambda_hat, rel=1e-9)
        assert hinted.iterations < blind.iterations
        assert hinted.interior_zeros == 2

    def test_bracket_not_found(self):
        with pytest.raises(ConvergenceError):
            solve_eigenvalue_numeric(ball(0.0, 1.0), 3, max_scan_steps=4)

    def test_bad_arguments(self):
        b = ball(0.0, 1.0)
        with pytest.raises(ValueError):
            solve_eigenvalue_numeric(b, 0)
        with pytest.raises(ValueError):
            solve_eigenvalue_numeric(b, 1, tol=-1e-8)


class TestRandomTrials:
    def test_deterministic_from_seed(self):
        b = ball(-1.0, 2.0)
        t1 = random_trial_function(b, 9, 6)
        t2 = random_trial_function(b, 9, 6)
        assert t1.coefficients == t2.coefficients

    def test_boundary_zero_and_norm(self):
        b = ball(1.0, 2.0)
        t = random_trial_function(b, 5, 4)
        assert t(b.radius) == 0.0
        assert weighted_norm(t, b) >= 1e-6

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            random_trial_function(ball(0.0, 1.0), 1, 0)

    def test_variational_sweep(self):
        b = ball(-1.0, 2.0)
        lam1 = eigenvalue(b, 1)
        for seed in range(100):
            trial = random_trial_function(b, seed, 6)
            assert rayleigh_quotient(trial, b) >= lam1 * (1.0 - 1e-9)

    def test_derivative_consistency(self):
        b = ball(0.0, 1.5)
        t = random_trial_function(b, 11, 5)
        for r in (0.2, 0.8, 1.2):
            h = 1e-6
            fd = (t(r + h) - t(r - h)) / (2 * h)
            assert t.deriv(r) == pytest.approx(fd, rel=1e-7)


class TestMomentumStddev:
    def test_flat_ground_state(self):
        b = ball(0.0, 1.0)
        assert momentum_stddev(eigenfunction(b, 1), b) == pytest.approx(math.pi, rel=1e-10)

    def test_second_mode(self):
        b = ball(0.0, 1.0)
        assert momentum_stddev(eigenfunction(b, 2), b) == pytest.approx(2 * math.pi, rel=1e-10)

    def test_large_hyperbolic_ball(self):
        b = ball(-1.0, 50.0)
        expected = math.sqrt((math.pi / 50.0) ** 2 + 1.0)
        got = momentum_stddev(eigenfunction(b, 1), b)
        assert got == pytest.approx(expected, rel=1e-8)
        assert got == pytest.approx(1.0020, abs=1e-4)

    def test_hbar_scaling(self):
        b = ball(0.0, 1.0)
        f = eigenfunction(b, 1)
        assert momentum_stddev(f, b, hbar=2.0) == pytest.approx(2 * math.pi, rel=1e-10)
        with pytest.raises(ValueError):
            momentum_stddev(f, b, hbar=0.0)
