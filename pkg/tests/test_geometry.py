"""Geometry primitives: metric factor, volume weight, ball volumes, domains."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from geoball import (
    CurvatureSpace,
    GeodesicBall,
    ball,
    ball_volume,
    max_radius,
    metric_factor,
    metric_factor_derivative,
    validate_ball,
    volume_weight,
)

CURVATURES = (-4.0, -1.0, 0.0, 1.0, 4.0)


def radii_for(K):
    if K > 0.0:
        cap = math.pi / math.sqrt(K)
        return [f * cap for f in (0.1, 0.3, 0.5, 0.7, 0.9)]
    return [0.3, 0.8, 1.5, 2.2, 3.0]


def sinh_series(r, absK, terms=30):
    """Independent oracle: sum r^(2k+1) |K|^k / (2k+1)!."""
    total = 0.0
    for k in range(terms):
        total += r ** (2 * k + 1) * absK**k / math.factorial(2 * k + 1)
    return total


class TestMetricFactor:
    def test_flat(self):
        assert metric_factor(CurvatureSpace(0.0), 2.0) == 2.0

    def test_sphere_equator(self):
        assert metric_factor(CurvatureSpace(1.0), math.pi / 2) == pytest.approx(1.0, rel=1e-15)

    def test_hyperbolic_vs_series_oracle(self):
        got = metric_factor(CurvatureSpace(-1.0), 1.0)
        assert got == pytest.approx(sinh_series(1.0, 1.0), rel=1e-14)
        assert got == pytest.approx(1.1752012, rel=1e-7)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            metric_factor(CurvatureSpace(1.0), -0.1)
        with pytest.raises(ValueError):
            metric_factor(CurvatureSpace(4.0), math.pi / 2 + 1e-9)

    def test_array_input(self):
        r = np.array([0.0, 0.5, 1.0])
        out = metric_factor(CurvatureSpace(-1.0), r)
        assert out.shape == r.shape
        assert out[0] == 0.0

    def test_curvature_must_be_finite(self):
        with pytest.raises(ValueError):
            CurvatureSpace(math.inf)

    def test_derivative_matches_finite_difference(self):
        for K in CURVATURES:
            space = CurvatureSpace(K)
            for r in (0.3, 0.9):
                h = 1e-6
                fd = (metric_factor(space, r + h) - metric_factor(space, r - h)) / (2 * h)
                assert metric_factor_derivative(space, r) == pytest.approx(fd, rel=1e-8)


class TestContinuityInK:
    @pytest.mark.parametrize("absK", [1e-6, 1e-8, 1e-10, 1e-12])
    @pytest.mark.parametrize("sign", [1.0, -1.0])
    def test_metric_factor_approaches_flat(self, absK, sign):
        K = sign * absK
        for r in (0.1, 0.5, 2.0):
            s = metric_factor(CurvatureSpace(K), r)
            rel = abs(s - r) / r
            # |s/r - 1| = |K| r^2 / 6 + O(K^2 r^4); allow ulp headroom
            assert rel <= absK * r * r / 6.0 * 1.05 + 1e-15
            if absK <= 1e-8:
                assert rel < 1e-8

    def test_series_branch_seam(self):
        # values agree across the |K| r^2 = 1e-8 branch switch
        for K in (1.0, -1.0):
            space = CurvatureSpace(K)
            below = metric_factor(space, 0.99e-4)
            above = metric_factor(space, 1.01e-4)
            mid = 0.5 * (below + above)
            assert metric_factor(space, 1.0e-4) == pytest.approx(mid, rel=1e-10)


class TestVolumeWeight:
    def test_examples(self):
        assert volume_weight(CurvatureSpace(0.0), 3.0) == 9.0
        assert volume_weight(CurvatureSpace(1.0), math.pi / 2) == pytest.approx(1.0, rel=1e-15)
        expected = sinh_series(1.0, 1.0) ** 2
        assert volume_weight(CurvatureSpace(-1.0), 1.0) == pytest.approx(expected, rel=1e-14)
        assert volume_weight(CurvatureSpace(-1.0), 1.0) == pytest.approx(1.3810978, rel=1e-7)

    def test_zero_at_center_positive_inside(self):
        for K in CURVATURES:
            space = CurvatureSpace(K)
            assert volume_weight(space, 0.0) == 0.0
            for r in radii_for(K):
                assert volume_weight(space, r) > 0.0

    def test_spherical_symmetry_about_equator(self):
        K = 2.3
        space = CurvatureSpace(K)
        cap = math.pi / math.sqrt(K)
        for r in (0.1 * cap, 0.25 * cap, 0.4 * cap):
            assert volume_weight(space, r) == pytest.approx(volume_weight(space, cap - r), rel=1e-12)


class TestBallVolume:
    def test_full_sphere(self):
        assert ball_volume(CurvatureSpace(1.0), math.pi) == pytest.approx(2 * math.pi**2, rel=1e-13)

    def test_euclidean(self):
        assert ball_volume(CurvatureSpace(0.0), 1.0) == pytest.approx(4 * math.pi / 3, rel=1e-15)

    def test_hyperbolic_closed_form(self):
        expected = 2 * math.pi * (math.sinh(2.0) / 2.0 - 1.0)
        got = ball_volume(CurvatureSpace(-1.0), 1.0)
        assert got == pytest.approx(expected, rel=1e-14)
        assert got == pytest.approx(5.1109, rel=1e-4)

    @pytest.mark.parametrize("K", CURVATURES)
    def test_against_quadrature_oracle(self, K):
        space = CurvatureSpace(K)
        for r in radii_for(K):
            oracle, err = quad(lambda t: 4 * math.pi * volume_weight(space, t), 0.0, r,
                               epsabs=1e-13, epsrel=1e-13)
            assert ball_volume(space, r) == pytest.approx(oracle, rel=1e-10)

    @pytest.mark.parametrize("K", CURVATURES)
    def test_derivative_is_weight(self, K):
        space = CurvatureSpace(K)
        for r in radii_for(K):
            h = 1e-5 * r
            fd = (ball_volume(space, r + h) - ball_volume(space, r - h)) / (2 * h)
            assert fd == pytest.approx(4 * math.pi * volume_weight(space, r), rel=1e-6)

    @pytest.mark.parametrize("K", [-4.0, -1.0, 1.0, 4.0])
    def test_small_radius_euclidean_limit(self, K):
        r = 1e-3 / math.sqrt(abs(K))
        ratio = ball_volume(CurvatureSpace(K), r) / (4 * math.pi * r**3 / 3)
        assert ratio == pytest.approx(1.0, abs=1e-6)

    def test_domain(self):
        with pytest.raises(ValueError):
            ball_volume(CurvatureSpace(1.0), math.pi + 1e-9)
        assert ball_volume(CurvatureSpace(1.0), 0.0) == 0.0


class TestMaxRadiusAndValidation:
    def test_max_radius(self):
        assert max_radius(CurvatureSpace(4.0)) == pytest.approx(math.pi / 2, rel=1e-15)
        assert math.isinf(max_radius(CurvatureSpace(0.0)))
        assert math.isinf(max_radius(CurvatureSpace(-1.0)))

    def test_validate_ball(self):
        good = validate_ball(CurvatureSpace(1.0), math.pi / 2)
        assert isinstance(good, GeodesicBall)
        assert good.curvature == 1.0
        with pytest.raises(ValueError):
            validate_ball(CurvatureSpace(1.0), math.pi)  # strict upper bound
        assert validate_ball(CurvatureSpace(-1.0), 100.0).radius == 100.0

    def test_rejects_bad_radii(self):
        for bad in (0.0, -1.0, math.inf, math.nan):
            with pytest.raises(ValueError):
                ball(0.0, bad)

    def test_ball_shorthand(self):
        b = ball(-2.0, 1.5)
        assert b.space.curvature == -2.0 and b.radius == 1.5
