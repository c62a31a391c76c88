"""Constant-curvature model spaces and geodesic balls.

The three simply connected 3-spaces of constant sectional curvature K share a
single radial description: a metric factor s(r) multiplying the round metric
of the unit 2-sphere, with

    s(r) = sin(sqrt(K) r)/sqrt(K)        for K > 0,
    s(r) = r                             for K = 0,
    s(r) = sinh(sqrt(|K|) r)/sqrt(|K|)   for K < 0.

Everything downstream (volume measure, Dirichlet spectra, uncertainty bounds)
is built on this factor and the radial volume weight w(r) = s(r)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SMALL_CURVATURE",
    "CurvatureSpace",
    "GeodesicBall",
    "ball",
    "validate_ball",
    "max_radius",
    "metric_factor",
    "metric_factor_derivative",
    "volume_weight",
    "ball_volume",
]

# Below this value of |K| r^2 the sin/sinh quotients are replaced by their
# truncated series in K (second order), which is exact to machine precision
# there and immune to the 0/0 cancellation at K -> 0.
SMALL_CURVATURE = 1.0e-8


@dataclass(frozen=True)
class CurvatureSpace:
    """A simply connected 3-space of constant sectional curvature."""

    curvature: float

    def __post_init__(self):
        if not math.isfinite(self.curvature):
            raise ValueError(f"curvature must be finite, got {self.curvature}")


def max_radius(space: CurvatureSpace) -> float:
    """Largest admissible geodesic radius: pi/sqrt(K) on the sphere, inf otherwise."""
    if space.curvature > 0.0:
        return math.pi / math.sqrt(space.curvature)
    return math.inf


@dataclass(frozen=True)
class GeodesicBall:
    """Validated geodesic ball: 0 < radius, and radius < pi/sqrt(K) when K > 0."""

    space: CurvatureSpace
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"ball radius must be positive and finite, got {self.radius}")
        cap = max_radius(self.space)
        if self.radius >= cap:
            raise ValueError(
                f"ball radius {self.radius} must stay strictly below pi/sqrt(K) = {cap}"
            )

    @property
    def curvature(self) -> float:
        return self.space.curvature


def ball(curvature: float, radius: float) -> GeodesicBall:
    """Shorthand constructor for a validated geodesic ball."""
    return GeodesicBall(CurvatureSpace(curvature), radius)


def validate_ball(space: CurvatureSpace, radius: float) -> GeodesicBall:
    """Return the validated geodesic ball or raise ValueError."""
    return GeodesicBall(space, radius)


def _check_radius(curvature: float, r) -> np.ndarray:
    """Validate 0 <= r (<= pi/sqrt(K) for K > 0) and return r as a float array."""
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0):
        raise ValueError("geodesic radius must be non-negative")
    if curvature > 0.0:
        cap = math.pi / math.sqrt(curvature)
        if np.any(arr > cap):
            raise ValueError(f"geodesic radius exceeds pi/sqrt(K) = {cap}")
    return arr


def _as_like(values: np.ndarray, template) -> float | np.ndarray:
    """Return a bare float when the input was scalar."""
    if np.ndim(template) == 0:
        return float(values)
    return values


def _s(curvature: float, r) -> np.ndarray:
    """Metric factor on arrays, series-switched near K r^2 = 0."""
    arr = np.asarray(r, dtype=float)
    if curvature == 0.0:
        return arr.astype(float, copy=True)
    x2 = curvature * arr * arr
    series = arr * (1.0 - x2 / 6.0 + x2 * x2 / 120.0)
    rk = math.sqrt(abs(curvature))
    with np.errstate(over="ignore"):
        if curvature > 0.0:
            closed = np.sin(rk * arr) / rk
        else:
            closed = np.sinh(rk * arr) / rk
    return np.where(np.abs(x2) < SMALL_CURVATURE, series, closed)


def _c(curvature: float, r) -> np.ndarray:
    """Radial derivative of the metric factor (cos / 1 / cosh profile)."""
    arr = np.asarray(r, dtype=float)
    if curvature == 0.0:
        return np.ones_like(arr)
    rk = math.sqrt(abs(curvature))
    with np.errstate(over="ignore"):
        if curvature > 0.0:
            return np.cos(rk * arr)
        return np.cosh(rk * arr)


def metric_factor(space: CurvatureSpace, r) -> float | np.ndarray:
    """Sphere-radius factor s(r) of the metric at geodesic radius r."""
    arr = _check_radius(space.curvature, r)
    return _as_like(_s(space.curvature, arr), r)


def metric_factor_derivative(space: CurvatureSpace, r) -> float | np.ndarray:
    """Radial derivative s'(r) of the metric factor."""
    arr = _check_radius(space.curvature, r)
    return _as_like(_c(space.curvature, arr), r)


def volume_weight(space: CurvatureSpace, r) -> float | np.ndarray:
    """Radial density w(r) = s(r)^2 of the volume measure (per unit solid angle)."""
    arr = _check_radius(space.curvature, r)
    s = _s(space.curvature, arr)
    return _as_like(s * s, r)


def ball_volume(space: CurvatureSpace, r) -> float | np.ndarray:
    """Volume of the geodesic ball of radius r.

    Equals the integral of 4*pi*w(t) over [0, r].  The closed endpoint
    r = pi/sqrt(K) is admitted for K > 0 so the total volume of the sphere
    (2 pi^2 K^(-3/2)) is reachable even though spectral balls stay open.
    """
    K = space.curvature
    arr = _check_radius(K, r)
    x2 = K * arr * arr
    series = 4.0 * math.pi * arr**3 * (1.0 / 3.0 - x2 / 15.0 + 2.0 * x2 * x2 / 315.0)
    if K == 0.0:
        return _as_like(series, r)
    inv_k = 1.0 / abs(K)
    x = 2.0 * arr * math.sqrt(abs(K))  # 2 r / R with R = 1/sqrt(|K|)
    with np.errstate(over="ignore", invalid="ignore"):
        if K > 0.0:
            closed = 2.0 * math.pi * arr * inv_k * (1.0 - np.sin(x) / x)
        else:
            closed = 2.0 * math.pi * arr * inv_k * (np.sinh(x) / x - 1.0)
    out = np.where(np.abs(x2) < SMALL_CURVATURE, series, closed)
    return _as_like(out, r)
