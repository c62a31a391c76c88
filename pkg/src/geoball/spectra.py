"""Closed-form Dirichlet eigenpairs of the radial problem on geodesic balls.

For vanishing angular momentum the Dirichlet problem on a geodesic ball of
radius r0 reduces to a singular radial ODE whose regular solutions are, up to
normalization, sin(n pi r / r0) / s(r).  The eigenvalues are

    lambda_n = (n pi / r0)^2 - K,    n = 1, 2, ...

for every sign of the curvature K, and the prefactor sqrt(2|K|/r0)
(sqrt(2/r0) in the flat limit) makes the profiles orthonormal under the
radial volume weight w(r) dr.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import geometry
from .geometry import GeodesicBall

__all__ = [
    "SERIES_RADIUS_FRACTION",
    "EigenPair",
    "RadialFunction",
    "eigenvalue",
    "normalization_constant",
    "eigenpair",
    "eigenfunction_value",
    "eigenfunction",
]

# Below r = SERIES_RADIUS_FRACTION * r0 the sin/s quotient is evaluated via
# fourth-order series of numerator and denominator; the direct quotient is
# 0/0 at the center.
SERIES_RADIUS_FRACTION = 1.0e-4


@dataclass(frozen=True)
class EigenPair:
    """Mode index, Dirichlet eigenvalue and normalization prefactor."""

    n: int
    lam: float
    norm_const: float


@dataclass(frozen=True, eq=False)
class RadialFunction:
    """Radial profile on [0, r0] vanishing at the boundary.

    Carries a vectorized evaluation rule, optionally its analytic derivative,
    optionally a uniform sample grid with values (for profiles known only by
    samples), and, for the polynomial trial family, the raw coefficients.
    """

    ball: GeodesicBall
    func: Callable
    deriv: Optional[Callable] = None
    grid: Optional[np.ndarray] = None
    values: Optional[np.ndarray] = None
    coefficients: Optional[tuple] = None

    def __call__(self, r):
        return self.func(r)

    @classmethod
    def from_samples(cls, ball: GeodesicBall, grid, values) -> "RadialFunction":
        """Build a sampled profile on a uniform grid spanning [0, r0]."""
        g = np.asarray(grid, dtype=float)
        v = np.asarray(values, dtype=float)
        if g.ndim != 1 or g.shape != v.shape or g.size < 5:
            raise ValueError("grid and values must be matching 1-d arrays of length >= 5")
        h = np.diff(g)
        if not (abs(g[0]) <= 1e-12 * ball.radius and abs(g[-1] - ball.radius) <= 1e-12 * ball.radius):
            raise ValueError("sample grid must span [0, r0]")
        if np.any(np.abs(h - h[0]) > 1e-9 * h[0]):
            raise ValueError("sample grid must be uniform")
        func = lambda r: np.interp(np.asarray(r, dtype=float), g, v)
        return cls(ball=ball, func=func, grid=g, values=v)


def _check_mode(n) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"mode index must be a positive integer, got {n!r}")
    return int(n)


def eigenvalue(ball: GeodesicBall, n: int) -> float:
    """Dirichlet eigenvalue (n pi / r0)^2 - K of the n-th radial mode."""
    n = _check_mode(n)
    return (n * math.pi / ball.radius) ** 2 - ball.curvature


def normalization_constant(ball: GeodesicBall, n: int) -> float:
    """Prefactor sqrt(2|K|/r0) (sqrt(2/r0) for K = 0) giving unit radial norm."""
    _check_mode(n)
    K = ball.curvature
    scale = abs(K) if K != 0.0 else 1.0
    return math.sqrt(2.0 * scale / ball.radius)


def eigenpair(ball: GeodesicBall, n: int) -> EigenPair:
    return EigenPair(n=_check_mode(n), lam=eigenvalue(ball, n), norm_const=normalization_constant(ball, n))


def _quotient(K: float, r0: float, n: int, r: np.ndarray) -> np.ndarray:
    """sin(n pi r / r0) / s(r), series-resolved at the removable singularity."""
    a = n * math.pi / r0
    ar = a * r
    with np.errstate(divide="ignore", invalid="ignore"):
        closed = np.sin(ar) / geometry._s(K, r)
    ar2 = ar * ar
    kr2 = K * r * r
    num = a * (1.0 - ar2 / 6.0 + ar2 * ar2 / 120.0)
    den = 1.0 - kr2 / 6.0 + kr2 * kr2 / 120.0
    return np.where(r < SERIES_RADIUS_FRACTION * r0, num / den, closed)


def _quotient_deriv(K: float, r0: float, n: int, r: np.ndarray) -> np.ndarray:
    """Radial derivative of sin(n pi r / r0) / s(r)."""
    a = n * math.pi / r0
    s = geometry._s(K, r)
    c = geometry._c(K, r)
    with np.errstate(divide="ignore", invalid="ignore"):
        closed = (a * np.cos(a * r) * s - np.sin(a * r) * c) / (s * s)
    # Series branch: q = N/D with N = sin(a r)/r and D = s(r)/r, both even
    # polynomials to fourth order.
    ar2 = (a * r) ** 2
    kr2 = K * r * r
    num = a * (1.0 - ar2 / 6.0 + ar2 * ar2 / 120.0)
    num_p = a * (-a * a * r / 3.0 + a**4 * r**3 / 30.0)
    den = 1.0 - kr2 / 6.0 + kr2 * kr2 / 120.0
    den_p = -K * r / 3.0 + K * K * r**3 / 30.0
    series = (num_p * den - num * den_p) / (den * den)
    return np.where(r < SERIES_RADIUS_FRACTION * r0, series, closed)


def eigenfunction_value(ball: GeodesicBall, n: int, r) -> float | np.ndarray:
    """Normalized radial eigenfunction at r, exact zero on the boundary."""
    n = _check_mode(n)
    r0 = ball.radius
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > r0):
        raise ValueError(f"evaluation point outside [0, {r0}]")
    amp = math.sqrt(2.0 / r0)
    vals = amp * _quotient(ball.curvature, r0, n, arr)
    vals = np.where(arr == r0, 0.0, vals)
    return geometry._as_like(vals, r)


def eigenfunction(ball: GeodesicBall, n: int) -> RadialFunction:
    """The n-th radial eigenfunction as an evaluable profile with derivative."""
    n = _check_mode(n)
    K, r0 = ball.curvature, ball.radius
    amp = math.sqrt(2.0 / r0)

    def func(r):
        return eigenfunction_value(ball, n, r)

    def deriv(r):
        arr = np.asarray(r, dtype=float)
        return geometry._as_like(amp * _quotient_deriv(K, r0, n, arr), r)

    return RadialFunction(ball=ball, func=func, deriv=deriv)
