"""Momentum-uncertainty lower bounds on geodesic balls and their consequences.

The sharp bound is sigma_p >= hbar sqrt(lambda_1) with
lambda_1 = (pi/r0)^2 - K, so the uncertainty product obeys

    sigma_p r0 >= pi hbar sqrt(1 - K r0^2 / pi^2),

identically pi hbar in flat space, dropping to zero as the ball fills the
sphere, and floored at hbar sqrt(|K|) in hyperbolic space.  The same flat
bound applied to a body localized inside its own horizon sphere yields the
Planck-scale floor on Schwarzschild radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import constants as _codata

from .geometry import CurvatureSpace, GeodesicBall, max_radius
from .numerics import ConvergenceError, _leggauss

__all__ = [
    "PhysicalConstants",
    "BoundRow",
    "BoundTable",
    "TaylorExtremum",
    "ReillyResult",
    "momentum_lower_bound",
    "uncertainty_product",
    "hyperbolic_floor",
    "taylor_bound",
    "taylor_extremum",
    "figure1_table",
    "reilly_check",
    "schwarzschild_geodesic_radius",
    "schwarzschild_integral_numeric",
    "schwarzschild_momentum_bound",
    "planck_length",
    "min_schwarzschild_radius",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """hbar, Newton constant and speed of light; natural or SI (CODATA)."""

    hbar: float = 1.0
    G: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0.0 and self.G > 0.0 and self.c > 0.0):
            raise ValueError("all physical constants must be strictly positive")

    @classmethod
    def natural(cls) -> "PhysicalConstants":
        return cls(1.0, 1.0, 1.0)

    @classmethod
    def si(cls) -> "PhysicalConstants":
        return cls(hbar=_codata.hbar, G=_codata.G, c=_codata.c)


class BoundRow(NamedTuple):
    curvature: float
    radius: float
    sigma_p_min: float
    product: float


@dataclass(frozen=True)
class BoundTable:
    """Bound-versus-radius rows, grouped per curvature, radii ascending."""

    rows: tuple
    asymptotes: dict  # curvature -> hbar sqrt(|K|), for the K < 0 curves


class TaylorExtremum(NamedTuple):
    radius: float
    in_domain: bool


@dataclass(frozen=True)
class ReillyResult:
    """Both sides of the convex-boundary eigenvalue floor lambda_1 >= 3K.

    hypothesis_holds records whether the ball fits inside the closed
    hemisphere (r0 <= pi/(2 sqrt K)); outside it the floor is not claimed and
    the check is vacuously satisfied.
    """

    lambda1: float
    floor: float
    hypothesis_holds: bool
    satisfied: bool

    def __bool__(self) -> bool:
        return self.satisfied


def _bound_formula(K: float, r: float, hbar: float) -> float:
    """hbar sqrt((pi/r)^2 - K) on the closed admissible radius range."""
    if not r > 0.0:
        raise ValueError("radius must be positive")
    if K > 0.0 and r > math.pi / math.sqrt(K):
        raise ValueError(f"radius {r} exceeds pi/sqrt(K)")
    if K == 0.0:
        return hbar * math.pi / r
    return hbar * math.sqrt(max((math.pi / r) ** 2 - K, 0.0))


def momentum_lower_bound(ball: GeodesicBall, hbar: float = 1.0) -> float:
    """Sharp lower bound hbar sqrt(lambda_1) on the momentum deviation."""
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    return _bound_formula(ball.curvature, ball.radius, hbar)


def uncertainty_product(ball: GeodesicBall, hbar: float = 1.0) -> float:
    """r0 times the momentum bound; algebraically pi*hbar exactly when K = 0."""
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    if ball.curvature == 0.0:
        return math.pi * hbar
    return ball.radius * momentum_lower_bound(ball, hbar)


def hyperbolic_floor(space: CurvatureSpace, hbar: float = 1.0) -> float:
    """Radius-independent floor hbar sqrt(|K|), defined for K < 0 only."""
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    if space.curvature >= 0.0:
        raise ValueError("the global momentum floor exists only for K < 0")
    return hbar * math.sqrt(-space.curvature)


def taylor_bound(ball: GeodesicBall, hbar: float = 1.0) -> float:
    """First-order small-radius expansion pi hbar (1/r0 - K r0 / (2 pi^2))."""
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    r0, K = ball.radius, ball.curvature
    return math.pi * hbar * (1.0 / r0 - K * r0 / (2.0 * math.pi**2))


def taylor_extremum(space: CurvatureSpace) -> TaylorExtremum:
    """Stationary radius pi sqrt(2/|K|) of the expansion.

    For K < 0 it is the (finite) minimizer and lies in the admissible range;
    for K > 0 it is the root of the bracket and lies beyond pi/sqrt(K).
    """
    K = space.curvature
    if K == 0.0:
        raise ValueError("the flat expansion pi hbar / r has no stationary radius")
    radius = math.pi * math.sqrt(2.0 / abs(K))
    return TaylorExtremum(radius=radius, in_domain=K < 0.0)


def figure1_table(curvatures, r_min: float, r_max: float, steps: int,
                  hbar: float = 1.0) -> BoundTable:
    """Bound-versus-radius table for several curvatures on a shared radius grid.

    Radii are clipped per curvature to the closed admissible range
    (0, pi/sqrt(K)]; the spherical curve may therefore touch zero at its last
    point.  Hyperbolic curvatures get their floor recorded as metadata.
    """
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    if not (r_min > 0.0 and r_max > r_min):
        raise ValueError("need 0 < r_min < r_max")
    if steps < 2:
        raise ValueError("need at least 2 radius steps")
    ks = [float(K) for K in curvatures]
    if not ks:
        raise ValueError("need at least one curvature")
    radii = np.linspace(r_min, r_max, steps)
    rows = []
    asymptotes = {}
    for K in ks:
        space = CurvatureSpace(K)
        admissible = radii[radii <= max_radius(space)]
        if admissible.size == 0:
            raise ValueError(f"radius range empty after clipping for K={K}")
        for r in admissible:
            sigma = _bound_formula(K, float(r), hbar)
            rows.append(BoundRow(K, float(r), sigma, sigma * float(r)))
        if K < 0.0:
            asymptotes[K] = hbar * math.sqrt(-K)
    return BoundTable(rows=tuple(rows), asymptotes=asymptotes)


def reilly_check(ball: GeodesicBall) -> ReillyResult:
    """Check lambda_1 >= 3K for balls inside the closed hemisphere (K > 0).

    Returns a result object (truthy iff the implication holds) rather than
    raising when the hemisphere hypothesis fails, since reporting failed
    applicability is the point of the check.
    """
    K = ball.curvature
    if K <= 0.0:
        raise ValueError("the convex-boundary eigenvalue floor requires K > 0")
    lam1 = (math.pi / ball.radius) ** 2 - K
    floor = 3.0 * K
    hypothesis = ball.radius <= math.pi / (2.0 * math.sqrt(K))
    satisfied = (not hypothesis) or lam1 >= floor - abs(floor) * 1.0e-13
    return ReillyResult(lambda1=lam1, floor=floor, hypothesis_holds=hypothesis,
                        satisfied=satisfied)


def schwarzschild_geodesic_radius(r_s: float) -> float:
    """Geodesic radius pi r_s / 2 of the horizon-sphere interior."""
    if not r_s > 0.0:
        raise ValueError("Schwarzschild radius must be positive")
    return math.pi * r_s / 2.0


def schwarzschild_integral_numeric(r_s: float, tol: float = 1.0e-6) -> float:
    """Numeric proper-radius integral of |1 - r_s/r|^(-1/2) over (0, r_s).

    The substitution r = r_s sin^2(theta) removes both endpoint
    singularities, leaving 2 r_s sin^2(theta) on [0, pi/2]; Gauss-Legendre is
    then refined by doubling until two successive levels agree to tol
    (relative).  Oracle for the closed form pi r_s / 2.
    """
    if not r_s > 0.0:
        raise ValueError("Schwarzschild radius must be positive")
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")

    def level(order: int) -> float:
        x, w = _leggauss(order)
        theta = 0.25 * math.pi * (x + 1.0)
        vals = 2.0 * r_s * np.sin(theta) ** 2
        return float(0.25 * math.pi * np.dot(w, vals))

    prev = level(8)
    for order in (16, 32, 64, 128, 256):
        cur = level(order)
        if abs(cur - prev) <= tol * abs(cur):
            return cur
        prev = cur
    raise ConvergenceError("improper-integral refinement did not converge")


def schwarzschild_momentum_bound(r_s: float, hbar: float = 1.0) -> float:
    """Momentum floor 2 hbar / r_s for a state confined to the horizon sphere."""
    if not r_s > 0.0:
        raise ValueError("Schwarzschild radius must be positive")
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    return 2.0 * hbar / r_s


def planck_length(constants: PhysicalConstants) -> float:
    """sqrt(hbar G / c^3)."""
    return math.sqrt(constants.hbar * constants.G / constants.c**3)


def min_schwarzschild_radius(constants: PhysicalConstants) -> float:
    """Smallest admissible Schwarzschild radius, twice the Planck length."""
    return 2.0 * planck_length(constants)
