"""Independent numerical oracle for the closed-form spectra.

Three ingredients: composite Gauss-Legendre quadrature against the radial
volume weight, Rayleigh quotients (analytic derivative when available, else
fourth-order finite differences on a sample grid), and a shooting-method
eigenvalue solver for the singular radial ODE

    F'' + 2 (s'(r)/s(r)) F' + lambda F = 0,   F regular at 0,  F(r0) = 0.

The shooting solver never consults the closed-form spectrum.  It integrates
the regular solution out of the singular origin from a series start, scans
the spectral parameter upward from the bottom of the spectrum, brackets the
n-th sign change of the boundary value, and polishes the root by bisection
followed by secant steps.  An optional "hinted" mode may center the bracket
search elsewhere for speed, but the default scan is blind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import simpson, solve_ivp

from . import geometry
from .geometry import GeodesicBall, volume_weight
from .spectra import RadialFunction, _check_mode

__all__ = [
    "ConvergenceError",
    "QuadratureSpec",
    "DEFAULT_QUAD",
    "ShootingResult",
    "integrate_weighted",
    "weighted_norm",
    "rayleigh_quotient",
    "momentum_stddev",
    "momentum_variance_laplacian",
    "solve_eigenvalue_numeric",
    "random_trial_function",
]

# Shooting-solver knobs: integrator tolerance, series-start radius as a
# fraction of r0, and the ceiling on the normalized boundary residual that a
# converged solve is allowed to report.
SHOOT_RTOL = 1.0e-10
SHOOT_ATOL = 1.0e-12
SERIES_START_FRACTION = 1.0e-6
RESIDUAL_CEILING = 1.0e-6

MIN_TRIAL_NORM = 1.0e-6
_FD_SAMPLES = 4097


class ConvergenceError(RuntimeError):
    """An iterative numerical routine failed to converge."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Gauss-Legendre rule: node_count total nodes over equal panels."""

    node_count: int = 64
    panels: int = 8
    scheme: str = "gauss-legendre-composite"

    def __post_init__(self):
        if self.scheme != "gauss-legendre-composite":
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")
        if self.panels < 1:
            raise ValueError("panel count must be >= 1")
        if self.node_count < 16:
            raise ValueError("node_count must be >= 16")
        if self.node_count % self.panels != 0:
            raise ValueError("node_count must be divisible by the panel count")


DEFAULT_QUAD = QuadratureSpec()


@lru_cache(maxsize=64)
def _leggauss(order: int):
    return np.polynomial.legendre.leggauss(order)


def _nodes_weights(spec: QuadratureSpec, a: float, b: float):
    """Nodes and weights of the composite rule on [a, b]."""
    x, w = _leggauss(spec.node_count // spec.panels)
    edges = np.linspace(a, b, spec.panels + 1)
    mids = 0.5 * (edges[1:] + edges[:-1])
    halves = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mids[:, None] + halves[:, None] * x[None, :]).ravel()
    weights = (halves[:, None] * w[None, :]).ravel()
    return nodes, weights


def _eval_on(f, x: np.ndarray) -> np.ndarray:
    """Evaluate a callable on an array, falling back to elementwise calls."""
    try:
        y = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        return np.array([float(f(v)) for v in x])
    if y.ndim == 0:
        return np.full(x.shape, float(y))
    if y.shape != x.shape:
        return np.array([float(f(v)) for v in x])
    return y


def integrate_weighted(g, ball: GeodesicBall, quad: QuadratureSpec | None = None) -> float:
    """Integral of g(r) w(r) dr over [0, r0] by composite Gauss-Legendre.

    g may be a RadialFunction or any callable accepting scalar/array radii.
    """
    spec = quad if quad is not None else DEFAULT_QUAD
    if not isinstance(spec, QuadratureSpec):
        raise ValueError("quad must be a QuadratureSpec")
    f = g.func if isinstance(g, RadialFunction) else g
    nodes, weights = _nodes_weights(spec, 0.0, ball.radius)
    vals = _eval_on(f, nodes)
    return float(np.dot(weights, vals * volume_weight(ball.space, nodes)))


def weighted_norm(psi, ball: GeodesicBall, quad: QuadratureSpec | None = None) -> float:
    """sqrt of the weighted square integral of psi."""
    f = psi.func if isinstance(psi, RadialFunction) else psi
    val = integrate_weighted(lambda r: np.asarray(f(r), dtype=float) ** 2, ball, quad)
    return math.sqrt(max(val, 0.0))


def _fd_derivative(y: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order finite-difference first derivative on a uniform grid."""
    d = np.empty_like(y)
    d[2:-2] = (y[:-4] - 8.0 * y[1:-3] + 8.0 * y[3:-1] - y[4:]) / (12.0 * h)
    d[0] = (-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h)
    d[1] = (-3.0 * y[0] - 10.0 * y[1] + 18.0 * y[2] - 6.0 * y[3] + y[4]) / (12.0 * h)
    d[-2] = (3.0 * y[-1] + 10.0 * y[-2] - 18.0 * y[-3] + 6.0 * y[-4] - y[-5]) / (12.0 * h)
    d[-1] = (25.0 * y[-1] - 48.0 * y[-2] + 36.0 * y[-3] - 16.0 * y[-4] + 3.0 * y[-5]) / (12.0 * h)
    return d


def _samples_of(psi, ball: GeodesicBall, count: int = _FD_SAMPLES):
    """Uniform samples of a profile, reusing its own grid when present."""
    if isinstance(psi, RadialFunction) and psi.grid is not None:
        return psi.grid, psi.values
    f = psi.func if isinstance(psi, RadialFunction) else psi
    grid = np.linspace(0.0, ball.radius, count)
    return grid, _eval_on(f, grid)


def rayleigh_quotient(psi, ball: GeodesicBall, quad: QuadratureSpec | None = None) -> float:
    """Weighted Rayleigh quotient <psi'|psi'>_w / <psi|psi>_w.

    Uses the analytic derivative when the profile carries one; otherwise the
    derivative is taken by fourth-order finite differences on the sample grid
    and the integrals by composite Simpson on that grid.
    """
    if isinstance(psi, RadialFunction) and psi.deriv is not None:
        num = integrate_weighted(lambda r: np.asarray(psi.deriv(r), dtype=float) ** 2, ball, quad)
        den = integrate_weighted(lambda r: np.asarray(psi(r), dtype=float) ** 2, ball, quad)
    else:
        grid, vals = _samples_of(psi, ball)
        dvals = _fd_derivative(vals, grid[1] - grid[0])
        w = volume_weight(ball.space, grid)
        num = float(simpson(dvals * dvals * w, x=grid))
        den = float(simpson(vals * vals * w, x=grid))
    if not den > 0.0:
        raise ValueError("Rayleigh quotient of a zero-norm state")
    return float(num / den)


def momentum_stddev(psi, ball: GeodesicBall, quad: QuadratureSpec | None = None,
                    hbar: float = 1.0) -> float:
    """Momentum standard deviation hbar * sqrt(Rayleigh quotient) of a state."""
    if hbar <= 0.0:
        raise ValueError("hbar must be positive")
    return hbar * math.sqrt(rayleigh_quotient(psi, ball, quad))


def momentum_variance_laplacian(psi, ball: GeodesicBall, hbar: float = 1.0,
                                samples: int = _FD_SAMPLES) -> float:
    """Momentum variance via the Laplacian form, all derivatives by differences.

    Evaluates -hbar^2 <psi|Lap psi>_w / <psi|psi>_w with the integrand written
    as psi psi'' w + 2 psi psi' s s', which is regular at the origin.  Serves
    as an independent cross-check of the gradient form.
    """
    grid, vals = _samples_of(psi, ball, samples)
    h = grid[1] - grid[0]
    d1 = _fd_derivative(vals, h)
    d2 = _fd_derivative(d1, h)
    s = geometry._s(ball.curvature, grid)
    c = geometry._c(ball.curvature, grid)
    num = -float(simpson(vals * d2 * s * s + 2.0 * vals * d1 * c * s, x=grid))
    den = float(simpson(vals * vals * s * s, x=grid))
    if not den > 0.0:
        raise ValueError("zero-norm state")
    return hbar * hbar * num / den


# ----------------------------------------------------------------------------
# Shooting solver
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ShootingResult:
    """Converged eigenvalue estimate with diagnostics.

    iterations counts boundary-value evaluations (one ODE solve each);
    interior_zeros is the number of interior sign changes of the profile.
    """

    lambda_hat: float
    boundary_residual: float
    iterations: int
    interior_zeros: int


def _rhs(r, y, K, lam):
    if K > 0.0:
        rk = math.sqrt(K)
        cot = rk * math.cos(rk * r) / math.sin(rk * r)
    elif K < 0.0:
        rk = math.sqrt(-K)
        cot = rk * math.cosh(rk * r) / math.sinh(rk * r)
    else:
        cot = 1.0 / r
    return (y[1], -2.0 * cot * y[1] - lam * y[0])


def _zero_event(r, y, K, lam):
    return y[0]


def _series_state(K: float, lam: float, r: float):
    """Regular-solution series F = 1 + b2 r^2 + b4 r^4 at the start radius.

    b2 = -lam/6 is forced by the Frobenius analysis at the regular singular
    point; b4 = lam (3 lam - 4 K) / 360 follows from the next order.
    """
    b2 = -lam / 6.0
    b4 = lam * (3.0 * lam - 4.0 * K) / 360.0
    f = 1.0 + b2 * r * r + b4 * r**4
    fp = 2.0 * b2 * r + 4.0 * b4 * r**3
    return f, fp


def _shoot(ball: GeodesicBall, lam: float, dense: bool = False):
    K, r0 = ball.curvature, ball.radius
    eps = SERIES_START_FRACTION * r0
    kwargs = {}
    if dense:
        kwargs["t_eval"] = np.linspace(eps, r0, 1025)
        kwargs["events"] = _zero_event
    sol = solve_ivp(
        _rhs, (eps, r0), _series_state(K, lam, eps),
        method="DOP853", rtol=SHOOT_RTOL, atol=SHOOT_ATOL, args=(K, lam), **kwargs,
    )
    if not sol.success:
        raise ConvergenceError(f"ODE integration failed at lambda={lam}: {sol.message}")
    return sol


def _default_scan_cap(n: int, K: float, r0: float) -> int:
    return 4 * (n + 2) ** 2 + int(4.0 * abs(K) * r0 * r0 / math.pi**2) + 32


def solve_eigenvalue_numeric(ball: GeodesicBall, n: int, tol: float = 1.0e-10,
                             hinted: bool = False,
                             max_scan_steps: int | None = None) -> ShootingResult:
    """Shooting estimate of the n-th radial Dirichlet eigenvalue.

    Scans lambda upward from max(0, -K) in steps of (pi/r0)^2 / 4 until the
    boundary value F(r0; lambda) has changed sign n times, bisects the last
    bracket down to 1e-3 of a step, then polishes with secant iteration until
    the relative eigenvalue update drops below tol.  The converged profile is
    re-integrated densely to count interior zeros (must be n - 1) and to
    normalize the boundary residual.
    """
    n = _check_mode(n)
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    K, r0 = ball.curvature, ball.radius
    step = (math.pi / r0) ** 2 / 4.0
    lam_floor = max(0.0, -K) + 1.0e-6 * step
    evaluations = 0

    def end_value(lam: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return float(_shoot(ball, lam).y[0, -1])

    bracket = None
    if hinted:
        hint = (n * math.pi / r0) ** 2 - K
        lo = max(lam_floor, hint - step)
        hi = hint + step
        f_lo, f_hi = end_value(lo), end_value(hi)
        if f_lo == 0.0 or f_lo * f_hi < 0.0 or f_hi == 0.0:
            bracket = (lo, hi, f_lo, f_hi)
    if bracket is None:
        cap = max_scan_steps if max_scan_steps is not None else _default_scan_cap(n, K, r0)
        lam_prev, f_prev = lam_floor, end_value(lam_floor)
        crossings = 0
        for k in range(1, cap + 1):
            lam_k = lam_floor + k * step
            f_k = end_value(lam_k)
            if f_k == 0.0 or f_prev * f_k < 0.0:
                crossings += 1
                if crossings == n:
                    bracket = (lam_prev, lam_k, f_prev, f_k)
                    break
            lam_prev, f_prev = lam_k, f_k
        if bracket is None:
            raise ConvergenceError(
                f"no bracket for mode {n} within {cap} scan steps (K={K}, r0={r0})"
            )

    lo, hi, f_lo, f_hi = bracket
    while hi - lo > 1.0e-3 * step:
        mid = 0.5 * (lo + hi)
        f_mid = end_value(mid)
        if f_lo * f_mid <= 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid

    a, b, fa, fb = lo, hi, f_lo, f_hi
    lam_hat = None
    for _ in range(60):
        if fb == fa:
            if abs(b - a) <= tol * abs(b):
                lam_hat = b
            break
        nxt = b - fb * (b - a) / (fb - fa)
        a, fa = b, fb
        b = nxt
        fb = end_value(b)
        if abs(b - a) <= tol * abs(b):
            lam_hat = b
            break
    if lam_hat is None:
        raise ConvergenceError(f"secant iteration failed to reach tol={tol} for mode {n}")

    sol = _shoot(ball, lam_hat, dense=True)
    profile = sol.y[0]
    residual = abs(profile[-1]) / float(np.max(np.abs(profile)))
    zero_times = sol.t_events[0]
    interior = int(np.count_nonzero(zero_times < r0 * (1.0 - 1.0e-4)))
    evaluations += 1
    if residual > RESIDUAL_CEILING:
        raise ConvergenceError(
            f"boundary residual {residual:.3e} above ceiling {RESIDUAL_CEILING:.0e}"
        )
    if interior != n - 1:
        if hinted:
            # Hinted bracket converged to a neighbor mode: fall back to the
            # blind scan, which identifies modes by crossing count.
            return solve_eigenvalue_numeric(ball, n, tol, hinted=False,
                                            max_scan_steps=max_scan_steps)
        raise ConvergenceError(
            f"converged profile has {interior} interior zeros, expected {n - 1}"
        )
    return ShootingResult(
        lambda_hat=float(lam_hat),
        boundary_residual=float(residual),
        iterations=evaluations,
        interior_zeros=interior,
    )


def _polynomial_trial(ball: GeodesicBall, coeffs: np.ndarray) -> RadialFunction:
    r0 = ball.radius
    c = np.asarray(coeffs, dtype=float)
    dc = np.polynomial.polynomial.polyder(c)

    def func(r):
        arr = np.asarray(r, dtype=float)
        return (r0 - arr) * np.polynomial.polynomial.polyval(arr / r0, c)

    def deriv(r):
        arr = np.asarray(r, dtype=float)
        t = arr / r0
        return -np.polynomial.polynomial.polyval(t, c) \
            + (r0 - arr) * np.polynomial.polynomial.polyval(t, dc) / r0

    return RadialFunction(ball=ball, func=func, deriv=deriv,
                          coefficients=tuple(float(x) for x in c))


def random_trial_function(ball: GeodesicBall, seed: int, degree: int,
                          quad: QuadratureSpec | None = None) -> RadialFunction:
    """Deterministic random polynomial trial state vanishing at r0.

    psi(r) = (r0 - r) * sum_k c_k (r/r0)^k with c_k uniform on [-1, 1] from
    the seeded generator; draws with weighted norm below 1e-6 are rejected
    and redrawn (at most 100 attempts).
    """
    if degree < 1:
        raise ValueError("polynomial degree must be >= 1")
    rng = np.random.default_rng(seed)
    for _ in range(100):
        coeffs = rng.uniform(-1.0, 1.0, degree + 1)
        trial = _polynomial_trial(ball, coeffs)
        if weighted_norm(trial, ball, quad) >= MIN_TRIAL_NORM:
            return trial
    raise ConvergenceError("100 consecutive trial draws were numerically null")
