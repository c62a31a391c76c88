"""Cross-checks tying the closed forms to the independent numerics.

Each check runs a fixed deterministic grid and reports its worst residual
against a tolerance; the CLI `verify` command and the acceptance tests both
drive these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import ball
from .numerics import (
    QuadratureSpec,
    integrate_weighted,
    random_trial_function,
    rayleigh_quotient,
    solve_eigenvalue_numeric,
)
from .spectra import eigenfunction, eigenvalue
from .uncertainty import reilly_check, schwarzschild_integral_numeric

__all__ = [
    "CheckResult",
    "oracle_grid",
    "variational_configs",
    "check_oracle_agreement",
    "check_sharpness",
    "check_orthonormality",
    "check_variational",
    "check_reilly",
    "check_schwarzschild",
    "run_verification",
]

GRID_CURVATURES = (-4.0, -1.0, 0.0, 1.0, 4.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str


def _grid_radii(K: float) -> list:
    if K > 0.0:
        cap = math.pi / math.sqrt(K)
        return [f * cap for f in (0.15, 0.3, 0.5, 0.7, 0.85)]
    scale = 1.0 / math.sqrt(max(abs(K), 1.0))
    return [f * scale for f in (0.5, 1.0, 1.7, 2.4, 3.0)]


def oracle_grid() -> list:
    """The standard 25-ball verification grid: 5 curvatures x 5 radii."""
    return [ball(K, r) for K in GRID_CURVATURES for r in _grid_radii(K)]


def variational_configs() -> list:
    """Ten (curvature, radius) balls for the random-trial sweeps."""
    out = []
    for K in GRID_CURVATURES:
        radii = _grid_radii(K)
        out.extend([ball(K, radii[1]), ball(K, radii[3])])
    return out


def check_oracle_agreement(tol: float = 1.0e-8, modes=(1, 2, 3),
                           hinted: bool = False) -> CheckResult:
    """Shooting eigenvalues against the closed form over the full grid."""
    worst = 0.0
    worst_at = ""
    for b in oracle_grid():
        for n in modes:
            exact = eigenvalue(b, n)
            result = solve_eigenvalue_numeric(b, n, tol=min(tol, 1.0e-10), hinted=hinted)
            rel = abs(result.lambda_hat - exact) / exact
            if rel > worst:
                worst, worst_at = rel, f"K={b.curvature:g}, r0={b.radius:.6g}, n={n}"
    return CheckResult("oracle-agreement", worst <= tol, worst, tol,
                       f"worst relative deviation at {worst_at}")


def check_sharpness(tol: float = 1.0e-8, quad: QuadratureSpec | None = None) -> CheckResult:
    """Rayleigh quotient of the ground state equals lambda_1 on the grid."""
    worst = 0.0
    for b in oracle_grid():
        lam1 = eigenvalue(b, 1)
        rq = rayleigh_quotient(eigenfunction(b, 1), b, quad)
        worst = max(worst, abs(rq - lam1) / lam1)
    return CheckResult("sharpness", worst <= tol, worst, tol,
                       "ground-state Rayleigh quotient vs lambda_1")


def check_orthonormality(tol: float = 1.0e-8, max_mode: int = 5,
                         quad: QuadratureSpec | None = None) -> CheckResult:
    """<F_m, F_n>_w = delta_mn for m, n <= max_mode over the grid."""
    worst = 0.0
    for b in oracle_grid():
        funcs = [eigenfunction(b, n) for n in range(1, max_mode + 1)]
        for i, fi in enumerate(funcs):
            for fj in funcs[i:]:
                inner = integrate_weighted(lambda r: fi(r) * fj(r), b, quad)
                target = 1.0 if fi is fj else 0.0
                worst = max(worst, abs(inner - target))
    return CheckResult("orthonormality", worst <= tol, worst, tol,
                       f"Gram-matrix deviation, modes 1..{max_mode}")


def check_variational(seed: int = 42, trials: int = 1000, degree: int = 6,
                      quad: QuadratureSpec | None = None) -> CheckResult:
    """Random trial states never beat lambda_1 (up to 1e-9 relative slack)."""
    tol = 1.0e-9
    min_ratio = math.inf
    for idx, b in enumerate(variational_configs()):
        lam1 = eigenvalue(b, 1)
        for t in range(trials):
            trial = random_trial_function(b, seed + 1000 * idx + t, degree, quad)
            min_ratio = min(min_ratio, rayleigh_quotient(trial, b, quad) / lam1)
    worst = max(0.0, 1.0 - min_ratio)
    return CheckResult("variational", min_ratio >= 1.0 - tol, worst, tol,
                       f"min Rayleigh/lambda_1 = {min_ratio:.12f} over {trials} trials x 10 balls")


def check_reilly(count: int = 50, seed: int = 7) -> CheckResult:
    """lambda_1 >= 3K inside the hemisphere, equality only at the hemisphere."""
    rng = np.random.default_rng(seed)
    hemi = math.pi / 2.0
    radii = list(rng.uniform(0.05, hemi * (1.0 - 1.0e-6), count - 1)) + [hemi]
    worst = math.inf
    ok = True
    for r0 in radii:
        res = reilly_check(ball(1.0, r0))
        if not res.hypothesis_holds or not res.satisfied:
            ok = False
        margin = res.lambda1 - res.floor
        if r0 == hemi:
            ok = ok and abs(margin) <= 1.0e-12
        else:
            ok = ok and margin > 1.0e-12
            worst = min(worst, margin)
    return CheckResult("reilly-floor", ok, worst, 1.0e-12,
                       f"min strict margin over {count} radii; equality at the hemisphere")


def check_schwarzschild(tol: float = 1.0e-6) -> CheckResult:
    """Improper horizon integral against pi r_s / 2 across nine decades."""
    worst = 0.0
    for r_s in (1.0e-3, 1.0, 1.0e3):
        closed = math.pi * r_s / 2.0
        numeric = schwarzschild_integral_numeric(r_s, tol=1.0e-12)
        worst = max(worst, abs(numeric - closed) / closed)
    return CheckResult("schwarzschild-integral", worst <= tol, worst, tol,
                       "relative gap numeric vs pi r_s / 2")


def run_verification(tolerance: float = 1.0e-8, seed: int = 42, trials: int = 1000,
                     hinted: bool = False) -> list:
    """Run the full battery and return the CheckResults in report order."""
    return [
        check_oracle_agreement(tol=tolerance, hinted=hinted),
        check_sharpness(tol=tolerance),
        check_orthonormality(tol=tolerance),
        check_variational(seed=seed, trials=trials),
        check_reilly(seed=seed),
        check_schwarzschild(),
    ]
