"""Spectral geometry of geodesic balls in constant-curvature 3-spaces.

Closed-form Dirichlet eigenpairs for the radial problem, an independent
shooting-method eigenvalue oracle, and evaluators for the curvature-dependent
momentum-uncertainty lower bound, its hyperbolic floor, and the Planck-scale
consequence for Schwarzschild radii.
"""

__version__ = "0.1.0"

from .geometry import (
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
from .spectra import (
    EigenPair,
    RadialFunction,
    eigenfunction,
    eigenfunction_value,
    eigenpair,
    eigenvalue,
    normalization_constant,
)
from .numerics import (
    ConvergenceError,
    QuadratureSpec,
    ShootingResult,
    integrate_weighted,
    momentum_stddev,
    momentum_variance_laplacian,
    random_trial_function,
    rayleigh_quotient,
    solve_eigenvalue_numeric,
    weighted_norm,
)
from .uncertainty import (
    BoundRow,
    BoundTable,
    PhysicalConstants,
    ReillyResult,
    TaylorExtremum,
    figure1_table,
    hyperbolic_floor,
    min_schwarzschild_radius,
    momentum_lower_bound,
    planck_length,
    reilly_check,
    schwarzschild_geodesic_radius,
    schwarzschild_integral_numeric,
    schwarzschild_momentum_bound,
    taylor_bound,
    taylor_extremum,
    uncertainty_product,
)

__all__ = [
    "__version__",
    "CurvatureSpace", "GeodesicBall", "ball", "validate_ball", "max_radius",
    "metric_factor", "metric_factor_derivative", "volume_weight", "ball_volume",
    "EigenPair", "RadialFunction", "eigenvalue", "normalization_constant",
    "eigenpair", "eigenfunction", "eigenfunction_value",
    "ConvergenceError", "QuadratureSpec", "ShootingResult", "integrate_weighted",
    "weighted_norm", "rayleigh_quotient", "momentum_stddev",
    "momentum_variance_laplacian", "solve_eigenvalue_numeric", "random_trial_function",
    "PhysicalConstants", "BoundRow", "BoundTable", "TaylorExtremum", "ReillyResult",
    "momentum_lower_bound", "uncertainty_product", "hyperbolic_floor",
    "taylor_bound", "taylor_extremum", "figure1_table", "reilly_check",
    "schwarzschild_geodesic_radius", "schwarzschild_integral_numeric",
    "schwarzschild_momentum_bound", "planck_length", "min_schwarzschild_radius",
]
