"""Command-line front end emitting tables, verification reports and figures.

Usage:
    geoball eigen -K 0 --radius 1 -n 1            closed-form vs shooting eigenvalue
    geoball bound --curvature=1,0,-1 --r-min 0.05 --r-max 3.1415926535 --steps 200
    geoball volume -K -1 --radius 1               ball volume vs quadrature
    geoball verify --tolerance 1e-8 --seed 42     full cross-check battery
    geoball trial -K -1 --radius 2 --seed 7       one random variational trial
    geoball schwarzschild --hbar-mode si          Planck-scale report
    geoball sweep --curvature=-1,0,1 --r-min 0.5 --r-max 2.5 --steps 4 --modes 2

All numeric output uses 12 significant digits with '.' as decimal separator;
identical configurations (including seeds) produce byte-identical CSV/JSON.
Exit codes: 0 success, 1 numerical/verification failure, 2 usage or domain
error.  `--figure PATH` on eigen/bound/sweep additionally renders a
matplotlib figure next to the delimited output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .geometry import CurvatureSpace, ball, ball_volume, max_radius, volume_weight
from .numerics import (
    ConvergenceError,
    DEFAULT_QUAD,
    _nodes_weights,
    integrate_weighted,
    random_trial_function,
    rayleigh_quotient,
    solve_eigenvalue_numeric,
)
from .spectra import eigenfunction, eigenvalue
from .uncertainty import (
    PhysicalConstants,
    figure1_table,
    min_schwarzschild_radius,
    planck_length,
    schwarzschild_geodesic_radius,
    schwarzschild_integral_numeric,
    schwarzschild_momentum_bound,
)
from .verification import run_verification

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _fmt(x) -> str:
    """12-significant-digit, locale-independent rendering."""
    return format(float(x), ".12g")


def _round12(x) -> float:
    return float(_fmt(x))


def _write_text(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_bytes(text.encode("utf-8"))


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(cells) for cells in rows)
    return "\n".join(lines) + "\n"


def _json_doc(command: str, config: dict, rows, extra_meta: dict | None = None) -> str:
    meta = {"tool": "geoball", "version": __version__, "command": command, "config": config}
    if extra_meta:
        meta.update(extra_meta)
    return json.dumps({"metadata": meta, "rows": rows}, indent=2) + "\n"


def _hbar(args) -> float:
    return 1.0 if args.hbar_mode == "natural" else PhysicalConstants.si().hbar


def _curvature_list(values) -> list:
    if not values:
        raise ValueError("at least one --curvature/-K value is required")
    out = []
    for item in values:
        for tok in str(item).split(","):
            tok = tok.strip()
            if tok:
                out.append(float(tok))
    if not out:
        raise ValueError("no curvature values parsed")
    return out


# ----------------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------------

def cmd_eigen(args) -> int:
    b = ball(args.curvature, args.radius)
    lam = eigenvalue(b, args.n)
    shot = solve_eigenvalue_numeric(b, args.n, tol=args.tolerance)
    rel = abs(shot.lambda_hat - lam) / lam
    norm = integrate_weighted(lambda r: eigenfunction(b, args.n)(r) ** 2, b)
    row = {
        "K": args.curvature, "r0": args.radius, "n": args.n,
        "lambda": lam, "lambda_numeric": shot.lambda_hat, "rel_discrepancy": rel,
        "norm_error": abs(norm - 1.0),
    }
    if args.format == "csv":
        header = ["K", "r0", "n", "lambda", "lambda_numeric", "rel_discrepancy", "norm_error"]
        cells = [_fmt(row["K"]), _fmt(row["r0"]), str(args.n), _fmt(row["lambda"]),
                 _fmt(row["lambda_numeric"]), _fmt(row["rel_discrepancy"]),
                 _fmt(row["norm_error"])]
        _write_text(_csv(header, [cells]), args.output)
    else:
        config = {"K": args.curvature, "r0": args.radius, "n": args.n, "tolerance": args.tolerance}
        rows = [{k: (v if isinstance(v, int) else _round12(v)) for k, v in row.items()}]
        _write_text(_json_doc("eigen", config, rows), args.output)
    if args.figure:
        from .plotting import save_profile_figure

        save_profile_figure(b, args.n, args.figure, shooting_lambda=shot.lambda_hat)
    return EXIT_OK


def cmd_bound(args) -> int:
    ks = _curvature_list(args.curvature)
    hbar = _hbar(args)
    table = figure1_table(ks, args.r_min, args.r_max, args.steps, hbar)
    if args.format == "csv":
        rows = [[_fmt(r.curvature), _fmt(r.radius), _fmt(r.sigma_p_min), _fmt(r.product)]
                for r in table.rows]
        _write_text(_csv(["K", "r", "sigma_p_min", "product"], rows), args.output)
        for K, floor in table.asymptotes.items():
            print(f"# asymptote K={_fmt(K)}: {_fmt(floor)}", file=sys.stderr)
    else:
        rows = [{"K": _round12(r.curvature), "r": _round12(r.radius),
                 "sigma_p_min": _round12(r.sigma_p_min), "product": _round12(r.product)}
                for r in table.rows]
        config = {"K": ks, "r_min": args.r_min, "r_max": args.r_max,
                  "steps": args.steps, "hbar_mode": args.hbar_mode}
        meta = {"asymptotes": {_fmt(K): _round12(v) for K, v in table.asymptotes.items()}}
        _write_text(_json_doc("bound", config, rows, meta), args.output)
    if args.figure:
        from .plotting import save_bound_figure

        save_bound_figure(table, args.figure, hbar)
    return EXIT_OK


def cmd_volume(args) -> int:
    space = CurvatureSpace(args.curvature)
    vol = ball_volume(space, args.radius)
    nodes, weights = _nodes_weights(DEFAULT_QUAD, 0.0, args.radius)
    quad_vol = float((weights * 4.0 * math.pi * volume_weight(space, nodes)).sum())
    rel = abs(quad_vol - vol) / vol if vol != 0.0 else abs(quad_vol)
    if args.format == "csv":
        header = ["K", "r", "volume", "volume_quadrature", "rel_gap"]
        cells = [_fmt(args.curvature), _fmt(args.radius), _fmt(vol), _fmt(quad_vol), _fmt(rel)]
        _write_text(_csv(header, [cells]), args.output)
    else:
        config = {"K": args.curvature, "r": args.radius}
        rows = [{"K": _round12(args.curvature), "r": _round12(args.radius),
                 "volume": _round12(vol), "volume_quadrature": _round12(quad_vol),
                 "rel_gap": _round12(rel)}]
        _write_text(_json_doc("volume", config, rows), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_verification(tolerance=args.tolerance, seed=args.seed,
                               trials=args.trials)
    if args.format == "json":
        rows = [{"check": r.name, "passed": r.passed, "worst": _round12(r.worst),
                 "tolerance": _round12(r.tolerance), "detail": r.detail} for r in results]
        config = {"tolerance": args.tolerance, "seed": args.seed, "trials": args.trials}
        _write_text(_json_doc("verify", config, rows), args.output)
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name:<24} {status}  worst={_fmt(r.worst)}  tol={_fmt(r.tolerance)}  {r.detail}")
        n_pass = sum(r.passed for r in results)
        overall = "PASS" if n_pass == len(results) else "FAIL"
        lines.append(f"overall {overall} ({n_pass}/{len(results)} checks)")
        _write_text("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_trial(args) -> int:
    b = ball(args.curvature, args.radius)
    trial = random_trial_function(b, args.seed, args.degree)
    rq = rayleigh_quotient(trial, b)
    lam1 = eigenvalue(b, 1)
    coeffs = ";".join(_fmt(c) for c in trial.coefficients)
    if args.format == "csv":
        header = ["K", "r0", "seed", "degree", "rayleigh", "lambda1", "ratio", "coefficients"]
        cells = [_fmt(args.curvature), _fmt(args.radius), str(args.seed), str(args.degree),
                 _fmt(rq), _fmt(lam1), _fmt(rq / lam1), coeffs]
        _write_text(_csv(header, [cells]), args.output)
    else:
        config = {"K": args.curvature, "r0": args.radius, "seed": args.seed, "degree": args.degree}
        rows = [{"K": _round12(args.curvature), "r0": _round12(args.radius),
                 "seed": args.seed, "degree": args.degree, "rayleigh": _round12(rq),
                 "lambda1": _round12(lam1), "ratio": _round12(rq / lam1),
                 "coefficients": [_round12(c) for c in trial.coefficients]}]
        _write_text(_json_doc("trial", config, rows), args.output)
    return EXIT_OK


def cmd_schwarzschild(args) -> int:
    constants = PhysicalConstants.natural() if args.hbar_mode == "natural" \
        else PhysicalConstants.si()
    if not args.rs > 0.0:
        raise ValueError("Schwarzschild radius must be positive")
    closed = schwarzschild_geodesic_radius(args.rs)
    numeric = schwarzschild_integral_numeric(args.rs, tol=args.tolerance)
    quantities = [
        ("planck_length", planck_length(constants)),
        ("min_schwarzschild_radius", min_schwarzschild_radius(constants)),
        ("sigma_p_min_at_rs", schwarzschild_momentum_bound(args.rs, constants.hbar)),
        ("geodesic_radius_closed", closed),
        ("geodesic_radius_numeric", numeric),
        ("integral_rel_gap", abs(numeric - closed) / closed),
    ]
    if args.format == "csv":
        rows = [[name, _fmt(value)] for name, value in quantities]
        _write_text(_csv(["quantity", "value"], rows), args.output)
    else:
        config = {"hbar_mode": args.hbar_mode, "rs": args.rs, "tolerance": args.tolerance}
        rows = [{"quantity": name, "value": _round12(value)} for name, value in quantities]
        _write_text(_json_doc("schwarzschild", config, rows), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    ks = _curvature_list(args.curvature)
    import numpy as np

    radii = np.linspace(args.r_min, args.r_max, args.steps)
    rows = []
    for K in ks:
        cap = max_radius(CurvatureSpace(K))
        admissible = [float(r) for r in radii if 0.0 < r < cap * (1.0 - 1.0e-9)]
        if not admissible:
            raise ValueError(f"radius range empty after clipping for K={K}")
        for r0 in admissible:
            b = ball(K, r0)
            for n in range(1, args.modes + 1):
                lam = eigenvalue(b, n)
                shot = solve_eigenvalue_numeric(b, n, tol=args.tolerance)
                rows.append({"K": K, "r0": r0, "n": n, "lambda": lam,
                             "lambda_numeric": shot.lambda_hat,
                             "rel_discrepancy": abs(shot.lambda_hat - lam) / lam})
    if args.format == "csv":
        cells = [[_fmt(r["K"]), _fmt(r["r0"]), str(r["n"]), _fmt(r["lambda"]),
                  _fmt(r["lambda_numeric"]), _fmt(r["rel_discrepancy"])] for r in rows]
        header = ["K", "r0", "n", "lambda", "lambda_numeric", "rel_discrepancy"]
        _write_text(_csv(header, cells), args.output)
    else:
        config = {"K": ks, "r_min": args.r_min, "r_max": args.r_max,
                  "steps": args.steps, "modes": args.modes, "tolerance": args.tolerance}
        out_rows = [{"K": _round12(r["K"]), "r0": _round12(r["r0"]), "n": r["n"],
                     "lambda": _round12(r["lambda"]),
                     "lambda_numeric": _round12(r["lambda_numeric"]),
                     "rel_discrepancy": _round12(r["rel_discrepancy"])} for r in rows]
        _write_text(_json_doc("sweep", config, out_rows), args.output)
    if args.figure:
        from .plotting import save_sweep_figure

        save_sweep_figure(rows, args.figure)
    return EXIT_OK


# ----------------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------------

def _add_output_options(p, figure: bool = False) -> None:
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    if figure:
        p.add_argument("--figure", default=None, help="also render a figure to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geoball",
        description="Dirichlet spectra of geodesic balls and momentum-uncertainty bounds",
    )
    parser.add_argument("--version", action="version", version=f"geoball {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigen", help="closed-form vs shooting eigenvalue for one mode")
    p.add_argument("--curvature", "-K", type=float, required=True)
    p.add_argument("--radius", "-r", type=float, required=True)
    p.add_argument("-n", "--mode", dest="n", type=int, default=1)
    p.add_argument("--tolerance", type=float, default=1.0e-10)
    _add_output_options(p, figure=True)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("bound", help="sigma_p lower-bound table over a radius range")
    p.add_argument("--curvature", "-K", action="append",
                   help="curvature value(s); repeatable or comma-separated")
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--hbar-mode", choices=["natural", "si"], default="natural")
    _add_output_options(p, figure=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("volume", help="ball volume, closed form vs quadrature")
    p.add_argument("--curvature", "-K", type=float, required=True)
    p.add_argument("--radius", "-r", type=float, required=True)
    _add_output_options(p)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("verify", help="run the full cross-check battery")
    p.add_argument("--tolerance", type=float, default=1.0e-8)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=1000)
    _add_output_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trial", help="one seeded random variational trial state")
    p.add_argument("--curvature", "-K", type=float, required=True)
    p.add_argument("--radius", "-r", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--degree", type=int, default=6)
    _add_output_options(p)
    p.set_defaults(func=cmd_trial)

    p = sub.add_parser("schwarzschild", help="Planck-length and horizon-radius report")
    p.add_argument("--hbar-mode", choices=["natural", "si"], default="natural")
    p.add_argument("--rs", type=float, default=1.0, help="Schwarzschild radius")
    p.add_argument("--tolerance", type=float, default=1.0e-6)
    _add_output_options(p)
    p.set_defaults(func=cmd_schwarzschild)

    p = sub.add_parser("sweep", help="eigenvalue grid sweep, closed form vs shooting")
    p.add_argument("--curvature", "-K", action="append")
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=5)
    p.add_argument("--modes", type=int, default=3)
    p.add_argument("--tolerance", type=float, default=1.0e-10)
    _add_output_options(p, figure=True)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"geoball: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"geoball: convergence failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
