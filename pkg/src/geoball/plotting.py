"""Matplotlib rendering of bound tables and radial mode profiles to files."""

from __future__ import annotations

import math

import numpy as np


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_bound_figure(table, path, hbar: float = 1.0) -> None:
    """Render sigma_p lower-bound curves versus geodesic radius to a file."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    curvatures = []
    for row in table.rows:
        if row.curvature not in curvatures:
            curvatures.append(row.curvature)
    for K in curvatures:
        rs = [row.radius for row in table.rows if row.curvature == K]
        sigmas = [row.sigma_p_min for row in table.rows if row.curvature == K]
        ax.plot(rs, sigmas, label=f"K = {K:g}")
        if K > 0.0:
            ax.axvline(math.pi / (2.0 * math.sqrt(K)), color="black", ls=":",
                       lw=0.8, label=f"hemisphere, K = {K:g}")
    for K, floor in table.asymptotes.items():
        ax.axhline(floor, color="red", ls="--", lw=0.8,
                   label=f"floor sqrt(|K|), K = {K:g}")
    r_all = [row.radius for row in table.rows]
    s_all = [row.sigma_p_min for row in table.rows]
    ax.set_xlim(0.0, max(r_all) * 1.02)
    ax.set_ylim(0.0, np.percentile(s_all, 92) * 1.3)
    ax.set_xlabel("geodesic radius r")
    ax.set_ylabel(f"lower bound of sigma_p  [hbar = {hbar:g}]")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_profile_figure(ball, n, path, shooting_lambda=None) -> None:
    """Render the n-th radial mode profile on [0, r0] to a file."""
    from .spectra import eigenfunction_value, eigenvalue

    plt = _pyplot()
    r = np.linspace(0.0, ball.radius, 512)
    vals = eigenfunction_value(ball, n, r)
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(r, vals, label=f"mode n = {n}")
    ax.axhline(0.0, color="gray", lw=0.6)
    title = f"K = {ball.curvature:g}, r0 = {ball.radius:g}, lambda = {eigenvalue(ball, n):.6g}"
    if shooting_lambda is not None:
        title += f" (shooting {shooting_lambda:.6g})"
    ax.set_title(title, fontsize=9)
    ax.set_xlabel("geodesic radius r")
    ax.set_ylabel("radial profile")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_sweep_figure(rows, path) -> None:
    """Render closed-form vs shooting eigenvalues versus radius to a file."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    series = {}
    for row in rows:
        series.setdefault((row["K"], row["n"]), []).append((row["r0"], row["lambda"], row["lambda_numeric"]))
    for (K, n), pts in sorted(series.items()):
        pts.sort()
        rs = [p[0] for p in pts]
        ax.plot(rs, [p[1] for p in pts], lw=1.0, label=f"K = {K:g}, n = {n}")
        ax.plot(rs, [p[2] for p in pts], ls="none", marker="x", ms=4, color="black")
    ax.set_xlabel("ball radius r0")
    ax.set_ylabel("Dirichlet eigenvalue")
    ax.set_yscale("log")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
