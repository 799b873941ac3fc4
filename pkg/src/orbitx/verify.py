"""Invariant suite for one (group, M, Gamma, flavor) configuration."""
from __future__ import annotations

import numpy as np

from .functions import function_matrix
from .grid import build_grid, build_weight_set
from .rootdata import RootSystem
from .transforms import forward, gram_discrete, gram_full_group, inverse, SpectralVector

BRUTE_FORCE_LIMIT = 4096


def run_checks(rs: RootSystem, M: int, gamma: str = "pcheck", flavor: str = "C",
               tol: float | None = None, trials: int = 20, seed: int = 0) -> dict:
    """Run the discrete-transform invariants and report each as pass/fail.

    ``tol`` is relative to ``|Gamma|`` for Gram entries (default ``1e-9``);
    round trips use ``1e-10`` absolute.
    """
    tol = 1e-9 if tol is None else float(tol)
    grid = build_grid(rs, M, gamma)
    ws = build_weight_set(rs, M, gamma, flavor)
    order = grid.gamma_order
    checks: dict = {}

    checks["partition"] = {
        "value": int(sum(grid.orbit_sizes)), "expected": order,
        "ok": sum(grid.orbit_sizes) == order and sum(grid.even_orbit_sizes) == order,
    }
    checks["cardinality"] = {"weights": len(ws), "points": ws.target, "ok": ws.complete}

    G = gram_discrete(flavor, grid, ws)
    norms = np.array([float(v) for v in ws.norms])
    off = float(np.abs(G - np.diag(np.diag(G))).max()) if len(G) else 0.0
    derr = float(np.abs(np.diag(G) - norms).max()) if len(G) else 0.0
    checks["gram"] = {"max_offdiag": off, "max_diag_error": derr,
                      "ok": off <= tol * order and derr <= tol * order}

    if order <= BRUTE_FORCE_LIMIT:
        H = gram_full_group(flavor, grid, ws)
        if flavor == "S":
            H = H / rs.weyl_order
        err = float(np.abs(H - G).max() / max(1.0, np.abs(H).max())) if len(G) else 0.0
        checks["full_group"] = {"max_rel_error": err, "ok": err <= 1e-10}

    rng = np.random.default_rng(seed)
    n = len(grid.flavor_points(flavor))
    worst_s = worst_a = 0.0
    for _ in range(trials):
        f = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        back = inverse(forward(flavor, grid, ws, f), grid)
        worst_s = max(worst_s, float(np.abs(back - f).max()) if n else 0.0)
        a = rng.standard_normal(len(ws)) + 1j * rng.standard_normal(len(ws))
        again = forward(flavor, grid, ws, inverse(SpectralVector(flavor, ws, a), grid)).coeffs
        worst_a = max(worst_a, float(np.abs(again - a).max()) if len(ws) else 0.0)
    checks["round_trip"] = {"samples": worst_s, "spectrum": worst_a,
                            "ok": worst_s <= 1e-10 and worst_a <= 1e-10}

    if flavor == "S":
        boundary = [p for j, p in enumerate(grid.points) if j not in set(grid.interior)]
        vals = function_matrix("S", rs, ws.weights, boundary)
        worst = float(np.abs(vals).max()) if vals.size else 0.0
        checks["boundary_vanishing"] = {"max_abs": worst, "ok": worst <= 1e-12}

    return {
        "group": rs.name, "M": M, "gamma": grid.gamma_flavor, "flavor": flavor,
        "gamma_order": order, "checks": checks,
        "ok": all(c["ok"] for c in checks.values()),
    }
