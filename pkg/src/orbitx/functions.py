"""C-, S- and E-orbit functions evaluated at exact rational torus points.

Phases ``<lam', x>`` are computed as exact integers modulo their common
denominator before exponentiation, so large weights lose no accuracy.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from .grid import GridSpec, _function_flavor
from .rootdata import RootSystem, TorusPoint, Weight
from .weyl import _dominant, orbit_int

__all__ = [
    "NonRegularWeight",
    "eval_C",
    "eval_S",
    "eval_E",
    "evaluate",
    "eval_on_grid",
    "function_matrix",
    "max_workers",
]

_INT64_SAFE = 2 ** 62


class NonRegularWeight(ValueError):
    """S-functions need a weight with trivial stabilizer in W."""


def max_workers() -> int:
    """Thread cap from ``ORBITX_THREADS`` (default 1: deterministic serial path)."""
    try:
        return max(1, int(os.environ.get("ORBITX_THREADS", "1")))
    except ValueError:
        return 1


def _points_to_int(points: Sequence) -> tuple[np.ndarray, int]:
    """Common-denominator integer form of a list of rational coordinate tuples."""
    L = math.lcm(1, *(c.denominator for p in points for c in p))
    S = [[int(c * L) for c in p] for p in points]
    return S, L


def _phases(rs: RootSystem, weights: Sequence[Sequence[int]], S, L: int) -> np.ndarray:
    """``exp(2 pi i <w, x>)`` for every weight (rows) and point (columns)."""
    mod = rs.pair_denom * L
    n = rs.rank
    if not len(S) or not len(weights):
        return np.zeros((len(weights), len(S)), dtype=complex)
    wmax = max(abs(v) for w in weights for v in w) or 1
    smax = max(abs(v) for p in S for v in p) or 1
    kmax = max(abs(v) for row in rs.pair_int for v in row) or 1
    if n * n * wmax * kmax * smax < _INT64_SAFE:
        W = np.asarray(weights, dtype=np.int64)
        K = np.asarray(rs.pair_int, dtype=np.int64)
        X = np.asarray(S, dtype=np.int64)
        num = (W @ K @ X.T) % mod
        frac = num / mod
    else:
        W = np.asarray(weights, dtype=object)
        K = np.asarray(rs.pair_int, dtype=object)
        X = np.asarray(S, dtype=object)
        num = (W @ K @ X.T) % mod
        frac = np.vectorize(lambda v: v / mod, otypes=[float])(num)
    return np.exp(2j * np.pi * frac)


def _orbit_terms(flavor: str, rs: RootSystem, lam: Sequence[int]):
    """Orbit weights and coefficients of the exponential sum for ``F_lam``."""
    lam = tuple(int(v) for v in lam)
    if flavor == "C":
        _, elems = orbit_int(rs, lam, "full")
        return [w for w, _ in elems], np.ones(len(elems))
    if flavor == "S":
        dom, parity = _dominant(rs.cartan, lam)
        if any(v == 0 for v in dom):
            raise NonRegularWeight(f"S-function of non-regular weight {lam} on {rs.name}")
        _, elems = orbit_int(rs, dom, "full")
        sign = -1 if parity else 1
        return [w for w, _ in elems], sign * np.array([s for _, s in elems], dtype=float)
    _, elems = orbit_int(rs, lam, "even")
    return [w for w, _ in elems], np.ones(len(elems))


def _values(flavor, rs, lam, S, L) -> np.ndarray:
    ws, coef = _orbit_terms(flavor, rs, lam)
    return coef @ _phases(rs, ws, S, L)


def _as_weight_tuple(lam) -> tuple:
    if isinstance(lam, Weight):
        return lam.as_ints()
    return tuple(int(v) for v in lam)


def evaluate(flavor: str, lam: Weight, x: TorusPoint) -> complex:
    """Value of the C-, S- or E-function of ``lam`` at ``x``."""
    flavor = _function_flavor(flavor)
    if lam.rs != x.rs:
        raise ValueError("mismatched root systems")
    S, L = _points_to_int([x.coords])
    return complex(_values(flavor, lam.rs, lam.as_ints(), S, L)[0])


def eval_C(lam: Weight, x: TorusPoint) -> complex:
    """Sum of ``exp(2 pi i <lam', x>)`` over the W-orbit of ``lam``."""
    return evaluate("C", lam, x)


def eval_S(lam: Weight, x: TorusPoint) -> complex:
    """Alternating orbit sum; raises :class:`NonRegularWeight` on walls."""
    return evaluate("S", lam, x)


def eval_E(lam: Weight, x: TorusPoint) -> complex:
    """Orbit sum over the even subgroup W^e."""
    return evaluate("E", lam, x)


def function_matrix(flavor: str, rs: RootSystem, weights, points) -> np.ndarray:
    """Matrix ``F[k, j] = F_{weights[k]}(points[j])``.

    ``points`` may be :class:`TorusPoint` objects or rational coordinate
    tuples.  Rows are computed in parallel when ``ORBITX_THREADS > 1``;
    the result does not depend on the thread count.
    """
    flavor = _function_flavor(flavor)
    lams = [_as_weight_tuple(w) for w in weights]
    S, L = _points_to_int([getattr(p, "coords", p) for p in points])
    if not lams:
        return np.zeros((0, len(S)), dtype=complex)
    if not len(S):
        return np.zeros((len(lams), 0), dtype=complex)

    def row(lam):
        return _values(flavor, rs, lam, S, L)

    workers = max_workers()
    if workers > 1 and len(lams) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, lams))
    else:
        rows = [row(lam) for lam in lams]
    return np.vstack(rows)


def eval_on_grid(flavor: str, lam: Weight, grid: GridSpec) -> np.ndarray:
    """Samples of ``F_lam`` on the flavor's point list of ``grid``.

    C uses every grid point, S only the interior points and E the points of
    the doubled region.
    """
    flavor = _function_flavor(flavor)
    nums = grid.flavor_numerators(flavor)
    if not nums:
        if flavor == "S":
            _orbit_terms("S", grid.rs, lam.as_ints())  # still reject non-regular weights
        return np.zeros(0, dtype=complex)
    return _values(flavor, grid.rs, lam.as_ints(), nums, grid.M)
