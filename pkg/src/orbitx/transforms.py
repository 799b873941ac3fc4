"""Discrete C-, S-, E-transforms on finite torus grids.

Normalisation: synthesis is the plain expansion

    f(u_j) = sum_k a_k F_k(u_j)

and analysis inverts it through the weighted discrete orthogonality,

    a_k = (1 / N_k) sum_j w_j f(u_j) conj(F_k(u_j)),

with point weights ``w_j = |W u_j|`` (C), ``1`` on interior points (S) and
``|W^e u_j|`` (E), and ``N_k`` the exact Gram diagonal from
:class:`~orbitx.grid.WeightIndexSet`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .functions import _orbit_terms, _points_to_int, _values, function_matrix
from .grid import (GridSpec, WeightIndexSet, WeightSetError, _function_flavor, build_grid,
                   enumerate_gamma)
from .rootdata import RootSystem, TorusPoint, Weight
from .weyl import _dominant, orbit_int

__all__ = [
    "DimensionMismatch",
    "SpectralVector",
    "forward",
    "inverse",
    "interpolate",
    "gram_discrete",
    "gram_full_group",
    "continuous_orthogonality",
    "synthesis_matrix",
]


class DimensionMismatch(ValueError):
    """Sample or coefficient vector of the wrong length for the grid/weights."""


@dataclass(frozen=True, eq=False)
class SpectralVector:
    """Expansion coefficients of a sampled function over a weight set."""

    flavor: str
    weight_set: WeightIndexSet
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex).reshape(-1)
        if len(coeffs) != len(self.weight_set):
            raise DimensionMismatch(
                f"{len(coeffs)} coefficients for {len(self.weight_set)} weights")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def rs(self) -> RootSystem:
        return self.weight_set.rs

    def to_json(self) -> dict:
        ws = self.weight_set
        return {
            "flavor": self.flavor,
            "group": ws.rs.name,
            "M": ws.M,
            "gamma": ws.gamma_flavor,
            "weights": [list(w.as_ints()) for w in ws.weights],
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _check_pair(grid: GridSpec, ws: WeightIndexSet):
    if grid.rs != ws.rs or grid.M != ws.M or grid.gamma_flavor != ws.gamma_flavor:
        raise ValueError("grid and weight set were built for different configurations")


@lru_cache(maxsize=128)
def _synthesis_matrix(ws: WeightIndexSet, grid: GridSpec) -> np.ndarray:
    F = function_matrix(ws.flavor, ws.rs, ws.weights, grid.flavor_points(ws.flavor))
    F.setflags(write=False)
    return F


def synthesis_matrix(weight_set: WeightIndexSet, grid: GridSpec) -> np.ndarray:
    """``F[k, j]`` = value of the k-th orbit function at the j-th flavor point."""
    _check_pair(grid, weight_set)
    return _synthesis_matrix(weight_set, grid)


def gram_discrete(flavor: str, grid: GridSpec, weight_set: WeightIndexSet) -> np.ndarray:
    """Weighted Gram matrix ``sum_j w_j F_k(u_j) conj(F_l(u_j))`` over the grid."""
    flavor = _function_flavor(flavor)
    if flavor != weight_set.flavor:
        raise ValueError(f"weight set is for {weight_set.flavor}, not {flavor}")
    F = synthesis_matrix(weight_set, grid)
    w = np.asarray(grid.flavor_weights(flavor), dtype=float)
    return (F * w) @ F.conj().T


def gram_full_group(flavor: str, grid: GridSpec, weight_set: WeightIndexSet) -> np.ndarray:
    """Unweighted Gram matrix summed over every element of Gamma."""
    flavor = _function_flavor(flavor)
    pts = enumerate_gamma(grid.rs, grid.M, grid.gamma_flavor)
    F = function_matrix(flavor, grid.rs, weight_set.weights,
                        [tuple(Fraction(v, grid.M) for v in p) for p in pts])
    return F @ F.conj().T


def forward(flavor: str, grid: GridSpec, weight_set: WeightIndexSet, samples) -> SpectralVector:
    """Expansion coefficients of ``samples`` over ``weight_set``.

    ``samples`` follows the flavor's point order (see
    :meth:`GridSpec.flavor_points`).  For S a full-grid vector is also
    accepted; its boundary entries are ignored.
    """
    flavor = _function_flavor(flavor)
    if flavor != weight_set.flavor:
        raise ValueError(f"weight set is for {weight_set.flavor}, not {flavor}")
    if not weight_set.separated:
        raise WeightSetError("weight set does not satisfy the separation condition")
    f = np.asarray(samples, dtype=complex).reshape(-1)
    if flavor == "S" and len(f) == len(grid.points) != len(grid.interior):
        f = f[list(grid.interior)]
    npts = len(grid.flavor_points(flavor))
    if len(f) != npts:
        raise DimensionMismatch(f"{len(f)} samples for {npts} {flavor}-grid points")
    F = synthesis_matrix(weight_set, grid)
    w = np.asarray(grid.flavor_weights(flavor), dtype=float)
    norms = np.array([float(v) for v in weight_set.norms])
    coeffs = (F.conj() @ (w * f)) / norms if len(norms) else np.zeros(0, dtype=complex)
    return SpectralVector(flavor, weight_set, coeffs)


def inverse(spectral: SpectralVector, grid: GridSpec) -> np.ndarray:
    """Synthesize samples on the flavor's point list from coefficients."""
    F = synthesis_matrix(spectral.weight_set, grid)
    if len(spectral.coeffs) != F.shape[0]:
        raise DimensionMismatch("coefficient count does not match the weight set")
    return spectral.coeffs @ F


def interpolate(spectral: SpectralVector, x) -> complex | np.ndarray:
    """Evaluate the expansion at one torus point or a list of them."""
    single = isinstance(x, TorusPoint)
    pts = [x] if single else list(x)
    F = function_matrix(spectral.flavor, spectral.rs, spectral.weight_set.weights, pts)
    vals = spectral.coeffs @ F
    return complex(vals[0]) if single else vals


def continuous_orthogonality(flavor: str, lam: Weight, mu: Weight) -> int:
    """Exact torus integral of ``F_lam conj(F_mu)`` by matching orbit exponentials.

    Each pair of equal exponentials integrates to 1 and every other pair to
    0, so the integral is a signed count of common orbit elements.
    """
    flavor = _function_flavor(flavor)
    if lam.rs != mu.rs:
        raise ValueError("mismatched root systems")
    rs = lam.rs
    a_w, a_c = _orbit_terms(flavor, rs, lam.as_ints())
    b_w, b_c = _orbit_terms(flavor, rs, mu.as_ints())
    b = {w: int(c) for w, c in zip(b_w, b_c)}
    return sum(int(c) * b[w] for w, c in zip(a_w, a_c) if w in b)
