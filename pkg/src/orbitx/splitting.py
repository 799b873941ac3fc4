"""Central splitting of sampled functions into congruence-class components.

For a function ``f`` on the fundamental region and centre elements ``z``,

    f_k(x) = (1/c) sum_z conj(chi_k(z)) f(x + z),

where each ``x + z`` is carried back into the region by the affine Weyl
group.  C-expansions are W_aff-invariant, so the reduced value is used as is;
S-expansions are skew-invariant and pick up the sign of the affine word;
E-expansions are read on the doubled region of the even affine group.

Class labels follow the ordered class representatives: ``0`` and the
fundamental weights whose coroot-system mark is 1 (lexicographic order,
product over simple factors).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .grid import GridSpec, _alcove, _function_flavor
from .rootdata import RootSystem, TorusPoint, Weight, center_representatives, pairing
from .weyl import AffineMap, _reflect_pt, affine_reduce, affine_reduce_map

__all__ = [
    "CenterCharacterTable",
    "character_table",
    "congruence_class",
    "split_samples",
    "SplitTerm",
    "SplitComponent",
    "splitting_formula",
]


def _frac1(v: Fraction) -> Fraction:
    return v - (v.numerator // v.denominator)


@dataclass(frozen=True)
class CenterCharacterTable:
    """``chi_k(z_l) = exp(2 pi i phases[k][l])`` with exact rational phases."""

    rs: RootSystem
    centers: tuple[TorusPoint, ...]
    class_reps: tuple[Weight, ...]
    phases: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.centers)

    @property
    def matrix(self) -> np.ndarray:
        ph = np.array([[float(p) for p in row] for row in self.phases])
        return np.exp(2j * np.pi * ph).reshape(self.order, self.order)


def character_table(rs: RootSystem) -> CenterCharacterTable:
    centers = tuple(center_representatives(rs))
    reps = tuple(Weight(rs, lam) for lam in _alcove(rs, rs.dual_marks, 1))
    assert len(reps) == len(centers) == rs.center_order
    phases = tuple(tuple(_frac1(pairing(lam, z)) for z in centers) for lam in reps)
    return CenterCharacterTable(rs, centers, reps, phases)


def congruence_class(lam: Weight, table: CenterCharacterTable | None = None) -> int:
    """Index of the centre character ``z -> exp(2 pi i <lam, z>)``."""
    if not lam.is_integral:
        raise ValueError("congruence class needs an integral weight")
    table = table or character_table(lam.rs)
    row = tuple(_frac1(pairing(lam, z)) for z in table.centers)
    return table.phases.index(row)


def _domain(grid: GridSpec, flavor: str, n: int) -> tuple:
    if flavor == "E":
        return grid.even_points
    if flavor == "S" and n == len(grid.interior) and n != len(grid.points):
        return grid.interior_points
    return grid.points


def _translation_table(grid: GridSpec, flavor: str, pts, table: CenterCharacterTable):
    """Index and sign of the sample realising ``f(x + z)`` for every (x, z)."""
    rs = grid.rs
    where = {p.coords: j for j, p in enumerate(pts)}
    idx = np.zeros((len(pts), table.order), dtype=int)
    sign = np.ones((len(pts), table.order))
    for j, x in enumerate(pts):
        for l, z in enumerate(table.centers):
            y, parity = affine_reduce(x + z)
            s = 1.0
            if flavor == "S" and parity:
                s = -1.0
            elif flavor == "E" and parity and y.is_interior():
                y = TorusPoint(rs, _reflect_pt(rs.cartan, y.coords, 0))
            if y.coords not in where:
                raise KeyError(f"{x!r} + {z!r} reduces to {y!r}, which is not sampled")
            idx[j, l] = where[y.coords]
            sign[j, l] = s
    return idx, sign


def split_samples(samples, grid: GridSpec, flavor: str = "C") -> list[np.ndarray]:
    """Split samples into ``c`` congruence-class components.

    ``samples`` is indexed like ``grid.points`` (``grid.interior_points`` is
    also accepted for S, ``grid.even_points`` is required for E).  The
    components sum to the input exactly.
    """
    flavor = _function_flavor(flavor)
    f = np.asarray(samples, dtype=complex).reshape(-1)
    pts = _domain(grid, flavor, len(f))
    if len(f) != len(pts):
        raise ValueError(f"{len(f)} samples for {len(pts)} {flavor}-grid points")
    table = character_table(grid.rs)
    idx, sign = _translation_table(grid, flavor, pts, table)
    shifted = f[idx] * sign                       # shifted[j, l] = f(x_j + z_l)
    chi = table.matrix                            # chi[k, l]
    comps = (shifted @ chi.conj().T) / table.order   # [j, k]
    return [comps[:, k].copy() for k in range(table.order)]


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

_DEFAULT_VARS = {1: ("x",), 2: ("x1", "x2")}


def _linear_form(coeffs: Sequence[Fraction], const: Fraction, names: Sequence[str]) -> str:
    parts = []
    if const:
        parts.append(str(const))
    for c, v in zip(coeffs, names):
        if not c:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        sgn = "-" if c < 0 else "+"
        parts.append(f"{sgn}{mag}{v}")
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s


@dataclass(frozen=True)
class SplitTerm:
    """One term ``scale * exp(2 pi i phase) * f(amap(x))``."""

    scale: Fraction
    phase: Fraction
    amap: AffineMap

    @property
    def coefficient(self) -> complex:
        return complex(float(self.scale) * np.exp(2j * np.pi * float(self.phase)))

    def render(self, names: Sequence[str]) -> str:
        args = ", ".join(_linear_form(row, off, names)
                         for row, off in zip(self.amap.matrix, self.amap.offset))
        p = self.phase
        if p == 0:
            factor = ""
        elif p == Fraction(1, 2):
            factor = "-"
        else:
            q = p if p <= Fraction(1, 2) else p - 1
            sgn = "-" if q < 0 else ""
            num = abs(q.numerator)
            factor = f"e^({sgn}{num if num != 1 else ''}2πi/{q.denominator})*"
        return f"{factor}f({args})"


@dataclass(frozen=True)
class SplitComponent:
    class_index: int
    class_rep: Weight
    terms: tuple[SplitTerm, ...]

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or _DEFAULT_VARS.get(self.class_rep.rs.rank) or tuple(
            f"x{i + 1}" for i in range(self.class_rep.rs.rank))
        body = " + ".join(t.render(names) for t in self.terms).replace("+ -", "- ")
        scale = self.terms[0].scale
        return f"f_{self.class_index}({', '.join(names)}) = {scale}*{{{body}}}"


def _generic_point(rs: RootSystem) -> TorusPoint:
    coords = [Fraction(0)] * rs.rank
    for lo, hi in rs.factors:
        k = hi - lo + 1
        for i in range(lo, hi):
            coords[i] = Fraction(1, k * rs.marks[i])
    return TorusPoint(rs, coords)


def splitting_formula(rs: RootSystem) -> list[SplitComponent]:
    """Closed-form central splitting with explicit arguments inside the region.

    The map ``x -> reduce(x + z)`` is one fixed affine transformation on the
    whole region; it is recovered exactly by reducing a generic interior
    point while recording the affine word.
    """
    table = character_table(rs)
    x0 = _generic_point(rs)
    maps = []
    for z in table.centers:
        _, _, amap = affine_reduce_map(x0 + z)
        # amap acts on x + z; fold the shift into the offset
        shift = tuple(sum((a * b for a, b in zip(row, z.coords)), Fraction(0))
                      for row in amap.matrix)
        maps.append(AffineMap(amap.matrix, tuple(o + s for o, s in zip(amap.offset, shift))))
    scale = Fraction(1, table.order)
    comps = []
    for k, rep in enumerate(table.class_reps):
        terms = tuple(SplitTerm(scale, _frac1(-table.phases[k][l]), maps[l])
                      for l in range(table.order))
        comps.append(SplitComponent(k, rep, terms))
    return comps
