"""Finite torus grids and their matching weight index sets.

Two families of W-invariant finite subgroups of the torus are supported:

``pcheck``
    Gamma = (1/M) P-check / Q-check, of order ``c * M**n``; dual group P / MQ.
``qcheck``
    Gamma = (1/M) Q-check / Q-check, of order ``M**n``; dual group P / MP.

Grid points in the fundamental region are labelled by Kac coordinates: for
each simple factor, nonnegative integers ``s_0, ..., s_n`` with
``s_0 + sum(q_i s_i) = M``; the point is ``sum(s_i coweight_i) / M``.

Weight candidates are the integral points of the dual alcove
``{lam dominant : sum(q'_i lam_i) <= M}`` (``q'`` the marks of the coroot
system), which meets every W-orbit on P / MQ exactly once.  Candidates are
then validated by reducing their orbits modulo MQ (or MP) exactly.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .rootdata import RootSystem, TorusPoint, Weight, center_representatives
from .weyl import _reflect, _reflect_pt, _torus_orbit_size, orbit_int

__all__ = [
    "WeightSetError",
    "GridSpec",
    "WeightIndexSet",
    "build_grid",
    "build_weight_set",
    "weight_set_from_weights",
    "gamma_flavor",
    "enumerate_gamma",
    "is_separated",
]

PCHECK = "pcheck"
QCHECK = "qcheck"
FLAVORS = ("C", "S", "E")


class WeightSetError(RuntimeError):
    """Cardinality or separation validation of a weight set failed."""


def gamma_flavor(name: str) -> str:
    key = str(name).lower().replace("̌", "").replace("-grid", "").replace("_", "")
    if key in ("p", "pcheck", "pc", "coweight"):
        return PCHECK
    if key in ("q", "qcheck", "qc", "coroot"):
        return QCHECK
    raise ValueError(f"unknown grid flavor {name!r}")


def _function_flavor(name: str) -> str:
    f = str(name).upper()
    if f not in FLAVORS:
        raise ValueError(f"unknown function flavor {name!r}")
    return f


def _kac_tuples(marks: Sequence[int], M: int) -> list[tuple[int, ...]]:
    """All ``(s_1..s_n)`` with ``s_i >= 0`` and ``sum(q_i s_i) <= M``."""
    out = []

    def rec(i, budget, acc):
        if i == len(marks):
            out.append(tuple(acc))
            return
        for v in range(budget // marks[i] + 1):
            acc.append(v)
            rec(i + 1, budget - v * marks[i], acc)
            acc.pop()

    rec(0, M, [])
    return out


def _alcove(rs: RootSystem, marks: Sequence[int], M: int) -> list[tuple[int, ...]]:
    per_factor = [_kac_tuples(marks[lo:hi], M) for lo, hi in rs.factors]
    return sorted(tuple(itertools.chain.from_iterable(p)) for p in itertools.product(*per_factor))


def _in_coroot_lattice(rs: RootSystem, s: Sequence[int]) -> bool:
    K, d = rs.pair_int, rs.pair_denom
    return all(sum(K[i][j] * s[j] for j in range(rs.rank)) % d == 0 for i in range(rs.rank))


def _is_interior(rs: RootSystem, s: Sequence[int], M: int, marks=None) -> bool:
    marks = rs.marks if marks is None else marks
    if any(v <= 0 for v in s):
        return False
    return all(sum(marks[i] * s[i] for i in range(lo, hi)) < M for lo, hi in rs.factors)


@dataclass(frozen=True)
class GridSpec:
    """Points of the fundamental region in Gamma, with torus-orbit sizes.

    ``points`` is ordered lexicographically in the Kac coordinates
    ``(s_1, ..., s_n)``.  ``even_points`` lists the region of the even affine
    group: all of ``points`` followed by the images under the first simple
    reflection of the interior points.
    """

    rs: RootSystem
    M: int
    gamma_flavor: str
    points: tuple[TorusPoint, ...]
    orbit_sizes: tuple[int, ...]
    interior: tuple[int, ...]
    even_points: tuple[TorusPoint, ...]
    even_orbit_sizes: tuple[int, ...]
    gamma_order: int
    numerators: tuple[tuple[int, ...], ...] = field(repr=False)
    even_numerators: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def interior_points(self) -> tuple[TorusPoint, ...]:
        return tuple(self.points[j] for j in self.interior)

    def flavor_points(self, flavor: str) -> tuple[TorusPoint, ...]:
        f = _function_flavor(flavor)
        if f == "C":
            return self.points
        if f == "S":
            return self.interior_points
        return self.even_points

    def flavor_numerators(self, flavor: str) -> tuple[tuple[int, ...], ...]:
        f = _function_flavor(flavor)
        if f == "C":
            return self.numerators
        if f == "S":
            return tuple(self.numerators[j] for j in self.interior)
        return self.even_numerators

    def flavor_weights(self, flavor: str) -> tuple[int, ...]:
        """Per-point weights of the fundamental-domain sum for each family."""
        f = _function_flavor(flavor)
        if f == "C":
            return self.orbit_sizes
        if f == "S":
            return tuple(1 for _ in self.interior)
        return self.even_orbit_sizes

    def index_of(self, x: TorusPoint, flavor: str = "C") -> int:
        try:
            return self.flavor_points(flavor).index(x)
        except ValueError:
            raise KeyError(f"{x!r} is not a grid point") from None

    def to_json(self) -> dict:
        return {
            "group": self.rs.name,
            "M": self.M,
            "gamma": self.gamma_flavor,
            "gamma_order": self.gamma_order,
            "points": [[str(c) for c in p] for p in self.points],
            "orbit_sizes": list(self.orbit_sizes),
            "interior": list(self.interior),
            "even_points": [[str(c) for c in p] for p in self.even_points],
            "even_orbit_sizes": list(self.even_orbit_sizes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def build_grid(rs: RootSystem, M: int, gamma: str = PCHECK) -> GridSpec:
    """Enumerate the fundamental region inside Gamma."""
    if int(M) != M or M < 1:
        raise ValueError("M must be a positive integer")
    M = int(M)
    gamma = gamma_flavor(gamma)
    tuples = _alcove(rs, rs.marks, M)
    if gamma == QCHECK:
        tuples = [s for s in tuples if _in_coroot_lattice(rs, s)]
    sizes = tuple(_torus_orbit_size(rs, s, M, False) for s in tuples)
    interior = tuple(j for j, s in enumerate(tuples) if _is_interior(rs, s, M))

    even_num = list(tuples) + [_reflect_pt(rs.cartan, tuples[j], 0) for j in interior]
    even_sizes = tuple(_torus_orbit_size(rs, s, M, True) for s in even_num)

    order = (rs.center_order if gamma == PCHECK else 1) * M ** rs.rank
    if sum(sizes) != order or sum(even_sizes) != order:
        raise RuntimeError(f"grid for {rs.name}, M={M} does not partition Gamma")

    def pts(nums):
        return tuple(TorusPoint(rs, tuple(Fraction(v, M) for v in s)) for s in nums)

    return GridSpec(rs, M, gamma, pts(tuples), sizes, interior, pts(even_num), even_sizes,
                    order, tuple(tuples), tuple(even_num))


def enumerate_gamma(rs: RootSystem, M: int, gamma: str = PCHECK) -> list[tuple[int, ...]]:
    """Every element of Gamma, as coweight numerators over ``M``.

    Built as coset representatives of the centre times (1/M) Q-check / Q-check.
    """
    gamma = gamma_flavor(gamma)
    n = rs.rank
    shifts = [tuple(int(c) for c in z) for z in center_representatives(rs)] if gamma == PCHECK \
        else [(0,) * n]
    out = []
    for z in shifts:
        for t in itertools.product(range(M), repeat=n):
            out.append(tuple(z[k] + sum(t[i] * rs.cartan[i][k] for i in range(n))
                             for k in range(n)))
    return out


# ---------------------------------------------------------------------------
# weight sets
# ---------------------------------------------------------------------------

def _lattice_key(rs: RootSystem, lam: Sequence[int], M: int, gamma: str) -> tuple:
    """Label of ``lam`` in P / MQ (pcheck) or P / MP (qcheck)."""
    if gamma == QCHECK:
        return tuple(v % M for v in lam)
    # root-lattice coordinates A^-1 lam, scaled to integers
    K, d = rs.pair_int, rs.pair_denom
    mod = d * M
    return tuple(sum(K[k][i] * lam[k] for k in range(rs.rank)) % mod for i in range(rs.rank))


def _reduced_orbit(rs, lam, M, gamma, flavor) -> dict:
    """Signed multiplicity of each class of the orbit in the dual group of Gamma."""
    group = "even" if flavor == "E" else "full"
    dom, elems = orbit_int(rs, lam, group)
    sums: dict = {}
    for w, s in elems:
        key = _lattice_key(rs, w, M, gamma)
        sums[key] = sums.get(key, 0) + (s if flavor == "S" else 1)
    return sums


def _signature(sums: dict) -> frozenset:
    # the orbit of lam in the dual group; two weights restrict to proportional
    # functions on Gamma exactly when these agree
    return frozenset(sums)


@dataclass(frozen=True)
class WeightIndexSet:
    """Weights indexing a discrete transform on a grid.

    ``norms[k]`` is the exact diagonal Gram entry of ``weights[k]`` predicted
    by orbit combinatorics; it equals ``|W lam| |Gamma|`` (C),
    ``|Gamma|`` (S) or ``|W^e lam| |Gamma|`` (E) whenever the orbit of the
    weight does not alias with itself on Gamma (``self_separated``).
    """

    rs: RootSystem
    M: int
    gamma_flavor: str
    flavor: str
    weights: tuple[Weight, ...]
    orbit_sizes: tuple[int, ...]
    norms: tuple[Fraction, ...]
    self_separated: tuple[bool, ...]
    target: int
    separated: bool = True

    @property
    def complete(self) -> bool:
        return len(self.weights) == self.target

    @property
    def gamma_order(self) -> int:
        return (self.rs.center_order if self.gamma_flavor == PCHECK else 1) * self.M ** self.rs.rank

    def __len__(self):
        return len(self.weights)

    def index(self, lam) -> int:
        if not isinstance(lam, Weight):
            lam = Weight(self.rs, lam)
        return self.weights.index(lam)


def _describe(rs, M, gamma, flavor, lams):
    """Orbit sizes, exact norms, self-separation and pairwise separation."""
    order = (rs.center_order if gamma == PCHECK else 1) * M ** rs.rank
    sizes, norms, selfsep = [], [], []
    owner: dict = {}
    separated = True
    for idx, lam in enumerate(lams):
        group = "even" if flavor == "E" else "full"
        sizes.append(len(orbit_int(rs, lam, group)[1]))
        sums = _reduced_orbit(rs, lam, M, gamma, flavor)
        sq = sum(v * v for v in sums.values())
        norm = Fraction(order * sq)
        if flavor == "S":
            norm /= rs.weyl_order
        norms.append(norm)
        selfsep.append(all(abs(v) == 1 for v in sums.values()) and len(sums) == sizes[-1])
        for key in sums:
            if owner.setdefault(key, idx) != idx:
                separated = False
    return tuple(sizes), tuple(norms), tuple(selfsep), separated


def build_weight_set(rs: RootSystem, M: int, gamma: str = PCHECK,
                     flavor: str = "C") -> WeightIndexSet:
    """Weights whose orbit functions form a basis of functions on the grid.

    C uses dominant weights, S strictly dominant ones and E representatives
    in ``P+ u r_1 P+``.  One weight is kept per distinct restriction to
    Gamma; S-weights whose function vanishes identically on Gamma are
    dropped.  For ``pcheck`` grids the count must equal the matching number of
    grid points, otherwise :class:`WeightSetError` is raised; for ``qcheck``
    grids the achieved count is reported through ``complete``.
    """
    gamma = gamma_flavor(gamma)
    flavor = _function_flavor(flavor)
    M = int(M)
    alcove = _alcove(rs, rs.dual_marks, M)
    if flavor == "C":
        cands = alcove
    elif flavor == "S":
        cands = [lam for lam in alcove if all(v > 0 for v in lam)]
    else:
        regular = [lam for lam in alcove if all(v > 0 for v in lam)]
        cands = alcove + sorted(_reflect(rs.cartan, lam, 0) for lam in regular)

    chosen = []
    seen = set()
    for lam in cands:
        sums = _reduced_orbit(rs, lam, M, gamma, flavor)
        sig = _signature(sums)
        if sig in seen or not any(sums.values()):
            continue
        seen.add(sig)
        chosen.append(lam)

    grid = build_grid(rs, M, gamma)
    target = len(grid.flavor_points(flavor))
    sizes, norms, selfsep, separated = _describe(rs, M, gamma, flavor, chosen)
    ws = WeightIndexSet(rs, M, gamma, flavor, tuple(Weight(rs, lam) for lam in chosen),
                        sizes, norms, selfsep, target, separated)
    if not separated:
        raise WeightSetError(f"{flavor} weights for {rs.name}, M={M} are not separated")
    if gamma == PCHECK and not ws.complete:
        raise WeightSetError(
            f"{flavor} weight set for {rs.name}, M={M} has {len(chosen)} weights, "
            f"expected {target}")
    return ws


def weight_set_from_weights(rs: RootSystem, M: int, gamma: str, flavor: str,
                            weights: Iterable) -> WeightIndexSet:
    """Wrap an arbitrary list of weights; separation is recorded, not enforced."""
    gamma = gamma_flavor(gamma)
    flavor = _function_flavor(flavor)
    lams = [tuple(int(v) for v in (w.coords if isinstance(w, Weight) else w)) for w in weights]
    sizes, norms, selfsep, separated = _describe(rs, int(M), gamma, flavor, lams)
    target = len(build_grid(rs, M, gamma).flavor_points(flavor))
    return WeightIndexSet(rs, int(M), gamma, flavor, tuple(Weight(rs, lam) for lam in lams),
                          sizes, norms, selfsep, target, separated)


def is_separated(rs: RootSystem, M: int, gamma: str, flavor: str, weights: Iterable) -> bool:
    """True iff no two listed weights have orbit elements that agree on Gamma."""
    return weight_set_from_weights(rs, M, gamma, flavor, weights).separated
