"""Weyl group actions on weights and torus points.

Group elements are never materialised.  Orbits are generated by closure under
simple reflections while tracking only the parity of the word length, which
is all that the sign ``(-1)^l(w)`` needs.

Indices of simple reflections are 0-based throughout the package.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .rootdata import RootSystem, TorusPoint, Weight

__all__ = [
    "SignedOrbit",
    "simple_reflection",
    "reflect_point",
    "orbit",
    "dominant_rep",
    "even_rep",
    "stabilizer_order",
    "affine_reduce",
    "AffineMap",
    "affine_reduce_map",
    "torus_orbit_size",
]

FULL = "full"
EVEN = "even"


def _flavor(flavor: str) -> str:
    f = str(flavor).lower().replace("-w", "")
    if f not in (FULL, EVEN):
        raise ValueError(f"unknown group flavor {flavor!r}")
    return f


# ---------------------------------------------------------------------------
# integer kernels
# ---------------------------------------------------------------------------

def _reflect(cartan, lam: Sequence[int], i: int) -> tuple:
    li = lam[i]
    return tuple(lam[k] - li * cartan[k][i] for k in range(len(lam)))


def _reflect_pt(cartan, x: Sequence, i: int) -> tuple:
    xi = x[i]
    row = cartan[i]
    return tuple(x[k] - xi * row[k] for k in range(len(x)))


def _dominant(cartan, lam: Sequence[int]) -> tuple[tuple, int]:
    lam = tuple(lam)
    parity = 0
    n = len(lam)
    while True:
        for i in range(n):
            if lam[i] < 0:
                lam = _reflect(cartan, lam, i)
                parity ^= 1
                break
        else:
            return lam, parity


@lru_cache(maxsize=8192)
def _orbit_full(rs: RootSystem, base: tuple) -> tuple[tuple[tuple, int], ...]:
    """Breadth-first W-orbit of a dominant integral weight with signs."""
    cartan = rs.cartan
    seen = {base: 1}
    queue = deque([base])
    while queue:
        lam = queue.popleft()
        s = seen[lam]
        for i in range(rs.rank):
            if lam[i] == 0:
                continue
            mu = _reflect(cartan, lam, i)
            if mu not in seen:
                seen[mu] = -s
                queue.append(mu)
    return tuple(seen.items())


@lru_cache(maxsize=8192)
def _orbit_even(rs: RootSystem, base: tuple) -> tuple[tuple, ...]:
    """Weights reachable from ``base`` by even-length words."""
    cartan = rs.cartan
    start = (base, 0)
    seen = {start}
    queue = deque([start])
    out = [base]
    while queue:
        lam, p = queue.popleft()
        for i in range(rs.rank):
            # r_i may fix lam; the state with flipped parity is reachable anyway
            state = (_reflect(cartan, lam, i), p ^ 1)
            if state not in seen:
                seen.add(state)
                queue.append(state)
                if state[1] == 0 and state[0] != base:
                    out.append(state[0])
    return tuple(out)


def _even_rep_int(rs: RootSystem, lam: Sequence[int]) -> tuple:
    dom, parity = _dominant(rs.cartan, lam)
    if parity == 0 or any(v == 0 for v in dom):
        return dom
    return _reflect(rs.cartan, dom, 0)


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedOrbit:
    """A W- or W^e-orbit with the sign of the word reaching each element."""

    base: Weight
    elements: tuple[tuple[Weight, int], ...]
    group_flavor: str

    def __len__(self):
        return len(self.elements)

    @property
    def weights(self) -> list[Weight]:
        return [w for w, _ in self.elements]

    @property
    def signs(self) -> list[int]:
        return [s for _, s in self.elements]


def simple_reflection(i: int, lam: Weight) -> Weight:
    """``r_i(lam) = lam - lam_i alpha_i`` in omega-coordinates."""
    if not 0 <= i < lam.rs.rank:
        raise IndexError(f"reflection index {i} out of range for rank {lam.rs.rank}")
    return Weight(lam.rs, _reflect(lam.rs.cartan, lam.coords, i))


def reflect_point(i: int, x: TorusPoint) -> TorusPoint:
    """Linear simple reflection on t: ``x - <alpha_i, x> coroot_i``."""
    if not 0 <= i < x.rs.rank:
        raise IndexError(f"reflection index {i} out of range for rank {x.rs.rank}")
    return TorusPoint(x.rs, _reflect_pt(x.rs.cartan, x.coords, i))


def dominant_rep(lam: Weight) -> tuple[Weight, int, int]:
    """Dominant weight in the W-orbit of ``lam``.

    Returns ``(dominant, sign, parity)`` where ``sign = (-1)**parity`` is the
    sign of the word that was applied to reach the dominant chamber.
    """
    dom, parity = _dominant(lam.rs.cartan, lam.coords)
    return Weight(lam.rs, dom), (-1) ** parity, parity


def even_rep(lam: Weight) -> Weight:
    """Canonical representative of the W^e-orbit of ``lam`` in P+ u r_1 P+.

    The dominant weight when it lies in the same W^e-orbit, otherwise its
    image under the first simple reflection.
    """
    return Weight(lam.rs, _even_rep_int(lam.rs, lam.as_ints()))


def orbit(lam: Weight, flavor: str = FULL) -> SignedOrbit:
    """Signed orbit of an integral weight under W (``"full"``) or W^e (``"even"``).

    For the full group the base is the dominant representative and each
    element carries the sign of the first (shortest) word reaching it.  For
    the even group every sign is +1 and the base is :func:`even_rep`.
    """
    rs = lam.rs
    flavor = _flavor(flavor)
    lam_int = lam.as_ints()
    if flavor == FULL:
        dom, _ = _dominant(rs.cartan, lam_int)
        elems = _orbit_full(rs, dom)
        return SignedOrbit(Weight(rs, dom),
                           tuple((Weight(rs, w), s) for w, s in elems), FULL)
    base = _even_rep_int(rs, lam_int)
    elems = _orbit_even(rs, base)
    return SignedOrbit(Weight(rs, base), tuple((Weight(rs, w), 1) for w in elems), EVEN)


def orbit_int(rs: RootSystem, lam: Sequence[int], flavor: str = FULL):
    """Integer-tuple version of :func:`orbit`: ``(base, [(weight, sign), ...])``."""
    if _flavor(flavor) == FULL:
        dom, _ = _dominant(rs.cartan, lam)
        return dom, _orbit_full(rs, dom)
    base = _even_rep_int(rs, lam)
    return base, tuple((w, 1) for w in _orbit_even(rs, base))


def stabilizer_order(lam: Weight) -> int:
    """``|W| / |W lam|``."""
    dom, _ = _dominant(lam.rs.cartan, lam.as_ints())
    return lam.rs.weyl_order // len(_orbit_full(lam.rs, dom))


# ---------------------------------------------------------------------------
# affine Weyl group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineMap:
    """``x -> matrix @ x + offset`` in coweight coordinates, exact."""

    matrix: tuple[tuple[Fraction, ...], ...]
    offset: tuple[Fraction, ...]

    def __call__(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) + o
                     for row, o in zip(self.matrix, self.offset))

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
                   tuple(Fraction(0) for _ in range(n)))

    def then(self, R, t) -> "AffineMap":
        """Compose with ``y -> R y + t`` applied after this map."""
        n = len(self.offset)
        M = tuple(tuple(sum((R[i][k] * self.matrix[k][j] for k in range(n)), Fraction(0))
                        for j in range(n)) for i in range(n))
        b = tuple(sum((R[i][k] * self.offset[k] for k in range(n)), Fraction(0)) + t[i]
                  for i in range(n))
        return AffineMap(M, b)


def _in_region(rs: RootSystem, x) -> bool:
    if any(v < 0 for v in x):
        return False
    return all(sum(rs.marks[k] * x[k] for k in range(lo, hi)) <= 1 for lo, hi in rs.factors)


def _reduce(rs: RootSystem, coords: Sequence[Fraction], track: bool):
    n = rs.rank
    A = rs.cartan
    x = [Fraction(c) for c in coords]
    amap = AffineMap.identity(n) if track else None
    I = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if _in_region(rs, x):
        return tuple(x), 0, amap

    # translate into the fundamental parallelepiped of the coroot lattice
    inv = rs.cartan_inv
    c = [sum(inv[j][i] * x[j] for j in range(n)) for i in range(n)]
    fl = [math.floor(v) for v in c]
    if any(fl):
        t = [-sum(fl[i] * A[i][k] for i in range(n)) for k in range(n)]
        x = [a + b for a, b in zip(x, t)]
        if track:
            amap = amap.then(I, t)

    coroots = [rs.highest_coroot(f) for f in range(len(rs.factors))]
    parity = 0
    # each step crosses a wall separating x from the region, so the number of
    # separating hyperplanes strictly drops; the guard is only a safety net
    for _ in range(100000):
        i = next((k for k in range(n) if x[k] < 0), None)
        if i is not None:
            xi = x[i]
            x = [x[k] - xi * A[i][k] for k in range(n)]
            parity ^= 1
            if track:
                R = [row[:] for row in I]
                for k in range(n):
                    R[k][i] -= A[i][k]
                amap = amap.then(R, [Fraction(0)] * n)
            continue
        for f, (lo, hi) in enumerate(rs.factors):
            h = sum(rs.marks[k] * x[k] for k in range(lo, hi))
            if h > 1:
                xi_c = coroots[f]
                x = [x[k] - (h - 1) * xi_c[k] for k in range(n)]
                parity ^= 1
                if track:
                    R = [row[:] for row in I]
                    for k in range(n):
                        for j in range(lo, hi):
                            R[k][j] -= xi_c[k] * rs.marks[j]
                    amap = amap.then(R, list(xi_c))
                break
        else:
            return tuple(x), parity, amap
    raise RuntimeError("affine reduction did not terminate")


def affine_reduce(x: TorusPoint) -> tuple[TorusPoint, int]:
    """Bring ``x`` into the fundamental region by the affine Weyl group.

    Returns the reduced point and the parity of the affine word used
    (coroot-lattice translations count as even).
    """
    y, parity, _ = _reduce(x.rs, x.coords, False)
    return TorusPoint(x.rs, y), parity


def affine_reduce_map(x: TorusPoint) -> tuple[TorusPoint, int, AffineMap]:
    """Like :func:`affine_reduce`, also returning the affine map that was applied."""
    y, parity, amap = _reduce(x.rs, x.coords, True)
    return TorusPoint(x.rs, y), parity, amap


# ---------------------------------------------------------------------------
# orbits on the torus
# ---------------------------------------------------------------------------

def _torus_key(rs: RootSystem, s: Sequence[int], L: int) -> tuple:
    """Canonical label of ``s / L`` modulo the coroot lattice."""
    K = rs.pair_int
    mod = rs.pair_denom * L
    return tuple(sum(K[i][j] * s[j] for j in range(rs.rank)) % mod for i in range(rs.rank))


def torus_orbit_size(x: TorusPoint, flavor: str = FULL) -> int:
    """Size of the W- (or W^e-) orbit of ``x`` read on the torus t / coroot lattice."""
    rs = x.rs
    L = math.lcm(*(c.denominator for c in x.coords))
    s = tuple(int(c * L) for c in x.coords)
    return _torus_orbit_size(rs, s, L, _flavor(flavor) == EVEN)


@lru_cache(maxsize=65536)
def _torus_orbit_size(rs: RootSystem, s: tuple, L: int, even: bool) -> int:
    cartan = rs.cartan
    start = (_torus_key(rs, s, L), 0)
    seen = {start}
    queue = deque([(s, 0)])
    while queue:
        pt, p = queue.popleft()
        for i in range(rs.rank):
            q = _reflect_pt(cartan, pt, i)
            state = (_torus_key(rs, q, L), p ^ 1)
            if state not in seen:
                seen.add(state)
                queue.append((q, p ^ 1))
    if even:
        return sum(1 for _, p in seen if p == 0)
    return len({k for k, _ in seen})
