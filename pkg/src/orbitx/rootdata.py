"""Exact root data for compact simple and semisimple Lie groups.

Conventions
-----------
Simple roots are numbered as in Bourbaki's tables.  For a rank ``n`` type the
Cartan matrix satisfies ``A[i][j] = <alpha_j, coroot_i>``, so that

* the simple root ``alpha_j`` has omega-coordinates ``A[:, j]`` (column ``j``);
* the simple coroot ``coroot_i`` has coweight-coordinates ``A[i, :]`` (row ``i``);
* ``<omega_i, coweight_j> = (A^-1)[j][i]``.

Weights are stored in the basis of fundamental weights and torus points in the
basis of fundamental coweights.  With those bases the natural pairing is
``<lam, x> = lam^T (A^-1)^T x``, exact over the rationals.

Semisimple groups are products of simple factors; every per-factor object
(Cartan matrix, marks, simplex) is assembled block by block.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "UnsupportedType",
    "RootSystem",
    "Weight",
    "TorusPoint",
    "make_root_system",
    "parse_group",
    "format_group",
    "pairing",
    "center_representatives",
    "reality_class",
]


class UnsupportedType(ValueError):
    """Raised for Lie types outside the classification (or bad group strings)."""


# ---------------------------------------------------------------------------
# Dynkin data
# ---------------------------------------------------------------------------

def _chain(n: int, lengths: Sequence[int]) -> list[list[int]]:
    """Gram matrix (doubled) of a chain diagram with given squared lengths."""
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = lengths[i]
    for i in range(n - 1):
        # (a_i, a_{i+1}) = -max(|a_i|^2, |a_{i+1}|^2) / 2 for the simply laced
        # and doubly laced links used below.
        v = -max(lengths[i], lengths[i + 1]) // 2
        B[i][i + 1] = B[i + 1][i] = v
    return B


def _gram(series: str, n: int) -> list[list[int]]:
    """Integer multiple of the Gram matrix (alpha_i, alpha_j) in Bourbaki order."""
    if series == "A" and n >= 1:
        return _chain(n, [2] * n)
    if series == "B" and n >= 2:
        return _chain(n, [4] * (n - 1) + [2])
    if series == "C" and n >= 2:
        return _chain(n, [2] * (n - 1) + [4])
    if series == "D" and n >= 4:
        B = _chain(n - 1, [2] * (n - 1))
        for row in B:
            row.append(0)
        B.append([0] * n)
        B[n - 1][n - 1] = 2
        B[n - 1][n - 2] = B[n - 2][n - 1] = 0
        B[n - 1][n - 3] = B[n - 3][n - 1] = -1
        return B
    if series == "E" and n in (6, 7, 8):
        B = [[0] * n for _ in range(n)]
        for i in range(n):
            B[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            B[i][j] = B[j][i] = -1
        return B
    if series == "F" and n == 4:
        B = _chain(4, [4, 4, 2, 2])
        return B
    if series == "G" and n == 2:
        # alpha_1 short, alpha_2 long, |alpha_2|^2 = 3 |alpha_1|^2
        return [[2, -3], [-3, 6]]
    raise UnsupportedType(f"unsupported simple type {series}{n}")


def _cartan_from_gram(B: list[list[int]]) -> list[list[int]]:
    n = len(B)
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            q, r = divmod(2 * B[i][j], B[i][i])
            assert r == 0
            A[i][j] = q
    return A


def _inverse(A: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse over Q."""
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def _det(A: Sequence[Sequence[int]]) -> int:
    n = len(A)
    M = [[Fraction(v) for v in row] for row in A]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    assert det.denominator == 1
    return int(det)


def _highest_root_coefficients(A: list[list[int]]) -> tuple[int, ...]:
    """Coefficients of the highest root, found by generating all roots.

    Roots are the W-orbits of the simple roots; the one of greatest height
    is the highest root.  Works in omega-coordinates with integer arithmetic.
    """
    n = len(A)
    Ainv = _inverse(A)
    simple = [tuple(A[k][j] for k in range(n)) for j in range(n)]
    seen = set(simple)
    stack = list(simple)
    while stack:
        lam = stack.pop()
        for i in range(n):
            if lam[i] == 0:
                continue
            mu = tuple(lam[k] - lam[i] * A[k][i] for k in range(n))
            if mu not in seen:
                seen.add(mu)
                stack.append(mu)

    def alpha_coords(lam):
        return [sum(Ainv[i][k] * lam[k] for k in range(n)) for i in range(n)]

    best = max((alpha_coords(r) for r in seen), key=sum)
    assert all(c.denominator == 1 for c in best)
    return tuple(int(c) for c in best)


# ---------------------------------------------------------------------------
# Group labels
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_group(text: str) -> tuple[tuple[str, int], ...]:
    """Parse ``"A2"``, ``"A1xA1"``, ``"B3xG2"`` into a type label."""
    if not isinstance(text, str) or not text.strip():
        raise UnsupportedType(f"malformed group string {text!r}")
    label = []
    for tok in text.strip().split("x"):
        m = _TOKEN.match(tok.strip())
        if not m:
            raise UnsupportedType(f"malformed group string {text!r}")
        label.append((m.group(1).upper(), int(m.group(2))))
    return tuple(label)


def format_group(label: Iterable[tuple[str, int]]) -> str:
    return "x".join(f"{s}{n}" for s, n in label)


# ---------------------------------------------------------------------------
# RootSystem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSystem:
    """Immutable combinatorial descriptor of a semisimple type.

    Construct with :func:`make_root_system`.  All matrices are tuples of
    tuples; rational entries are :class:`fractions.Fraction`.
    """

    type_label: tuple[tuple[str, int], ...]
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    dual_marks: tuple[int, ...]
    center_order: int
    weyl_order: int
    factors: tuple[tuple[int, int], ...]
    opposite_is_minus_one: bool
    opposite_parity: str | None
    cartan_inv: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)
    pair_denom: int = field(repr=False, compare=False)
    pair_int: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    gram: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return format_group(self.type_label)

    @property
    def is_simple(self) -> bool:
        return len(self.type_label) == 1

    def simple_root(self, j: int) -> tuple[int, ...]:
        """omega-coordinates of alpha_j (0-based index)."""
        return tuple(self.cartan[k][j] for k in range(self.rank))

    def simple_coroot(self, i: int) -> tuple[int, ...]:
        """coweight-coordinates of the simple coroot (0-based index)."""
        return self.cartan[i]

    def highest_coroot(self, f: int) -> tuple[Fraction, ...]:
        """Coweight coordinates of the coroot of the highest root of factor ``f``.

        This is the translation part of the affine reflection bounding the
        fundamental simplex of that factor.
        """
        lo, hi = self.factors[f]
        q = self.marks
        Bq = [sum(self.gram[j][i] * q[i] for i in range(lo, hi)) for j in range(self.rank)]
        norm = sum(q[j] * Bq[j] for j in range(lo, hi))
        return tuple(Fraction(2 * Bq[j], norm) if lo <= j < hi else Fraction(0)
                     for j in range(self.rank))

    def simplex_vertices(self) -> list["TorusPoint"]:
        """Vertices of the fundamental region: ``0`` and ``coweight_i / q_i``
        for every simple factor, combined as a Cartesian product."""
        per_factor = []
        for lo, hi in self.factors:
            verts = [tuple(Fraction(0) for _ in range(lo, hi))]
            for i in range(lo, hi):
                verts.append(tuple(Fraction(1, self.marks[i]) if k == i else Fraction(0)
                                   for k in range(lo, hi)))
            per_factor.append(verts)
        out = [()]
        for verts in per_factor:
            out = [a + v for a in out for v in verts]
        return [TorusPoint(self, c) for c in out]

    def __str__(self) -> str:
        return self.name


def _simple_data(series: str, n: int):
    B = _gram(series, n)
    A = _cartan_from_gram(B)
    marks = _highest_root_coefficients(A)
    AT = [list(r) for r in zip(*A)]
    dual_marks = _highest_root_coefficients(AT)
    c = _det(A)
    weyl = math.factorial(n) * c * math.prod(marks)
    return B, A, marks, dual_marks, c, weyl


def make_root_system(type_label) -> RootSystem:
    """Build the descriptor for a (semi)simple type.

    ``type_label`` is a sequence of ``(series, rank)`` pairs or a group
    string such as ``"A1xA1"``.

    >>> make_root_system([("A", 2)]).center_order
    3
    """
    if isinstance(type_label, str):
        type_label = parse_group(type_label)
    label = tuple((str(s).upper(), int(n)) for s, n in type_label)
    if not label:
        raise UnsupportedType("empty type label")
    return _build(label)


_CACHE: dict = {}


def _build(label) -> RootSystem:
    if label in _CACHE:
        return _CACHE[label]
    rank = sum(n for _, n in label)
    cartan = [[0] * rank for _ in range(rank)]
    gram = [[0] * rank for _ in range(rank)]
    marks: list[int] = []
    dual_marks: list[int] = []
    factors = []
    center = weyl = 1
    off = 0
    for series, n in label:
        B, A, q, qd, c, w = _simple_data(series, n)
        for i in range(n):
            for j in range(n):
                cartan[off + i][off + j] = A[i][j]
                gram[off + i][off + j] = B[i][j]
        marks += q
        dual_marks += qd
        factors.append((off, off + n))
        center *= c
        weyl *= w
        off += n

    inv = _inverse(cartan)
    denom = math.lcm(*(v.denominator for row in inv for v in row))
    # <lam, x> = lam^T K x / denom with K = denom * (A^-1)^T
    K = tuple(tuple(int(inv[j][i] * denom) for j in range(rank)) for i in range(rank))

    rs = RootSystem(
        type_label=label,
        rank=rank,
        cartan=tuple(tuple(r) for r in cartan),
        marks=tuple(marks),
        dual_marks=tuple(dual_marks),
        center_order=center,
        weyl_order=weyl,
        factors=tuple(factors),
        opposite_is_minus_one=False,
        opposite_parity=None,
        cartan_inv=tuple(tuple(r) for r in inv),
        pair_denom=denom,
        pair_int=K,
        gram=tuple(tuple(r) for r in gram),
    )
    minus_one, parity = _opposite_involution(rs)
    rs = RootSystem(**{**rs.__dict__, "opposite_is_minus_one": minus_one,
                       "opposite_parity": parity})
    _CACHE[label] = rs
    return rs


def _opposite_involution(rs: RootSystem) -> tuple[bool, str | None]:
    """Decide whether the longest element acts as -1, and its length parity.

    For a regular dominant ``lam``, the dominant representative of ``-lam`` is
    ``-w_opp(lam)``; it equals ``lam`` exactly when ``w_opp = -1``.  The number
    of reflections used has the parity of ``l(w_opp)``.
    """
    n = rs.rank
    lam = [k + 1 for k in range(n)]
    mu = [-v for v in lam]
    parity = 0
    while True:
        i = next((k for k in range(n) if mu[k] < 0), None)
        if i is None:
            break
        mu = [mu[k] - mu[i] * rs.cartan[k][i] for k in range(n)]
        parity ^= 1
    if mu == lam:
        return True, "odd" if parity else "even"
    return False, None


# ---------------------------------------------------------------------------
# Weights and torus points
# ---------------------------------------------------------------------------

def _fractions(coords) -> tuple[Fraction, ...]:
    return tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)


@dataclass(frozen=True)
class _Vector:
    rs: RootSystem
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = _fractions(self.coords)
        if len(coords) != self.rs.rank:
            raise ValueError(f"expected {self.rs.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    def _check(self, other):
        if type(other) is not type(self) or other.rs != self.rs:
            raise ValueError("mismatched root systems or vector kinds")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.rs, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.rs, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(self.rs, tuple(-a for a in self.coords))

    def __mul__(self, k):
        k = Fraction(k)
        return type(self)(self.rs, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coords)
        return f"{type(self).__name__}({self.rs.name}: ({body}))"


class Weight(_Vector):
    """Element of t* in the basis of fundamental weights."""

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def is_strictly_dominant(self) -> bool:
        return all(c > 0 for c in self.coords)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"{self!r} is not in the weight lattice")
        return tuple(int(c) for c in self.coords)

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int) -> "Weight":
        return cls(rs, tuple(int(k == i) for k in range(rs.rank)))

    @classmethod
    def simple_root(cls, rs: RootSystem, j: int) -> "Weight":
        return cls(rs, rs.simple_root(j))


class TorusPoint(_Vector):
    """Element of t in the basis of fundamental coweights, read modulo the coroot lattice."""

    def coroot_coords(self) -> tuple[Fraction, ...]:
        """Coordinates in the basis of simple coroots, ``(A^-1)^T x``."""
        inv = self.rs.cartan_inv
        n = self.rs.rank
        return tuple(sum(inv[j][i] * self.coords[j] for j in range(n)) for i in range(n))

    def torus_equal(self, other: "TorusPoint") -> bool:
        """True iff the two points differ by an element of the coroot lattice."""
        return all(c.denominator == 1 for c in (self - other).coroot_coords())

    def in_fundamental_region(self) -> bool:
        if any(c < 0 for c in self.coords):
            return False
        for lo, hi in self.rs.factors:
            if sum(self.rs.marks[i] * self.coords[i] for i in range(lo, hi)) > 1:
                return False
        return True

    def is_interior(self) -> bool:
        if any(c <= 0 for c in self.coords):
            return False
        for lo, hi in self.rs.factors:
            if sum(self.rs.marks[i] * self.coords[i] for i in range(lo, hi)) >= 1:
                return False
        return True

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int) -> "TorusPoint":
        return cls(rs, tuple(int(k == i) for k in range(rs.rank)))

    @classmethod
    def simple_coroot(cls, rs: RootSystem, i: int) -> "TorusPoint":
        return cls(rs, rs.simple_coroot(i))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def pairing(lam: Weight, x: TorusPoint) -> Fraction:
    """Exact natural pairing ``<lam, x>``."""
    if not isinstance(lam, Weight) or not isinstance(x, TorusPoint):
        raise TypeError("pairing expects (Weight, TorusPoint)")
    if lam.rs != x.rs:
        raise ValueError("mismatched root systems")
    inv = lam.rs.cartan_inv
    n = lam.rs.rank
    return sum((lam.coords[i] * inv[j][i] * x.coords[j]
                for i in range(n) for j in range(n)), Fraction(0))


def center_representatives(rs: RootSystem) -> list[TorusPoint]:
    """Representatives of the centre inside the fundamental region.

    These are the points of the region lying in the coweight lattice: the
    origin and the vertices ``coweight_i`` with mark 1, combined over factors.
    Ordered lexicographically, so the identity comes first.
    """
    per_factor = []
    for lo, hi in rs.factors:
        pts = [tuple(0 for _ in range(lo, hi))]
        for i in range(lo, hi):
            if rs.marks[i] == 1:
                pts.append(tuple(int(k == i) for k in range(lo, hi)))
        per_factor.append(pts)
    out = [()]
    for pts in per_factor:
        out = [a + p for a in out for p in pts]
    return [TorusPoint(rs, c) for c in sorted(out)]


def reality_class(rs: RootSystem) -> dict:
    """Which of the C-, S-, E-families are guaranteed real (or S imaginary).

    Driven by the opposite involution: ``w_opp = -1`` makes C-functions real;
    if additionally ``w_opp`` is even, S and E are real too, while an odd
    ``w_opp`` makes S purely imaginary.
    """
    minus_one = rs.opposite_is_minus_one
    even = rs.opposite_parity == "even"
    return {
        "C_real": minus_one,
        "S_real": minus_one and even,
        "S_imaginary": minus_one and not even,
        "E_real": minus_one and even,
    }
