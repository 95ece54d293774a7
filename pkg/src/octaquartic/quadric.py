"""Exact quadric analysis of the symmetrised quartic.

Substituting X = x^2, Y = y^2, Z = z^2 turns the invariant quartic into the
quadric F(X,Y,Z) = A(XY+YZ+ZX) + B(X+Y+Z)^2 + C(X+Y+Z) + D restricted to the
first octant.  Everything here is exact rational arithmetic: determinant,
rank, signature, the affine type of the quadric, the three symmetry-line
restrictions, singular orbits on the symmetry strata, and an exact emptiness
decision for the quartic's real zero set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Tuple

from .surd import Surd

Mat = Tuple[Tuple[Fraction, ...], ...]


class NotAQuarticError(ValueError):
    """Raised when A = B = 0: the polynomial is not a genuine quartic."""


@dataclass(frozen=True)
class QuarticCoefficients:
    """Coefficients of A*v + B*u^2 + C*u + D with u, v the degree-2,4 invariants."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise NotAQuarticError("A and B cannot vanish together")

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)

    def scaled(self, mu) -> "QuarticCoefficients":
        mu = Fraction(mu)
        if mu == 0:
            raise ValueError("scale must be nonzero")
        return QuarticCoefficients(mu * self.a, mu * self.b, mu * self.c, mu * self.d)

    def evaluate(self, p) -> Fraction:
        x, y, z = (Fraction(t) for t in p)
        x2, y2, z2 = x * x, y * y, z * z
        u = x2 + y2 + z2
        v = x2 * y2 + y2 * z2 + z2 * x2
        return self.a * v + self.b * u * u + self.c * u + self.d

    def gradient(self, p):
        """Exact gradient (2x(A(y^2+z^2) + 2Bu + C), ...)."""
        x, y, z = (Fraction(t) for t in p)
        u = x * x + y * y + z * z
        gx = 2 * x * (self.a * (y * y + z * z) + 2 * self.b * u + self.c)
        gy = 2 * y * (self.a * (x * x + z * z) + 2 * self.b * u + self.c)
        gz = 2 * z * (self.a * (x * x + y * y) + 2 * self.b * u + self.c)
        return (gx, gy, gz)


@dataclass(frozen=True)
class QuadricMatrix:
    """The bordered symmetric matrix of the substituted quadric."""

    lam: Mat
    lam0: Mat
    w: Fraction
    coeffs: QuarticCoefficients


def assemble_lambda(q: QuarticCoefficients) -> QuadricMatrix:
    a, b, c, d = q.as_tuple()
    w = (a + 2 * b) / 2
    half_c = c / 2
    lam = (
        (d, half_c, half_c, half_c),
        (half_c, b, w, w),
        (half_c, w, b, w),
        (half_c, w, w, b),
    )
    lam0 = tuple(row[1:] for row in lam[1:])
    return QuadricMatrix(lam=lam, lam0=lam0, w=w, coeffs=q)


def quadric_value(m: QuadricMatrix, p) -> Fraction:
    """X^T Lambda X with X = (1, X, Y, Z)."""
    vec = (Fraction(1),) + tuple(Fraction(t) for t in p)
    total = Fraction(0)
    for i in range(4):
        for j in range(4):
            total += vec[i] * m.lam[i][j] * vec[j]
    return total


def _det4_cofactor(m: Mat) -> Fraction:
    def det3(r):
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    total = Fraction(0)
    for j in range(4):
        minor = tuple(
            tuple(m[i][k] for k in range(4) if k != j) for i in range(1, 4)
        )
        total += (-1) ** j * m[0][j] * det3(minor)
    return total


def _rank_fraction_free(m: Mat) -> int:
    """Rank by Bareiss fraction-free elimination on the integer-scaled matrix.

    Deterministic first-nonzero pivoting; exact for rational input.
    """
    denom = lcm(*(e.denominator for row in m for e in row)) if m else 1
    a = [[int(e * denom) for e in row] for row in m]
    n_rows = len(a)
    n_cols = len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, n_rows):
            if a[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            a[row], a[pivot_row] = a[pivot_row], a[row]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) // prev
            a[r][col] = 0
        prev = a[row][col]
        row += 1
        rank += 1
        if row == n_rows:
            break
    return rank


@dataclass(frozen=True)
class QuadricInvariants:
    det_lambda: Fraction
    det_lambda0: Fraction
    rk_lambda: int
    rk_lambda0: int
    eigs0: Tuple[Fraction, Fraction, Fraction]
    sigma_minus0: int
    sigma_plus0: int
    j: Fraction
    plane_disc: Fraction  # C^2 - 4BD; splits real vs imaginary parallel planes


def invariants(m: QuadricMatrix) -> QuadricInvariants:
    b = m.lam0[0][0]
    w = m.w
    a, _, c, d = m.coeffs.as_tuple()
    # eigenvalues of the circulant-symmetric block: B - W twice, B + 2W once
    eigs = (b - w, b - w, b + 2 * w)
    return QuadricInvariants(
        det_lambda=_det4_cofactor(m.lam),
        det_lambda0=(b - w) * (b - w) * (b + 2 * w),
        rk_lambda=_rank_fraction_free(m.lam),
        rk_lambda0=_rank_fraction_free(m.lam0),
        eigs0=eigs,
        sigma_minus0=sum(1 for e in eigs if e < 0),
        sigma_plus0=sum(1 for e in eigs if e > 0),
        j=9 * (b * b - w * w),
        plane_disc=c * c - 4 * m.coeffs.b * d,
    )


def center(m: QuadricMatrix) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Quadric center, on the main diagonal; absent when B + 2W = 0."""
    b = m.lam0[0][0]
    w = m.w
    c = m.coeffs.c
    denom = b + 2 * w
    if denom == 0:
        return None
    t = -c / (2 * denom)
    return (t, t, t)


def singular_point(m: QuadricMatrix):
    """Affine singular point of the quadric, when det(Lambda) = 0.

    Returns ("proper", point) when the vertex is a finite point on the
    quadric (cone case), ("improper", None) when the singular direction is at
    infinity (cylinder case), or None when the quadric has no singularity.
    Solves Lambda0 * P = -C/2 and requires the solution to lie on the quadric.
    """
    inv = invariants(m)
    if inv.det_lambda != 0:
        return None
    b = m.lam0[0][0]
    w = m.w
    c = m.coeffs.c
    d = m.coeffs.d
    lam3 = b + 2 * w  # eigenvalue along (1,1,1); C-vector is parallel to it
    if lam3 != 0:
        t = -c / (2 * lam3)
        p = (t, t, t)
        value = d + 3 * (c / 2) * t  # D + C^T P / 2 at P = (t, t, t)
        if value == 0:
            return ("proper", p)
        return ("improper", None)
    # lam3 == 0: solvable only when C = 0, with a line of candidate centers
    if c != 0:
        return ("improper", None)
    if d == 0:
        return ("proper", (Fraction(0), Fraction(0), Fraction(0)))
    return ("improper", None)


class QuadricType(enum.Enum):
    ELLIPTIC_PARABOLOID = "elliptic_paraboloid"
    HYPERBOLIC_PARABOLOID = "hyperbolic_paraboloid"
    REAL_ELLIPTIC_CYLINDER = "real_elliptic_cylinder"
    HYPERBOLIC_CYLINDER = "hyperbolic_cylinder"
    PARABOLIC_CYLINDER = "parabolic_cylinder"
    IMAGINARY_LINES_PAIR = "pair_of_imaginary_lines"
    SECANT_PLANES_PAIR = "pair_of_secant_planes"
    PARALLEL_PLANES_REAL = "pair_of_parallel_planes_real"
    PARALLEL_PLANES_IMAGINARY = "pair_of_parallel_planes_imaginary"
    DOUBLE_PLANE = "double_plane"
    REAL_ELLIPSOID = "real_ellipsoid"
    IMAGINARY_ELLIPSOID = "imaginary_ellipsoid"
    ONE_SHEETED_HYPERBOLOID = "one_sheeted_hyperboloid"
    TWO_SHEETED_HYPERBOLOID = "two_sheeted_hyperboloid"
    REAL_ELLIPTIC_CONE = "real_elliptic_cone"
    IMAGINARY_ELLIPTIC_CONE = "imaginary_elliptic_cone"
    CYLINDER_DEGENERATE = "cylinder_degenerate_improper_point"


def bromwich_burington_classify(inv: QuadricInvariants) -> QuadricType:
    """Affine type of the quadric from its matrix invariants.

    Total decision tree: the degenerate branch (det Lambda0 = 0) splits on
    rk(Lambda) and sign of J; the central branch splits on the Lambda0
    signature (up to overall sign of f) and sign of det Lambda, with rank 3
    marking the cone cases (proper singular point).
    """
    if inv.det_lambda0 == 0:
        if inv.rk_lambda == 4:
            if inv.j > 0:
                return QuadricType.ELLIPTIC_PARABOLOID
            if inv.j < 0:
                return QuadricType.HYPERBOLIC_PARABOLOID
            return QuadricType.CYLINDER_DEGENERATE  # unreachable for this family
        if inv.rk_lambda == 3:
            if inv.j > 0:
                return QuadricType.REAL_ELLIPTIC_CYLINDER
            if inv.j < 0:
                return QuadricType.HYPERBOLIC_CYLINDER
            return QuadricType.PARABOLIC_CYLINDER
        if inv.rk_lambda == 2:
            if inv.j > 0:
                return QuadricType.IMAGINARY_LINES_PAIR
            if inv.j < 0:
                return QuadricType.SECANT_PLANES_PAIR
            if inv.plane_disc > 0:
                return QuadricType.PARALLEL_PLANES_REAL
            if inv.plane_disc < 0:
                return QuadricType.PARALLEL_PLANES_IMAGINARY
            return QuadricType.DOUBLE_PLANE  # disc = 0 forces coincident planes
        return QuadricType.DOUBLE_PLANE
    definite = inv.sigma_minus0 == 3 or inv.sigma_plus0 == 3
    if inv.rk_lambda == 4:
        if definite:
            if inv.det_lambda > 0:
                return QuadricType.IMAGINARY_ELLIPSOID
            return QuadricType.REAL_ELLIPSOID
        if inv.det_lambda > 0:
            return QuadricType.ONE_SHEETED_HYPERBOLOID
        return QuadricType.TWO_SHEETED_HYPERBOLOID
    # rk = 3 with invertible block: proper singular point at the center
    if definite:
        return QuadricType.IMAGINARY_ELLIPTIC_CONE
    return QuadricType.REAL_ELLIPTIC_CONE


class Stratum(enum.Enum):
    AXIS = "axis"
    FACE_DIAGONAL = "face_diagonal"
    SPACE_DIAGONAL = "space_diagonal"


STRATUM_DIRECTIONS = {
    Stratum.AXIS: (1, 0, 0),
    Stratum.FACE_DIAGONAL: (1, 1, 0),
    Stratum.SPACE_DIAGONAL: (1, 1, 1),
}

ORBIT_SIZES = {
    Stratum.AXIS: 6,
    Stratum.FACE_DIAGONAL: 12,
    Stratum.SPACE_DIAGONAL: 8,
}


@dataclass(frozen=True)
class LineRestriction:
    """The quartic restricted to a symmetry line, as a quadratic in s = t^2."""

    stratum: Stratum
    a: Fraction
    b: Fraction
    c: Fraction
    positive_roots: int  # roots s > 0, multiplicity collapsed
    positive_crossings: int  # odd-multiplicity roots s > 0 (strict sign changes)
    double_positive_root: Optional[Fraction]
    has_zero_root: bool
    identically_zero: bool


def _count_positive_roots(a: Fraction, b: Fraction, c: Fraction):
    """Exact positive-root data of a*s^2 + b*s + c via discriminant and Vieta."""
    if a == 0:
        if b == 0:
            if c == 0:
                return (0, 0, None, False, True)
            return (0, 0, None, False, False)
        root = -c / b
        has_zero = c == 0
        n = 1 if root > 0 else 0
        return (n, n, None, has_zero, False)
    disc = b * b - 4 * a * c
    if disc < 0:
        return (0, 0, None, False, False)
    if disc == 0:
        root = -b / (2 * a)
        if root > 0:
            return (1, 0, root, False, False)
        return (0, 0, None, root == 0, False)
    has_zero = c == 0
    if has_zero:
        other = -b / a
        n = 1 if other > 0 else 0
        return (n, n, None, True, False)
    product = c / a
    total = -b / a
    if product > 0:
        n = 2 if total > 0 else 0
    else:
        n = 1
    return (n, n, None, has_zero, False)


def line_restriction(q: QuarticCoefficients, stratum: Stratum) -> LineRestriction:
    a, b, c, d = q.as_tuple()
    if stratum is Stratum.AXIS:
        qa, qb, qc = b, c, d
    elif stratum is Stratum.FACE_DIAGONAL:
        qa, qb, qc = a + 4 * b, 2 * c, d
    else:
        qa, qb, qc = 3 * a + 9 * b, 3 * c, d
    pos, crossings, double, zero, ident = _count_positive_roots(qa, qb, qc)
    return LineRestriction(
        stratum=stratum,
        a=qa,
        b=qb,
        c=qc,
        positive_roots=pos,
        positive_crossings=crossings,
        double_positive_root=double,
        has_zero_root=zero,
        identically_zero=ident,
    )


@dataclass(frozen=True)
class StratumOrbit:
    """A singular orbit on a symmetry stratum: rep = sqrt(s) * direction."""

    stratum: Optional[Stratum]  # None marks the origin orbit
    s: Optional[Fraction]
    rep: Tuple[Surd, Surd, Surd]
    size: int

    @property
    def kind(self) -> str:
        return "origin" if self.stratum is None else self.stratum.value


def strata_singularities(q: QuarticCoefficients) -> list:
    """Singular orbits of the quartic lying on the symmetry strata.

    On a stratum the off-stratum gradient components vanish identically, so a
    point is singular exactly when the stratum quadratic has a double root at
    s = t^2 > 0.  The origin is singular exactly when D = 0.
    """
    out = []
    if q.d == 0:
        zero = Surd(0)
        out.append(StratumOrbit(stratum=None, s=None, rep=(zero, zero, zero), size=1))
    for stratum in Stratum:
        lr = line_restriction(q, stratum)
        if lr.double_positive_root is None:
            continue
        s = lr.double_positive_root
        coord = Surd.sqrt(s)
        direction = STRATUM_DIRECTIONS[stratum]
        rep = tuple(coord if d else Surd(0) for d in direction)
        out.append(
            StratumOrbit(stratum=stratum, s=s, rep=rep, size=ORBIT_SIZES[stratum])
        )
    return out


class Existence(enum.Enum):
    EMPTY = "empty"
    POINT_ONLY = "point_only"
    NONEMPTY_SURFACE = "nonempty_surface"


def existence_check(q: QuarticCoefficients) -> Existence:
    """Exact emptiness decision for the real zero set.

    f depends on a point only through (u, v) with u >= 0 and 0 <= v <= u^2/3,
    and is linear in v, so at a given u the attained values fill the interval
    between q_axis(u) = B u^2 + C u + D and q_diag(u) = (A/3 + B) u^2 + C u + D.
    The zero set meets u > 0 iff one of the two quadratics has a positive root
    or they have opposite constant signs on (0, inf).
    """
    a, b, c, d = q.as_tuple()
    axis = _count_positive_roots(b, c, d)
    diag = _count_positive_roots(a / 3 + b, c, d)
    for pos, _, double, _, ident in (axis, diag):
        if pos > 0 or double is not None or ident:
            return Existence.NONEMPTY_SURFACE
    # no positive roots: each quadratic keeps one sign on (0, inf)
    sign_axis = 1 if b + c + d > 0 else -1
    sign_diag = 1 if a / 3 + b + c + d > 0 else -1
    if sign_axis != sign_diag:
        return Existence.NONEMPTY_SURFACE
    if d == 0:
        return Existence.POINT_ONLY
    return Existence.EMPTY
