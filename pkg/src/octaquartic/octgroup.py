"""The 48-element octahedral symmetry group and its action on points.

The group is generated by quarter-turn rotations about the x- and y-axes and
the reflection through the z = 0 plane; every element is a signed permutation
matrix with entries in {-1, 0, 1}.  All arithmetic is exact: orbit sizes feed
the classifier's singular-point counts and must never depend on a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence, Tuple

Matrix = Tuple[Tuple[int, int, int], ...]
Vec3 = Tuple[Fraction, Fraction, Fraction]

GEN_ROT_X: Matrix = ((1, 0, 0), (0, 0, -1), (0, 1, 0))
GEN_ROT_Y: Matrix = ((0, 0, -1), (0, 1, 0), (1, 0, 0))
GEN_MIRROR_Z: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, -1))

GENERATORS: Tuple[Matrix, ...] = (GEN_ROT_X, GEN_ROT_Y, GEN_MIRROR_Z)

IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_det(m: Matrix) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def is_signed_permutation(m: Matrix) -> bool:
    for row in m:
        if sorted(abs(x) for x in row) != [0, 0, 1]:
            return False
    for j in range(3):
        if sorted(abs(m[i][j]) for i in range(3)) != [0, 0, 1]:
            return False
    return True


@dataclass(frozen=True)
class GroupElement:
    """A signed permutation matrix acting on column vectors."""

    m: Matrix

    def __post_init__(self):
        if not is_signed_permutation(self.m):
            raise ValueError(f"not a signed permutation matrix: {self.m}")
        if mat_det(self.m) not in (-1, 1):
            raise ValueError("determinant must be +-1")
        # row i picks coordinate source[i] with sign signs[i]; applying the
        # element is then three signed copies instead of a matrix product
        source = []
        signs = []
        for row in self.m:
            j = 0 if row[0] else (1 if row[1] else 2)
            source.append(j)
            signs.append(row[j])
        object.__setattr__(self, "_source", tuple(source))
        object.__setattr__(self, "_signs", tuple(signs))

    def apply(self, p: Sequence) -> Vec3:
        s = self._source
        g = self._signs
        return (g[0] * p[s[0]], g[1] * p[s[1]], g[2] * p[s[2]])

    def compose(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(mat_mul(self.m, other.m))

    def inverse(self) -> "GroupElement":
        # inverse of a signed permutation matrix is its transpose
        return GroupElement(tuple(tuple(self.m[j][i] for j in range(3)) for i in range(3)))

    @property
    def det(self) -> int:
        return mat_det(self.m)


@lru_cache(maxsize=1)
def generate_group() -> Tuple[GroupElement, ...]:
    """Closure of the three generators under multiplication.

    Returns all 48 elements in a canonical sorted order (by flattened matrix
    entries) so that dumps are byte-stable across runs.
    """
    elems = {IDENTITY}
    frontier = set(GENERATORS)
    elems |= frontier
    while frontier:
        new = set()
        for g in frontier:
            for h in GENERATORS:
                p = mat_mul(g, h)
                if p not in elems:
                    new.add(p)
        elems |= new
        frontier = new
    ordered = sorted(elems)
    return tuple(GroupElement(m) for m in ordered)


@lru_cache(maxsize=1)
def rotations() -> Tuple[GroupElement, ...]:
    return tuple(g for g in generate_group() if g.det == 1)


@dataclass(frozen=True)
class Orbit:
    """Orbit of a point under the full group, deduplicated exactly."""

    representative: Vec3
    points: frozenset
    size: int


def orbit(p: Sequence) -> Orbit:
    rep = tuple(Fraction(c) for c in p)
    # deduplicate on an integer-scaled copy: int hashing is much faster than
    # Fraction hashing and the orbit structure is scale invariant
    den = lcm(*(c.denominator for c in rep))
    scaled = tuple(int(c * den) for c in rep)
    images = {g.apply(scaled) for g in generate_group()}
    pts = frozenset(tuple(Fraction(x, den) for x in t) for t in images)
    return Orbit(representative=rep, points=pts, size=len(pts))


def stabilizer_size(p: Sequence) -> int:
    rep = tuple(Fraction(c) for c in p)
    den = lcm(*(c.denominator for c in rep))
    scaled = tuple(int(c * den) for c in rep)
    return sum(1 for g in generate_group() if g.apply(scaled) == scaled)


def invariants_uvw(p: Sequence):
    """The fundamental invariant triple (u, v, w) at a point.

    u, v, w generate the full invariant ring; any octahedrally symmetric
    quartic is A*v + B*u**2 + C*u + D.
    """
    x, y, z = p
    x2, y2, z2 = x * x, y * y, z * z
    u = x2 + y2 + z2
    v = x2 * y2 + y2 * z2 + z2 * x2
    w = x2 * y2 * z2
    return u, v, w


def quartic_value(coeffs, p) -> Fraction:
    """Evaluate A*v + B*u^2 + C*u + D at p, exactly for rational inputs."""
    a, b, c, d = coeffs
    u, v, _ = invariants_uvw(p)
    return a * v + b * u * u + c * u + d


def in_fundamental_cone(p: Sequence) -> bool:
    """Quadric-space cone {X >= 0, 0 <= Z <= X, 0 <= Z <= Y}, boundary included."""
    x, y, z = p
    return x >= 0 and y >= 0 and 0 <= z <= x and z <= y


def in_quartic_fundamental_domain(p: Sequence) -> bool:
    """Quartic-space tetrahedral cone {x >= 0, 0 <= y <= x, 0 <= z <= x}."""
    x, y, z = p
    return x >= 0 and 0 <= y <= x and 0 <= z <= x


def octant_cone_images() -> Tuple[GroupElement, ...]:
    """The six coordinate-permutation elements (the subgroup mapping the first
    octant to itself with positive entries)."""
    perms = []
    for g in generate_group():
        if all(all(e >= 0 for e in row) for row in g.m):
            perms.append(g)
    return tuple(perms)


def group_dump() -> list:
    """All 48 matrices as nested integer lists, canonical order."""
    return [[list(row) for row in g.m] for g in generate_group()]
