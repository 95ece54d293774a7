"""Exact quadratic surds: values of the form q + c*sqrt(r) with rational q, c, r.

The classifier never needs floating point to *decide* anything, but the
geometry it reports (singular point coordinates, sphere radii squared) lives
in quadratic extensions of Q.  A Surd keeps those values exact and prints
them in a stable form; callers take float() only at the output boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def _sqrt_exact(r: Fraction) -> Fraction | None:
    """Rational square root of r >= 0, or None if r is not a perfect square."""
    if r < 0:
        raise ValueError("negative radicand")
    pn = math.isqrt(r.numerator)
    pd = math.isqrt(r.denominator)
    if pn * pn == r.numerator and pd * pd == r.denominator:
        return Fraction(pn, pd)
    return None


class Surd:
    """Immutable exact value q + c*sqrt(r), r >= 0 rational.

    Normalised so that a perfect-square radicand is folded into the rational
    part (sqrt(1/4) becomes 1/2) and c == 0 forces r == 0.  Equality is exact
    equality of the represented real number.
    """

    __slots__ = ("rat", "coef", "rad")

    def __init__(self, rat: Rat = 0, coef: Rat = 0, rad: Rat = 0):
        rat = Fraction(rat)
        coef = Fraction(coef)
        rad = Fraction(rad)
        if rad < 0:
            raise ValueError("negative radicand")
        if coef == 0:
            rad = Fraction(0)
        if rad == 0:
            coef = Fraction(0)
        root = _sqrt_exact(rad) if rad else None
        if root is not None:
            rat += coef * root
            coef = Fraction(0)
            rad = Fraction(0)
        self.rat = rat
        self.coef = coef
        self.rad = rad

    @classmethod
    def sqrt(cls, s: Rat) -> "Surd":
        """Exact sqrt of a nonnegative rational."""
        s = Fraction(s)
        if s < 0:
            raise ValueError("sqrt of negative rational")
        return cls(0, 1, s)

    def is_rational(self) -> bool:
        return self.coef == 0

    def __float__(self) -> float:
        x = float(self.rat)
        if self.coef:
            x += float(self.coef) * math.sqrt(float(self.rad))
        return x

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd(other)
        if not isinstance(other, Surd):
            return NotImplemented
        if self.coef == other.coef and self.rad == other.rad:
            return self.rat == other.rat
        # Distinct normalised radical parts can still represent the same
        # number only via c*sqrt(r) identities, which normalisation of the
        # radicand's square-free part would catch; a value comparison keeps
        # this honest without full square-free factoring.
        return (
            self.coef * self.coef * self.rad == other.coef * other.coef * other.rad
            and (self.coef >= 0) == (other.coef >= 0)
            and self.rat == other.rat
        )

    def __hash__(self):
        return hash((self.rat, self.coef * self.coef * self.rad, self.coef >= 0))

    def __neg__(self) -> "Surd":
        return Surd(-self.rat, -self.coef, self.rad)

    def __add__(self, other: Rat) -> "Surd":
        return Surd(self.rat + Fraction(other), self.coef, self.rad)

    __radd__ = __add__

    def __mul__(self, other: Rat) -> "Surd":
        other = Fraction(other)
        return Surd(self.rat * other, self.coef * other, self.rad)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Surd({self})"

    def __str__(self) -> str:
        if self.coef == 0:
            return str(self.rat)
        root = f"sqrt({self.rad})"
        if self.coef == 1:
            radical = root
        elif self.coef == -1:
            radical = f"-{root}"
        else:
            radical = f"({self.coef})*{root}"
        if self.rat == 0:
            return radical
        sign = "+" if self.coef > 0 else "-"
        mag = abs(self.coef)
        piece = root if mag == 1 else f"({mag})*{root}"
        return f"{self.rat} {sign} {piece}"


ZERO = Surd(0)
