"""Exact scalar arithmetic over Q and over the Gaussian rationals Q(i).

Every ring element in this package ultimately reduces to a Scalar, so this
module is the exactness substrate: no floats enter any computation, only the
explicit float()/complex() views leave it.  A Scalar carries a ring tag; mixing
the two rings raises, promotion is always explicit via to_gaussian().
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

_FracLike = (int, Fraction)


class RingMismatch(ValueError):
    """Operands live in different coefficient rings."""


class Scalar:
    """A rational number, or a Gaussian rational when ``gaussian`` is set."""

    __slots__ = ("re", "im", "gaussian")

    def __init__(self, re=0, im=0, gaussian=False):
        re = Fraction(re)
        im = Fraction(im)
        if not gaussian and im:
            raise ValueError("rational scalar with nonzero imaginary part")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "gaussian", bool(gaussian))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- construction -------------------------------------------------------

    @staticmethod
    def rational(x) -> "Scalar":
        return Scalar(Fraction(x))

    @staticmethod
    def gauss(re, im=0) -> "Scalar":
        return Scalar(Fraction(re), Fraction(im), gaussian=True)

    @staticmethod
    def zero(gaussian=False) -> "Scalar":
        return Scalar(0, 0, gaussian)

    @staticmethod
    def one(gaussian=False) -> "Scalar":
        return Scalar(1, 0, gaussian)

    @staticmethod
    def i() -> "Scalar":
        return Scalar(0, 1, gaussian=True)

    def to_gaussian(self) -> "Scalar":
        return Scalar(self.re, self.im, gaussian=True)

    # -- ring discipline -----------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.gaussian != self.gaussian:
                raise RingMismatch("cannot mix Q and Q(i) scalars")
            return other
        if isinstance(other, _FracLike):
            return Scalar(Fraction(other), 0, self.gaussian)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im, self.gaussian)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.gaussian)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im, self.gaussian)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not (self.im or other.im):
            return Scalar(self.re * other.re, 0, self.gaussian)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.gaussian,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.re / n, -self.im / n, self.gaussian)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.gaussian)

    def norm(self) -> Fraction:
        """Multiplicative norm re^2 + im^2 (a plain rational)."""
        return self.re * self.re + self.im * self.im

    # -- predicates / views --------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.re or self.im)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, _FracLike):
            return self.im == 0 and self.re == other
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.gaussian == other.gaussian
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im, self.gaussian))

    def __repr__(self):
        if not self.gaussian:
            return f"Scalar({self.re})"
        return f"Scalar({self.re}, {self.im}, gaussian=True)"

    def __str__(self):
        if not self.gaussian:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"

    def __float__(self):
        if self.im:
            raise ValueError("nonreal scalar has no float view")
        return float(self.re)

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    # -- square roots (used by the momentum-map lift machinery) ---------------

    def sqrt(self):
        """An exact square root in the same ring, or None if there is none."""
        if not self.gaussian:
            r = _rational_sqrt(self.re)
            return None if r is None else Scalar(r)
        # z = (a+bi)^2 needs |z| = a^2+b^2 to be a rational square first.
        n = _rational_sqrt(self.norm())
        if n is None:
            return None
        a2 = (self.re + n) / 2
        a = _rational_sqrt(a2)
        if a is None:
            return None
        if a == 0:
            b = _rational_sqrt(-self.re)
            if b is None:
                return None
            return Scalar(0, b, gaussian=True)
        b = self.im / (2 * a)
        cand = Scalar(a, b, gaussian=True)
        return cand if cand * cand == self else None

    def is_square(self) -> bool:
        return self.sqrt() is not None

    # -- JSON (coefficient encodings shared by CDNumber / JordanElement) ------

    def to_json(self):
        if not self.gaussian:
            return [self.re.numerator, self.re.denominator]
        return [
            [self.re.numerator, self.re.denominator],
            [self.im.numerator, self.im.denominator],
        ]

    @staticmethod
    def from_json(obj) -> "Scalar":
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise ValueError(f"bad scalar encoding: {obj!r}")
        if isinstance(obj[0], (list, tuple)):
            (rn, rd), (im_n, im_d) = obj
            return Scalar(Fraction(rn, rd), Fraction(im_n, im_d), gaussian=True)
        n, d = obj
        return Scalar(Fraction(n, d))


def _rational_sqrt(q: Fraction):
    """Exact square root of a rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def two_squares(q: Fraction):
    """Write a positive rational as x^2 + y^2 over Q, or return None.

    Searches n*d = a^2 + b^2 over the integers; values fed in here stay small
    (they come from bounded-height samplers), so brute force is adequate.
    """
    if q < 0:
        return None
    if q == 0:
        return Fraction(0), Fraction(0)
    n, d = q.numerator, q.denominator
    m = n * d
    for a in range(isqrt(m) + 1):
        b2 = m - a * a
        b = isqrt(b2)
        if b * b == b2:
            return Fraction(a, d), Fraction(b, d)
    return None


def four_squares(q: Fraction):
    """Write a nonnegative rational as a sum of four rational squares.

    Always solvable; the search runs over n*d which stays small here.
    """
    if q < 0:
        raise ValueError("negative rational is not a sum of squares")
    if q == 0:
        z = Fraction(0)
        return z, z, z, z
    n, d = q.numerator, q.denominator
    m = n * d
    for a in range(isqrt(m), -1, -1):
        r1 = m - a * a
        for b in range(isqrt(r1), -1, -1):
            r2 = r1 - b * b
            for c in range(isqrt(r2), -1, -1):
                e2 = r2 - c * c
                e = isqrt(e2)
                if e * e == e2:
                    return (
                        Fraction(a, d),
                        Fraction(b, d),
                        Fraction(c, d),
                        Fraction(e, d),
                    )
    raise AssertionError("four-square search failed")  # unreachable for m >= 0
