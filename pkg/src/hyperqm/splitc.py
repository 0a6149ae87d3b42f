"""Exact split-complex arithmetic: numbers x + j*y with j**2 = +1.

Components are exact rationals, so every algebraic identity in this module
(conjugation, seminorm multiplicativity, lightcone factorization) holds
exactly.  Floats appear only inside the polar decomposition and when a
seminorm is reported as a real number.

The plane splits into four open cones separated by the null cone |x| = |y|;
the null cone carries the zero divisors and admits no polar form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


class NullConeError(ArithmeticError):
    """No hyperbolic polar form exists on the null cone |x| = |y|."""


class ZeroDivisorError(ArithmeticError):
    """Inversion attempted on a zero divisor (x**2 == y**2)."""


class Cone(Enum):
    RIGHT_TIMELIKE = "right-timelike"
    UP_SPACELIKE = "up-spacelike"
    LEFT_TIMELIKE = "left-timelike"
    DOWN_SPACELIKE = "down-spacelike"
    NULL = "null"


def _frac(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class SplitComplex:
    """A split-complex number ``re + j*im`` with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "SplitComplex") -> "SplitComplex":
        other = _coerce(other)
        return SplitComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "SplitComplex") -> "SplitComplex":
        other = _coerce(other)
        return SplitComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "SplitComplex") -> "SplitComplex":
        return _coerce(other) - self

    def __neg__(self) -> "SplitComplex":
        return SplitComplex(-self.re, -self.im)

    def __mul__(self, other) -> "SplitComplex":
        if isinstance(other, (Fraction, int)):
            q = _frac(other)
            return SplitComplex(self.re * q, self.im * q)
        if isinstance(other, SplitComplex):
            # (a1 + j a2)(b1 + j b2) = (a1 b1 + a2 b2) + j (a1 b2 + a2 b1)
            return SplitComplex(
                self.re * other.re + self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "SplitComplex":
        return SplitComplex(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        """The exact real value of ``z* z`` (may be negative)."""
        return self.re * self.re - self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_null(self) -> bool:
        """True on the null cone |x| == |y| (zero divisors and 0)."""
        return self.norm_squared() == 0

    def seminorm(self) -> float:
        """Signed indefinite seminorm sign(z*z) * sqrt(|z*z|)."""
        s = self.norm_squared()
        if s == 0:
            return 0.0
        root = math.sqrt(abs(float(s)))
        return root if s > 0 else -root

    def inverse(self) -> "SplitComplex":
        s = self.norm_squared()
        if s == 0:
            raise ZeroDivisorError(f"{self} has no inverse (x**2 == y**2)")
        return SplitComplex(self.re / s, -self.im / s)

    def cone(self) -> Cone:
        ax, ay = abs(self.re), abs(self.im)
        if ax == ay:
            return Cone.NULL
        if ax > ay:
            return Cone.RIGHT_TIMELIKE if self.re > 0 else Cone.LEFT_TIMELIKE
        return Cone.UP_SPACELIKE if self.im > 0 else Cone.DOWN_SPACELIKE

    # -- lightcone (idempotent) coordinates ------------------------------

    def lightcone(self) -> tuple[Fraction, Fraction]:
        """Coordinates (u, v) = (x+y, x-y); multiplication is componentwise."""
        return (self.re + self.im, self.re - self.im)

    @classmethod
    def from_lightcone(cls, u: RationalLike, v: RationalLike) -> "SplitComplex":
        u, v = _frac(u), _frac(v)
        return cls((u + v) / 2, (u - v) / 2)

    # -- text and JSON forms ---------------------------------------------

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}j"

    @classmethod
    def parse(cls, text: str) -> "SplitComplex":
        """Parse the text form ``a+bj`` / ``a-bj`` with rational literals.

        Accepts pure reals (``-3/7``), pure imaginaries (``j``, ``-1/2j``)
        and the combined form (``3/7+1/2j``).
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty split-complex literal")
        m = re.fullmatch(
            r"(?P<re>[+-]?\d+(?:/\d+)?)?"
            r"(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)j)?",
            s,
        )
        if m is None or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"not a split-complex literal: {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") is not None else Fraction(0)
        im_raw = m.group("im")
        if im_raw is None:
            im_part = Fraction(0)
        elif im_raw in ("", "+"):
            im_part = Fraction(1)
        elif im_raw == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(im_raw)
        return cls(re_part, im_part)

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, data: dict) -> "SplitComplex":
        return cls(Fraction(str(data["re"])), Fraction(str(data["im"])))


def _coerce(value) -> SplitComplex:
    if isinstance(value, SplitComplex):
        return value
    if isinstance(value, (int, Fraction)):
        return SplitComplex(_frac(value), Fraction(0))
    raise TypeError(f"cannot treat {value!r} as split-complex")


ZERO = SplitComplex(0, 0)
ONE = SplitComplex(1, 0)
J = SplitComplex(0, 1)


@dataclass(frozen=True)
class PolarForm:
    """One of the four hyperbolic polar decompositions.

    Timelike branches reconstruct as sign*rho*(cosh(theta) + j sinh(theta)),
    spacelike branches as sign*rho*(sinh(theta) + j cosh(theta)).
    """

    sign: int
    rho: float
    theta: float
    branch: Cone

    def reconstruct(self) -> tuple[float, float]:
        ch, sh = math.cosh(self.theta), math.sinh(self.theta)
        if self.branch in (Cone.RIGHT_TIMELIKE, Cone.LEFT_TIMELIKE):
            return (self.sign * self.rho * ch, self.sign * self.rho * sh)
        return (self.sign * self.rho * sh, self.sign * self.rho * ch)


def polar_decompose(z: SplitComplex) -> PolarForm:
    """Decompose z off the null cone into (sign, rho, theta, branch).

    theta is computed as artanh of the small/large component ratio, which is
    numerically stable because |ratio| < 1 away from the cone boundary.
    """
    branch = z.cone()
    if branch is Cone.NULL:
        raise NullConeError(f"{z} lies on the null cone; no polar form")
    rho = math.sqrt(abs(float(z.norm_squared())))
    if branch in (Cone.RIGHT_TIMELIKE, Cone.LEFT_TIMELIKE):
        theta = math.atanh(float(z.im / z.re))
        sign = 1 if z.re > 0 else -1
    else:
        theta = math.atanh(float(z.re / z.im))
        sign = 1 if z.im > 0 else -1
    return PolarForm(sign=sign, rho=rho, theta=theta, branch=branch)


# Thin functional aliases for the scalar operations.

def mul(a: SplitComplex, b: SplitComplex) -> SplitComplex:
    return a * b


def seminorm(z: SplitComplex) -> float:
    return z.seminorm()


def cone_of(z: SplitComplex) -> Cone:
    return z.cone()


def inverse(z: SplitComplex) -> SplitComplex:
    return z.inverse()


def lightcone(z: SplitComplex) -> tuple[Fraction, Fraction]:
    return z.lightcone()


def reversed_triangle_holds(z: SplitComplex, w: SplitComplex) -> bool:
    """Exact check of |‖z+w‖| >= |‖z‖| + |‖w‖| without taking square roots.

    sqrt(A) >= sqrt(B) + sqrt(C) for nonnegative rationals iff
    A >= B + C and (A - B - C)**2 >= 4*B*C.
    """
    a = abs((z + w).norm_squared())
    b = abs(z.norm_squared())
    c = abs(w.norm_squared())
    gap = a - b - c
    return gap >= 0 and gap * gap >= 4 * b * c
