"""Companion exact scalar rings: Gaussian rationals and dual rationals.

Both mirror the arithmetic surface of `splitc.SplitComplex` (exact rational
components, a formal unit, conjugation) so matrices and polynomial symbols
can carry coefficients from any of the three two-dimensional rings:

* ``GaussianRational``: unit i with i**2 = -1 (elliptic coefficients),
* ``DualRational``:     unit eps with eps**2 = 0 (parabolic coefficients),
* ``splitc.SplitComplex``: unit j with j**2 = +1 (hyperbolic coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def _frac(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational ``re + i*im`` with i**2 = -1."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def __add__(self, other):
        other = _coerce_gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_gauss(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce_gauss(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            q = _frac(other)
            return GaussianRational(self.re * q, self.im * q)
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class DualRational:
    """Exact dual rational ``re + eps*im`` with eps**2 = 0."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def __add__(self, other):
        other = _coerce_dual(other)
        return DualRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_dual(other)
        return DualRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce_dual(other) - self

    def __neg__(self):
        return DualRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            q = _frac(other)
            return DualRational(self.re * q, self.im * q)
        if isinstance(other, DualRational):
            # eps**2 = 0 kills the im*im cross term
            return DualRational(
                self.re * other.re,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "DualRational":
        return DualRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}eps"


def _coerce_gauss(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(_frac(value), Fraction(0))
    raise TypeError(f"cannot treat {value!r} as a Gaussian rational")


def _coerce_dual(value) -> DualRational:
    if isinstance(value, DualRational):
        return value
    if isinstance(value, (int, Fraction)):
        return DualRational(_frac(value), Fraction(0))
    raise TypeError(f"cannot treat {value!r} as a dual rational")
