"""Exact phase-space symbol calculus for one degree of freedom.

Symbols are polynomials in (x, p) with exact coefficients in a selectable
ring (real, complex, split-complex, dual), optionally multiplied by an
isotropic Gaussian.  The bidifferential operator

    nabla = (d/dx backwards)(d/dp forwards) - (d/dp backwards)(d/dx forwards)

generates the canonical bracket (order 1), the trigonometric product pair of
the elliptic class, the hyperbolic-trigonometric pair of the hyperbolic
class, and the exponential star products.  On a pair with one polynomial
factor of total degree d every power nabla**k with k > d vanishes, so all
series terminate and every identity here is checked exactly; scalars carry
powers of pi symbolically so normalization statements are exact as well.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .composability import CompClass, TwoProductAlgebra, run_axiom_suite
from .report import PropertyReport
from .rings import DualRational, GaussianRational
from .sampling import rand_fraction
from .splitc import SplitComplex


class UnsupportedPair(TypeError):
    """Both factors are Gaussians with nonzero widths: the series does not terminate."""


class UnsupportedClass(ValueError):
    """The requested operation has no realization for this class."""


class HyperbolicSingularity(ArithmeticError):
    """The hyperbolic Gaussian star leaves the Gaussian class (width product >= 1)."""


class NonIntegrable(ValueError):
    """Phase-space integral of a non-decaying symbol."""


class Ring(Enum):
    REAL = "real"
    COMPLEX = "complex"
    SPLIT = "split"
    DUAL = "dual"


_UNIT_SQUARE = {Ring.COMPLEX: -1, Ring.SPLIT: 1, Ring.DUAL: 0}
_UNIT_LETTER = {Ring.COMPLEX: "i", Ring.SPLIT: "j", Ring.DUAL: "eps"}
_SCALAR_TYPE = {
    Ring.REAL: Fraction,
    Ring.COMPLEX: GaussianRational,
    Ring.SPLIT: SplitComplex,
    Ring.DUAL: DualRational,
}

Scalar = Union[Fraction, GaussianRational, SplitComplex, DualRational]


def class_ring(cls: CompClass) -> Ring:
    return {-1: Ring.COMPLEX, 0: Ring.DUAL, 1: Ring.SPLIT}[cls.j_squared]


def scalar_from_fraction(q: Fraction, ring: Ring) -> Scalar:
    q = Fraction(q)
    if ring is Ring.REAL:
        return q
    return _SCALAR_TYPE[ring](q, Fraction(0))


def scalar_unit(ring: Ring) -> Scalar:
    if ring is Ring.REAL:
        raise ValueError("the real ring has no imaginary unit")
    return _SCALAR_TYPE[ring](Fraction(0), Fraction(1))


def scalar_is_zero(c: Scalar) -> bool:
    if isinstance(c, Fraction):
        return c == 0
    return c.is_zero()


def scalar_conj(c: Scalar) -> Scalar:
    if isinstance(c, Fraction):
        return c
    return c.conjugate()


def scalar_parts(c: Scalar) -> tuple[Fraction, Fraction]:
    if isinstance(c, Fraction):
        return (c, Fraction(0))
    return (c.re, c.im)


def join_ring(r1: Ring, r2: Ring) -> Ring:
    if r1 is r2:
        return r1
    if r1 is Ring.REAL:
        return r2
    if r2 is Ring.REAL:
        return r1
    raise ValueError(f"cannot mix {r1.value} and {r2.value} coefficients")


def widen_scalar(c: Scalar, ring: Ring) -> Scalar:
    if ring is Ring.REAL:
        if not isinstance(c, Fraction):
            raise ValueError("cannot narrow a scalar to the real ring")
        return c
    if isinstance(c, Fraction):
        return _SCALAR_TYPE[ring](c, Fraction(0))
    if isinstance(c, _SCALAR_TYPE[ring]):
        return c
    raise ValueError(f"cannot move {c!r} into the {ring.value} ring")


def unit_power(ring: Ring, k: int) -> Scalar:
    """The unit raised to k, reduced through unit**2 = -1 / 0 / +1."""
    square = Fraction(_UNIT_SQUARE[ring])
    numeric = square ** (k // 2)
    if k % 2 == 0:
        return scalar_from_fraction(numeric, ring)
    return scalar_from_fraction(numeric, ring) * scalar_unit(ring)


def _ring_of_scalar(c) -> Ring:
    if isinstance(c, Fraction):
        return Ring.REAL
    for ring, typ in _SCALAR_TYPE.items():
        if ring is not Ring.REAL and isinstance(c, typ):
            return ring
    raise TypeError(f"not a coefficient scalar: {c!r}")


# -- polynomial symbols -------------------------------------------------------


@dataclass(frozen=True)
class PolySymbol:
    """Exact polynomial in (x, p): map (x-degree, p-degree) -> coefficient.

    Terms are kept canonical (no zero coefficients, sorted by total degree
    then x-degree, descending) so equality and printing are structural.
    """

    ring: Ring
    terms: tuple = ()

    @classmethod
    def make(cls, ring: Ring, mapping: dict) -> "PolySymbol":
        items = [
            (key, coef)
            for key, coef in mapping.items()
            if not scalar_is_zero(coef)
        ]
        items.sort(key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0], -kv[0][1]))
        return cls(ring=ring, terms=tuple(items))

    @classmethod
    def constant(cls, value, ring: Ring = Ring.REAL) -> "PolySymbol":
        if isinstance(value, int):
            value = Fraction(value)
        if isinstance(value, Fraction):
            value = scalar_from_fraction(value, ring)
        else:
            ring = join_ring(ring, _ring_of_scalar(value))
        return cls.make(ring, {(0, 0): value})

    @classmethod
    def variable(cls, name: str, ring: Ring = Ring.REAL) -> "PolySymbol":
        if name == "x":
            key = (1, 0)
        elif name == "p":
            key = (0, 1)
        else:
            raise ValueError(f"unknown phase-space variable {name!r}")
        return cls.make(ring, {key: scalar_from_fraction(Fraction(1), ring)})

    def term_dict(self) -> dict:
        return dict(self.terms)

    def coerce(self, ring: Ring) -> "PolySymbol":
        ring = join_ring(self.ring, ring)
        if ring is self.ring:
            return self
        return PolySymbol.make(
            ring, {k: widen_scalar(c, ring) for k, c in self.terms}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero symbol."""
        if not self.terms:
            return -1
        return max(dx + dp for (dx, dp), _ in self.terms)

    def __add__(self, other: "PolySymbol") -> "PolySymbol":
        ring = join_ring(self.ring, other.ring)
        acc = {k: widen_scalar(c, ring) for k, c in self.terms}
        for k, c in other.terms:
            c = widen_scalar(c, ring)
            if k in acc:
                acc[k] = acc[k] + c
            else:
                acc[k] = c
        return PolySymbol.make(ring, acc)

    def __sub__(self, other: "PolySymbol") -> "PolySymbol":
        return self + (-other)

    def __neg__(self) -> "PolySymbol":
        return PolySymbol(self.ring, tuple((k, -c) for k, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, PolySymbol):
            ring = join_ring(self.ring, other.ring)
            acc: dict = {}
            for (dx1, dp1), c1 in self.terms:
                c1 = widen_scalar(c1, ring)
                for (dx2, dp2), c2 in other.terms:
                    key = (dx1 + dx2, dp1 + dp2)
                    val = c1 * widen_scalar(c2, ring)
                    if key in acc:
                        acc[key] = acc[key] + val
                    else:
                        acc[key] = val
            return PolySymbol.make(ring, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "PolySymbol":
        if isinstance(c, int):
            c = Fraction(c)
        ring = join_ring(self.ring, _ring_of_scalar(c))
        c = widen_scalar(c, ring)
        return PolySymbol.make(
            ring, {k: c * widen_scalar(v, ring) for k, v in self.terms}
        )

    def diff_x(self) -> "PolySymbol":
        acc = {}
        for (dx, dp), c in self.terms:
            if dx > 0:
                acc[(dx - 1, dp)] = Fraction(dx) * c
        return PolySymbol.make(self.ring, acc)

    def diff_p(self) -> "PolySymbol":
        acc = {}
        for (dx, dp), c in self.terms:
            if dp > 0:
                acc[(dx, dp - 1)] = Fraction(dp) * c
        return PolySymbol.make(self.ring, acc)

    def conjugate(self) -> "PolySymbol":
        return PolySymbol(self.ring, tuple((k, scalar_conj(c)) for k, c in self.terms))

    def evaluate_parts(self, xv: float, pv: float) -> tuple[float, float]:
        re_total = 0.0
        im_total = 0.0
        for (dx, dp), c in self.terms:
            mono = (xv**dx) * (pv**dp)
            cre, cim = scalar_parts(c)
            re_total += float(cre) * mono
            im_total += float(cim) * mono
        return (re_total, im_total)

    # -- canonical text form (parsed back by the CLI grammar) -------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, coef in self.terms:
            sign, body = _render_term(key, coef, self.ring)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign < 0 else "") + first_body
        for sign, body in pieces[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out

    __repr__ = __str__


def _render_fraction(q: Fraction, with_paren: bool) -> str:
    if q.denominator == 1:
        return str(q)
    return f"({q})" if with_paren else str(q)


def _render_term(key: tuple[int, int], coef, ring: Ring) -> tuple[int, str]:
    dx, dp = key
    mono_parts = []
    if dx:
        mono_parts.append("x" if dx == 1 else f"x^{dx}")
    if dp:
        mono_parts.append("p" if dp == 1 else f"p^{dp}")
    mono = "*".join(mono_parts)
    re_c, im_c = scalar_parts(coef)
    letter = _UNIT_LETTER.get(ring, "")
    if im_c == 0:
        sign = -1 if re_c < 0 else 1
        mag = abs(re_c)
        if mono and mag == 1:
            return (sign, mono)
        body = _render_fraction(mag, with_paren=bool(mono))
        return (sign, f"{body}*{mono}" if mono else body)
    if re_c == 0:
        sign = -1 if im_c < 0 else 1
        mag = abs(im_c)
        unit_body = letter if mag == 1 else f"{_render_fraction(mag, True)}{letter}"
        return (sign, f"{unit_body}*{mono}" if mono else unit_body)
    combined_sign = "+" if im_c >= 0 else "-"
    body = f"({re_c}{combined_sign}{_abs_unit(im_c, letter)})"
    return (1, f"{body}*{mono}" if mono else body)


def _abs_unit(im_c: Fraction, letter: str) -> str:
    mag = abs(im_c)
    return letter if mag == 1 else f"{_render_fraction(mag, True)}{letter}"


X = PolySymbol.variable("x")
P = PolySymbol.variable("p")


def random_symbol(
    rng: random.Random,
    ring: Ring = Ring.REAL,
    max_degree: int = 4,
    max_terms: int = 6,
    min_degree: int = 0,
    bound: int = 8,
) -> PolySymbol:
    """Random sparse polynomial with small exact coefficients."""
    while True:
        acc: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            dx = rng.randint(0, max_degree)
            dp = rng.randint(0, max_degree - dx)
            if ring is Ring.REAL:
                coef: Scalar = rand_fraction(rng, bound)
            else:
                coef = _SCALAR_TYPE[ring](rand_fraction(rng, bound), rand_fraction(rng, bound))
            if scalar_is_zero(coef):
                continue
            acc[(dx, dp)] = coef
        sym = PolySymbol.make(ring, acc)
        if not sym.is_zero() and sym.degree() >= min_degree:
            return sym


# -- Gaussian-times-polynomial symbols ---------------------------------------


@dataclass(frozen=True)
class GaussPoly:
    """pi**pi_power * exp(-width*(x**2+p**2)/hbar) * poly(x, p).

    Closed under differentiation and under multiplication by polynomials;
    two members multiply by adding widths and pi powers.  ``width == 0``
    degenerates to a plain polynomial (with a symbolic pi factor).
    """

    width: Fraction
    hbar: Fraction
    pi_power: int
    poly: PolySymbol

    def __post_init__(self) -> None:
        object.__setattr__(self, "width", Fraction(self.width))
        object.__setattr__(self, "hbar", Fraction(self.hbar))
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        if self.poly.is_zero():
            object.__setattr__(self, "width", Fraction(0))
            object.__setattr__(self, "pi_power", 0)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def _like(self, poly: PolySymbol) -> "GaussPoly":
        return GaussPoly(self.width, self.hbar, self.pi_power, poly)

    def mul_poly(self, g: PolySymbol) -> "GaussPoly":
        return self._like(self.poly * g)

    def scale(self, c) -> "GaussPoly":
        return self._like(self.poly.scale(c))

    def scale_pi(self, c, dpi: int) -> "GaussPoly":
        return GaussPoly(self.width, self.hbar, self.pi_power + dpi, self.poly.scale(c))

    def conjugate(self) -> "GaussPoly":
        return self._like(self.poly.conjugate())

    def __add__(self, other: "GaussPoly") -> "GaussPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if (self.width, self.hbar, self.pi_power) != (
            other.width,
            other.hbar,
            other.pi_power,
        ):
            raise ValueError("can only add Gaussian symbols with matching envelope")
        return self._like(self.poly + other.poly)

    def __sub__(self, other: "GaussPoly") -> "GaussPoly":
        return self + (-other)

    def __neg__(self) -> "GaussPoly":
        return self._like(-self.poly)

    def __mul__(self, other: "GaussPoly") -> "GaussPoly":
        if self.hbar != other.hbar:
            raise ValueError("mismatched hbar")
        return GaussPoly(
            self.width + other.width,
            self.hbar,
            self.pi_power + other.pi_power,
            self.poly * other.poly,
        )

    def diff_x(self) -> "GaussPoly":
        # d/dx [e^{-a(x^2+p^2)/h} q] = e^{-a(...)/h} (q' - (2a/h) x q)
        factor = Fraction(2) * self.width / self.hbar
        xsym = PolySymbol.variable("x")
        return self._like(self.poly.diff_x() - (xsym * self.poly).scale(factor))

    def diff_p(self) -> "GaussPoly":
        factor = Fraction(2) * self.width / self.hbar
        psym = PolySymbol.variable("p")
        return self._like(self.poly.diff_p() - (psym * self.poly).scale(factor))

    def evaluate_parts(self, xv: float, pv: float) -> tuple[float, float]:
        envelope = math.pi**self.pi_power * math.exp(
            -float(self.width) * (xv * xv + pv * pv) / float(self.hbar)
        )
        re_c, im_c = self.poly.evaluate_parts(xv, pv)
        return (envelope * re_c, envelope * im_c)

    def __str__(self) -> str:
        return (
            f"pi^{self.pi_power} * exp(-{self.width}(x^2+p^2)/{self.hbar})"
            f" * ({self.poly})"
        )


Symbol = Union[PolySymbol, GaussPoly]


def _is_gauss(s: Symbol) -> bool:
    return isinstance(s, GaussPoly) and s.width != 0


def _diff(s: Symbol, var: str, order: int) -> Symbol:
    for _ in range(order):
        s = s.diff_x() if var == "x" else s.diff_p()
    return s


def _sym_mul(a: Symbol, b: Symbol):
    if isinstance(a, GaussPoly) and isinstance(b, GaussPoly):
        return a * b
    if isinstance(a, GaussPoly):
        return a.mul_poly(b)
    if isinstance(b, GaussPoly):
        return b.mul_poly(a)
    return a * b


def _poly_degree_bound(f: Symbol, g: Symbol) -> int:
    """Largest k with nabla**k possibly nonzero (min polynomial total degree)."""
    degs = []
    for s in (f, g):
        if isinstance(s, PolySymbol):
            degs.append(s.degree())
        elif s.width == 0:
            degs.append(s.poly.degree())
    if not degs:
        raise UnsupportedPair(
            "both factors are Gaussians with nonzero width; the derivative series "
            "does not terminate (use the isotropic Gaussian closed form)"
        )
    return max(0, min(degs))


def nabla_power(f: Symbol, g: Symbol, k: int) -> Symbol:
    """k-fold bidifferential power, expanded by the binomial rule.

    nabla**k (f, g) = sum_j (-1)**j C(k, j) (dx**(k-j) dp**j f)(dp**(k-j) dx**j g);
    order 0 is the plain product and order 1 the canonical bracket.
    """
    if k < 0:
        raise ValueError("order must be nonnegative")
    if _is_gauss(f) and _is_gauss(g):
        raise UnsupportedPair(
            "both factors are Gaussians with nonzero width; the derivative series "
            "does not terminate (use the isotropic Gaussian closed form)"
        )
    if k == 0:
        return _sym_mul(f, g)
    acc = None
    for j in range(k + 1):
        left = _diff(_diff(f, "x", k - j), "p", j)
        right = _diff(_diff(g, "p", k - j), "x", j)
        term = _sym_mul(left, right)
        coef = Fraction((-1) ** j * math.comb(k, j))
        term = term.scale(coef)
        acc = term if acc is None else acc + term
    return acc


def poisson(f: Symbol, g: Symbol) -> Symbol:
    return nabla_power(f, g, 1)


def _parity_series(
    f: Symbol, g: Symbol, hbar: Fraction, parity: int, alternating: bool, prefactor: Fraction
) -> Symbol:
    hbar = Fraction(hbar)
    kmax = _poly_degree_bound(f, g)
    acc = None
    for k in range(parity, kmax + 1, 2):
        coef = prefactor * (hbar / 2) ** k / math.factorial(k)
        if alternating:
            coef *= Fraction(-1) ** ((k - parity) // 2)
        term = nabla_power(f, g, k).scale(coef)
        acc = term if acc is None else acc + term
    if acc is None:
        if isinstance(f, GaussPoly) or isinstance(g, GaussPoly):
            base = f if isinstance(f, GaussPoly) else g
            return base._like(PolySymbol.make(base.poly.ring, {}))
        return PolySymbol.make(join_ring(f.ring, g.ring), {})
    return acc


def moyal_alpha(f: Symbol, g: Symbol, hbar: Fraction = Fraction(1)) -> Symbol:
    """(2/hbar) sin((hbar/2) nabla): the skew product of the elliptic class."""
    return _parity_series(f, g, hbar, parity=1, alternating=True, prefactor=2 / Fraction(hbar))


def moyal_sigma(f: Symbol, g: Symbol, hbar: Fraction = Fraction(1)) -> Symbol:
    """cos((hbar/2) nabla): the symmetric product of the elliptic class.

    The prefactor is fixed so that the order-0 term is the plain product,
    which the exponential star product forces (see the ledger of the source
    text's prefactor inconsistency in the project notes).
    """
    return _parity_series(f, g, hbar, parity=0, alternating=True, prefactor=Fraction(1))


def hyper_alpha(f: Symbol, g: Symbol, hbar: Fraction = Fraction(1)) -> Symbol:
    """(2/hbar) sinh((hbar/2) nabla): the skew product of the hyperbolic class."""
    return _parity_series(f, g, hbar, parity=1, alternating=False, prefactor=2 / Fraction(hbar))


def hyper_sigma(f: Symbol, g: Symbol, hbar: Fraction = Fraction(1)) -> Symbol:
    """cosh((hbar/2) nabla): the symmetric product of the hyperbolic class."""
    return _parity_series(f, g, hbar, parity=0, alternating=False, prefactor=Fraction(1))


@dataclass(frozen=True)
class StarSeriesTerm:
    """One order of the exponential star series: coefficient times nabla**k."""

    k: int
    value: Symbol


def star_series_terms(
    f: Symbol, g: Symbol, hbar: Fraction, cls: CompClass
) -> list[StarSeriesTerm]:
    """Terminating expansion of f exp((J hbar / 2) nabla) g, unit powers reduced.

    Term k carries the explicit factor (hbar/2)**k, which makes the
    classical-limit grading (every correction to the plain product is at
    least first order in hbar) structural.
    """
    if cls.j_squared == 0:
        raise UnsupportedClass(
            "the parabolic class has no exponential star here; its realization "
            "is the canonical bracket plus plain multiplication"
        )
    ring = class_ring(cls)
    hbar = Fraction(hbar)
    kmax = _poly_degree_bound(f, g)
    terms = []
    for k in range(kmax + 1):
        coef = unit_power(ring, k) * ((hbar / 2) ** k / math.factorial(k))
        value = nabla_power(f, g, k).scale(coef)
        terms.append(StarSeriesTerm(k=k, value=value))
    return terms


def star(f: Symbol, g: Symbol, hbar: Fraction, cls: CompClass) -> Symbol:
    """The associative star product of the class, computed exactly."""
    terms = star_series_terms(f, g, hbar, cls)
    acc = terms[0].value
    for term in terms[1:]:
        acc = acc + term.value
    return acc


# -- Gaussian states, integration, the positivity chain ----------------------


def wigner_ground_state(hbar: Fraction) -> GaussPoly:
    """The reference pure state (1/(pi hbar)) exp(-(x^2+p^2)/hbar)."""
    hbar = Fraction(hbar)
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    return GaussPoly(
        width=Fraction(1),
        hbar=hbar,
        pi_power=-1,
        poly=PolySymbol.constant(Fraction(1) / hbar),
    )


@dataclass(frozen=True)
class PiScalar:
    """Exact scalar of the form value * pi**pi_power."""

    value: Scalar
    pi_power: int = 0

    def __post_init__(self) -> None:
        if scalar_is_zero(self.value):
            object.__setattr__(self, "pi_power", 0)

    def __add__(self, other: "PiScalar") -> "PiScalar":
        if scalar_is_zero(self.value):
            return other
        if scalar_is_zero(other.value):
            return self
        if self.pi_power != other.pi_power:
            raise ValueError("cannot add different powers of pi exactly")
        return PiScalar(self.value + other.value, self.pi_power)

    def __mul__(self, other) -> "PiScalar":
        if isinstance(other, PiScalar):
            return PiScalar(self.value * other.value, self.pi_power + other.pi_power)
        return PiScalar(self.value * other, self.pi_power)

    __rmul__ = __mul__

    def to_float_parts(self) -> tuple[float, float]:
        re_c, im_c = scalar_parts(self.value)
        scale = math.pi**self.pi_power
        return (float(re_c) * scale, float(im_c) * scale)

    def plain(self) -> Scalar:
        """The scalar value, requiring the pi power to have cancelled."""
        if self.pi_power != 0 and not scalar_is_zero(self.value):
            raise ValueError(f"residual pi**{self.pi_power} factor")
        return self.value

    def __str__(self) -> str:
        if self.pi_power == 0:
            return str(self.value)
        return f"({self.value})*pi^{self.pi_power}"


def _double_factorial(m: int) -> int:
    if m <= 0:
        return 1
    out = 1
    while m > 0:
        out *= m
        m -= 2
    return out


def integrate(s: GaussPoly) -> PiScalar:
    """Exact phase-space integral via factorized Gaussian moments.

    Each monomial x**m p**n contributes
    (m-1)!!(n-1)!!/(2 alpha)**((m+n)/2) * pi/alpha with alpha = width/hbar
    (zero for odd powers), so the result is exact with one extra power of pi.
    """
    if s.is_zero():
        return PiScalar(scalar_from_fraction(Fraction(0), s.poly.ring), 0)
    if s.width <= 0:
        raise NonIntegrable("the symbol does not decay; width must be positive")
    alpha = s.width / s.hbar
    ring = s.poly.ring
    total: Scalar = scalar_from_fraction(Fraction(0), ring)
    for (m, n), coef in s.poly.terms:
        if m % 2 or n % 2:
            continue
        rational = (
            Fraction(_double_factorial(m - 1) * _double_factorial(n - 1))
            / (2 * alpha) ** ((m + n) // 2)
            / alpha
        )
        total = total + coef * rational
    return PiScalar(total, s.pi_power + 1)


def gaussian_star_isotropic(
    a: Fraction, b: Fraction, hbar: Fraction, cls: CompClass
) -> tuple[Fraction, Fraction]:
    """Closed form of exp(-a u/hbar) star exp(-b u/hbar), u = x**2 + p**2.

    Returns (prefactor, width): the product is prefactor * exp(-width u/hbar).
    The four-variable Gaussian integral behind the formula depends only on
    the square of the deformation parameter, so the elliptic denominator is
    1 + a b while both hyperbolic lightcone components share 1 - a b; the
    hyperbolic product therefore leaves the Gaussian class when a b >= 1
    (at a b == 1 the ground-state self-star diverges).
    """
    a, b, hbar = Fraction(a), Fraction(b), Fraction(hbar)
    if a < 0 or b < 0:
        raise ValueError("widths must be nonnegative")
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    if cls.j_squared == -1:
        den = 1 + a * b
    elif cls.j_squared == 1:
        den = 1 - a * b
        if den <= 0:
            raise HyperbolicSingularity(
                f"width product {a * b} >= 1: the hyperbolic Gaussian star "
                "has no Gaussian value"
            )
    else:
        raise UnsupportedClass("no Gaussian star for the parabolic class")
    return (Fraction(1) / den, (a + b) / den)


def star_gauss_gauss(f: GaussPoly, g: GaussPoly, cls: CompClass) -> GaussPoly:
    """Star of two pure isotropic Gaussians via the closed form."""
    if f.hbar != g.hbar:
        raise ValueError("mismatched hbar")
    if f.poly.degree() > 0 or g.poly.degree() > 0:
        raise UnsupportedPair("closed form requires constant polynomial parts")
    prefactor, width = gaussian_star_isotropic(f.width, g.width, f.hbar, cls)
    poly = (f.poly * g.poly).scale(prefactor)
    return GaussPoly(width, f.hbar, f.pi_power + g.pi_power, poly)


@dataclass(frozen=True)
class ExpectationResult:
    """Both sides of the positivity chain for one observable symbol.

    ``lhs`` is the integral of (g* star g) against the state; ``rhs`` is
    (2 pi hbar) times the integral of (g star F)* (g star F), the square the
    chain of star manipulations actually produces.  The two agree exactly
    for every terminating pair, in both the elliptic and hyperbolic classes.
    """

    lhs: PiScalar
    rhs: PiScalar

    def prediction(self) -> Fraction:
        """Real part of the lhs; the imaginary part is exactly zero."""
        re_c, im_c = scalar_parts(self.lhs.plain())
        if im_c != 0:
            raise ArithmeticError(f"expectation has a residual unit part: {self.lhs}")
        return re_c


def expectation(
    g: PolySymbol, state: GaussPoly, hbar: Fraction, cls: CompClass
) -> ExpectationResult:
    """Expectation of the star square g* star g in the given state."""
    hbar = Fraction(hbar)
    gs_g = star(g.conjugate(), g, hbar, cls)
    lhs = integrate(state.mul_poly(gs_g))
    gf = star(g, state, hbar, cls)
    rhs_integral = integrate(gf.conjugate() * gf)
    rhs = PiScalar(scalar_from_fraction(2 * hbar, Ring.REAL), 1) * rhs_integral
    return ExpectationResult(lhs=lhs, rhs=rhs)


@dataclass(frozen=True)
class NegativityWitness:
    """A symbol with negative star-square expectation.

    ``symbol`` is the raw hit rescaled by the integer ``scale``: the
    expectation scales quadratically under real rescaling, so any negative
    hit normalizes to expectation <= -1 exactly.
    """

    symbol: PolySymbol
    expectation: Fraction
    trial: int
    raw_symbol: PolySymbol
    raw_expectation: Fraction
    scale: int = 1


def negativity_trials(
    state: GaussPoly,
    hbar: Fraction,
    degree_bound: int,
    trials: int,
    seed: int,
    cls: CompClass,
    min_degree: int = 1,
):
    """Yield (trial, symbol, exact expectation) for the randomized search."""
    ring = class_ring(cls)
    rng = random.Random(seed)
    for trial in range(trials):
        g = random_symbol(
            rng, ring, max_degree=degree_bound, max_terms=4, min_degree=min_degree, bound=4
        )
        value = expectation(g, state, hbar, cls).prediction()
        yield (trial, g, value)


def negativity_search(
    state: GaussPoly,
    hbar: Fraction,
    degree_bound: int,
    trials: int,
    seed: int,
    cls: CompClass,
    min_degree: int = 1,
) -> Optional[NegativityWitness]:
    """Random search for a symbol whose star-square expectation is negative.

    Constant symbols are excluded by default: for a split-complex constant c
    the square c* c can already be negative (c = j gives -1) with no
    phase-space structure involved, so they are not probative and are
    documented separately.
    """
    for trial, g, value in negativity_trials(
        state, hbar, degree_bound, trials, seed, cls, min_degree
    ):
        if value < 0:
            lam = _normalizing_scale(value)
            return NegativityWitness(
                symbol=g.scale(Fraction(lam)),
                expectation=value * lam * lam,
                trial=trial,
                raw_symbol=g,
                raw_expectation=value,
                scale=lam,
            )
    return None


def _normalizing_scale(value: Fraction) -> int:
    """Smallest positive integer lam with lam**2 * |value| >= 1."""
    q = 1 / abs(value)
    lam = math.isqrt(math.ceil(q))
    while lam * lam < q:
        lam += 1
    return max(lam, 1)


# -- phase-space realizations of the two-product framework --------------------


def _phase_algebra(
    cls: CompClass,
    alpha_fn,
    sigma_fn,
    max_degree: int,
    max_terms: int,
) -> TwoProductAlgebra:
    target = class_ring(cls)
    unit = scalar_unit(target)

    def sample(rng: random.Random) -> PolySymbol:
        return random_symbol(rng, Ring.REAL, max_degree=max_degree, max_terms=max_terms)

    return TwoProductAlgebra(
        name=f"phase-space-{cls.name}",
        cls=cls,
        alpha=alpha_fn,
        sigma=sigma_fn,
        sample=sample,
        alpha_j_power=0,
        mul_j=lambda s: s * unit,
    )


def moyal_algebra(
    hbar: Fraction = Fraction(1), max_degree: int = 3, max_terms: int = 5
) -> TwoProductAlgebra:
    cls = CompClass.elliptic(hbar)
    return _phase_algebra(
        cls,
        lambda f, g: moyal_alpha(f, g, cls.hbar),
        lambda f, g: moyal_sigma(f, g, cls.hbar),
        max_degree,
        max_terms,
    )


def hyper_algebra(
    hbar: Fraction = Fraction(1), max_degree: int = 3, max_terms: int = 5
) -> TwoProductAlgebra:
    cls = CompClass.hyperbolic(hbar)
    return _phase_algebra(
        cls,
        lambda f, g: hyper_alpha(f, g, cls.hbar),
        lambda f, g: hyper_sigma(f, g, cls.hbar),
        max_degree,
        max_terms,
    )


def poisson_algebra(
    hbar: Fraction = Fraction(1), max_degree: int = 3, max_terms: int = 5
) -> TwoProductAlgebra:
    """Canonical bracket plus plain multiplication: the parabolic reference."""
    cls = CompClass.parabolic(hbar)
    return _phase_algebra(
        cls,
        lambda f, g: poisson(f, g),
        lambda f, g: f * g,
        max_degree,
        max_terms,
    )


def algebra_for(cls: CompClass, max_degree: int = 3, max_terms: int = 5) -> TwoProductAlgebra:
    if cls.j_squared == -1:
        return moyal_algebra(cls.hbar, max_degree, max_terms)
    if cls.j_squared == 1:
        return hyper_algebra(cls.hbar, max_degree, max_terms)
    return poisson_algebra(cls.hbar, max_degree, max_terms)


def check_phase_space_axioms(
    cls: CompClass,
    samples: int,
    seed: int = 0,
    max_degree: int = 3,
    max_terms: int = 5,
) -> list[PropertyReport]:
    """The five two-product checkers on the class's phase-space realization."""
    alg = algebra_for(cls, max_degree=max_degree, max_terms=max_terms)
    return run_axiom_suite(alg, samples, seed)
