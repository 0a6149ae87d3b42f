"""Abstract two-product algebras: a Lie product alpha and a Jordan product sigma
linked by the class associator identity, with exact axiom checkers.

The class constant is the square of a formal unit J (-1 elliptic, 0
parabolic, +1 hyperbolic).  J itself is never stored numerically: algebras
carry the J-stripped bilinear map ``alpha`` together with ``alpha_j_power``,
the number of formal J factors one application of the full product
contributes (1 for the matrix standard representation, 0 for the phase-space
realizations).  Every checked identity is J-homogeneous, so even powers
reduce to the numeric class constant and odd powers are delegated to an
optional ``mul_j`` hook into the carrier's coefficient ring.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .dmatrix import DMatrix
from .report import PropertyReport
from .rings import GaussianRational
from .sampling import rand_gauss, rand_split
from .splitc import SplitComplex


class ClassMismatch(ValueError):
    """Tensor composition attempted across different composability classes."""


class UnsupportedCoefficientRing(TypeError):
    """The carrier's scalar ring has no element J with the declared square."""


@dataclass(frozen=True)
class CompClass:
    """A composability class: J**2 in {-1, 0, +1} plus the deformation scale."""

    j_squared: int
    hbar: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.j_squared not in (-1, 0, 1):
            raise ValueError("j_squared must be -1, 0 or +1")
        object.__setattr__(self, "hbar", Fraction(self.hbar))
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")

    @property
    def name(self) -> str:
        return {-1: "elliptic", 0: "parabolic", 1: "hyperbolic"}[self.j_squared]

    @classmethod
    def elliptic(cls, hbar=Fraction(1)) -> "CompClass":
        return cls(-1, Fraction(hbar))

    @classmethod
    def parabolic(cls, hbar=Fraction(1)) -> "CompClass":
        return cls(0, Fraction(hbar))

    @classmethod
    def hyperbolic(cls, hbar=Fraction(1)) -> "CompClass":
        return cls(1, Fraction(hbar))

    @classmethod
    def from_name(cls, name: str, hbar=Fraction(1)) -> "CompClass":
        table = {"elliptic": -1, "parabolic": 0, "hyperbolic": 1}
        if name not in table:
            raise ValueError(f"unknown class {name!r}")
        return cls(table[name], Fraction(hbar))


@dataclass
class TwoProductAlgebra:
    """A carrier with bilinear products alpha (Lie side) and sigma (Jordan side).

    ``alpha`` is the J-stripped map; ``alpha_j_power`` says how many formal J
    factors the full product carries.  Carrier elements must support +, -,
    unary -, scalar multiplication by Fraction and ``is_zero``.
    """

    name: str
    cls: CompClass
    alpha: Callable[[Any, Any], Any]
    sigma: Callable[[Any, Any], Any]
    sample: Callable[[random.Random], Any]
    alpha_j_power: int = 0
    mul_j: Optional[Callable[[Any], Any]] = None
    matrix_dim: Optional[int] = None
    rand_entry: Optional[Callable[[random.Random], Any]] = None
    scalar_one: Any = None


def product_of(alg: TwoProductAlgebra, tag: str) -> Callable[[Any, Any], Any]:
    if tag == "alpha":
        return alg.alpha
    if tag == "sigma":
        return alg.sigma
    raise ValueError(f"unknown product tag {tag!r}")


def _associator(product: Callable[[Any, Any], Any], a, b, c):
    return product(product(a, b), c) - product(a, product(b, c))


def associator(alg: TwoProductAlgebra, tag: str, a, b, c):
    """Exact associator (a tag b) tag c - a tag (b tag c)."""
    return _associator(product_of(alg, tag), a, b, c)


def check_jordan(alg: TwoProductAlgebra, samples: int, seed: int = 0) -> PropertyReport:
    """Symmetry and the power-associativity identity for sigma."""
    rng = random.Random(seed)
    report = PropertyReport(law="jordan", samples=samples)
    for _ in range(samples):
        a, b = alg.sample(rng), alg.sample(rng)
        sym = alg.sigma(a, b) - alg.sigma(b, a)
        if not sym.is_zero():
            report.add_failure({"a": str(a), "b": str(b), "identity": "symmetry"},
                               lhs=str(alg.sigma(a, b)), rhs=str(alg.sigma(b, a)))
            continue
        a2 = alg.sigma(a, a)
        lhs = alg.sigma(a, alg.sigma(b, a2))
        rhs = alg.sigma(alg.sigma(a, b), a2)
        if not (lhs - rhs).is_zero():
            report.add_failure({"a": str(a), "b": str(b), "identity": "power-associativity"},
                               lhs=str(lhs), rhs=str(rhs))
    return report


def check_lie(alg: TwoProductAlgebra, samples: int, seed: int = 0) -> PropertyReport:
    """Skew-symmetry and the Jacobi identity for alpha."""
    rng = random.Random(seed)
    report = PropertyReport(law="lie-jacobi", samples=samples)
    for _ in range(samples):
        a, b, c = alg.sample(rng), alg.sample(rng), alg.sample(rng)
        skew = alg.alpha(a, b) + alg.alpha(b, a)
        if not skew.is_zero():
            report.add_failure({"a": str(a), "b": str(b), "identity": "skew-symmetry"},
                               lhs=str(alg.alpha(a, b)), rhs=str(-alg.alpha(b, a)))
            continue
        jac = (
            alg.alpha(a, alg.alpha(b, c))
            + alg.alpha(c, alg.alpha(a, b))
            + alg.alpha(b, alg.alpha(c, a))
        )
        if not jac.is_zero():
            report.add_failure({"a": str(a), "b": str(b), "c": str(c), "identity": "jacobi"},
                               lhs=str(jac), rhs="0")
    return report


def check_leibniz(alg: TwoProductAlgebra, samples: int, seed: int = 0) -> PropertyReport:
    """alpha as a derivation of sigma and of alpha itself."""
    rng = random.Random(seed)
    report = PropertyReport(law="leibniz", samples=samples)
    for _ in range(samples):
        a, b, c = alg.sample(rng), alg.sample(rng), alg.sample(rng)
        lhs = alg.alpha(a, alg.sigma(b, c))
        rhs = alg.sigma(alg.alpha(a, b), c) + alg.sigma(b, alg.alpha(a, c))
        if not (lhs - rhs).is_zero():
            report.add_failure({"a": str(a), "b": str(b), "c": str(c), "identity": "alpha-over-sigma"},
                               lhs=str(lhs), rhs=str(rhs))
            continue
        lhs2 = alg.alpha(a, alg.alpha(b, c))
        rhs2 = alg.alpha(alg.alpha(a, b), c) + alg.alpha(b, alg.alpha(a, c))
        if not (lhs2 - rhs2).is_zero():
            report.add_failure({"a": str(a), "b": str(b), "c": str(c), "identity": "alpha-over-alpha"},
                               lhs=str(lhs2), rhs=str(rhs2))
    return report


def comp_identity_coefficient(alg: TwoProductAlgebra) -> Fraction:
    """Coefficient of the alpha associator in the class identity.

    The identity couples the sigma associator to the associator of the full
    product J*alpha; extracting the formal J factors (two per alpha
    associator application plus the explicit J**2) leaves
    (hbar**2/4) * j_squared**(1 + alpha_j_power) on the J-stripped map.
    """
    j2 = alg.cls.j_squared
    return Fraction(alg.cls.hbar**2, 4) * Fraction(j2 ** (1 + alg.alpha_j_power))


def check_comp_identity(alg: TwoProductAlgebra, samples: int, seed: int = 0) -> PropertyReport:
    """The class associator identity tying sigma's associativity defect to alpha's."""
    rng = random.Random(seed)
    coef = comp_identity_coefficient(alg)
    report = PropertyReport(law="composability-identity", samples=samples)
    for _ in range(samples):
        a, b, c = alg.sample(rng), alg.sample(rng), alg.sample(rng)
        residual = _associator(alg.sigma, a, b, c) + coef * _associator(alg.alpha, a, b, c)
        if not residual.is_zero():
            report.add_failure({"a": str(a), "b": str(b), "c": str(c)},
                               lhs=str(residual), rhs="0")
    return report


def paper_beta_sign(cls: CompClass) -> int:
    """Sign choice that realizes ordinary multiplication in the standard rep."""
    return -1 if cls.j_squared == -1 else 1


def beta(alg: TwoProductAlgebra, sign: int, a, b):
    """The associative product sigma +- (J hbar / 2) alpha.

    Even total J powers reduce to the numeric class constant; an odd power
    needs a J in the coefficient ring, supplied by the algebra's ``mul_j``.
    """
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    k = 1 + alg.alpha_j_power
    numeric = Fraction(alg.cls.j_squared) ** (k // 2)
    factor = Fraction(sign) * (alg.cls.hbar / 2) * numeric
    v = alg.alpha(a, b)
    if k % 2 == 0:
        term = factor * v
    else:
        if alg.mul_j is None:
            raise UnsupportedCoefficientRing(
                f"carrier of {alg.name!r} has no J with J**2 = {alg.cls.j_squared}"
            )
        term = factor * alg.mul_j(v)
    return alg.sigma(a, b) + term


def check_beta_associative(
    alg: TwoProductAlgebra, samples: int, seed: int = 0, sign: Optional[int] = None
) -> PropertyReport:
    if sign is None:
        sign = paper_beta_sign(alg.cls)
    rng = random.Random(seed)
    report = PropertyReport(law="beta-associativity", samples=samples)

    def prod(u, v):
        return beta(alg, sign, u, v)

    for _ in range(samples):
        a, b, c = alg.sample(rng), alg.sample(rng), alg.sample(rng)
        residual = _associator(prod, a, b, c)
        if not residual.is_zero():
            report.add_failure({"a": str(a), "b": str(b), "c": str(c), "sign": str(sign)},
                               lhs=str(residual), rhs="0")
    return report


def run_axiom_suite(alg: TwoProductAlgebra, samples: int, seed: int = 0) -> list[PropertyReport]:
    """All five checkers with independent derived seeds."""
    return [
        check_jordan(alg, samples, seed),
        check_lie(alg, samples, seed + 1),
        check_leibniz(alg, samples, seed + 2),
        check_comp_identity(alg, samples, seed + 3),
        check_beta_associative(alg, samples, seed + 4),
    ]


# -- standard matrix representation ------------------------------------------


def _rand_matrix(rand_entry: Callable, n: int) -> Callable[[random.Random], DMatrix]:
    def sample(rng: random.Random) -> DMatrix:
        return DMatrix([[rand_entry(rng) for _ in range(n)] for _ in range(n)])

    return sample


def standard_rep(cls: CompClass, n: int) -> TwoProductAlgebra:
    """Commutator/anticommutator products on n-by-n matrices.

    Elliptic uses Gaussian-rational entries, hyperbolic split-complex ones.
    The parabolic class has no matrix route here; its reference realization
    is the polynomial Poisson algebra in `phasespace`.
    """
    if cls.j_squared == 0:
        raise UnsupportedCoefficientRing(
            "standard matrix representation needs j_squared in {-1, +1}"
        )
    if cls.j_squared == -1:
        one = GaussianRational(1, 0)
        unit = GaussianRational(0, 1)
        rand_entry = rand_gauss
    else:
        one = SplitComplex(1, 0)
        unit = SplitComplex(0, 1)
        rand_entry = rand_split
    inv_h = Fraction(1) / cls.hbar
    half = Fraction(1, 2)

    def alpha(a: DMatrix, b: DMatrix) -> DMatrix:
        return inv_h * (a * b - b * a)

    def sigma(a: DMatrix, b: DMatrix) -> DMatrix:
        return half * (a * b + b * a)

    return TwoProductAlgebra(
        name=f"standard-rep-{cls.name}-{n}x{n}",
        cls=cls,
        alpha=alpha,
        sigma=sigma,
        sample=_rand_matrix(rand_entry, n),
        alpha_j_power=1,
        mul_j=lambda m: m.map_entries(lambda e: unit * e),
        matrix_dim=n,
        rand_entry=rand_entry,
        scalar_one=one,
    )


# -- tensor composition -------------------------------------------------------


def _matrix_units(n: int, one) -> list[list[DMatrix]]:
    zero = one - one
    units = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(
                DMatrix(
                    [
                        [one if (r, c) == (i, j) else zero for c in range(n)]
                        for r in range(n)
                    ]
                )
            )
        units.append(row)
    return units


def tensor_compose(alg1: TwoProductAlgebra, alg2: TwoProductAlgebra) -> TwoProductAlgebra:
    """Algebra on the tensor-product carrier with the composed products.

    On pure tensors:

        (f1 (x) f2) alpha12 (g1 (x) g2) = (f1 a1 g1)(x)(f2 s2 g2) + (f1 s1 g1)(x)(f2 a2 g2)
        (f1 (x) f2) sigma12 (g1 (x) g2) = (f1 s1 g1)(x)(f2 s2 g2) + d (f1 a1 g1)(x)(f2 a2 g2)

    with d = J**2 hbar**2 / 4, extended bilinearly.  General elements of the
    matrix tensor carrier are expanded over matrix units E_ij (x) block_ij,
    which realizes the bilinear extension exactly.
    """
    if alg1.cls != alg2.cls:
        raise ClassMismatch(f"{alg1.cls} vs {alg2.cls}")
    if alg1.matrix_dim is None or alg2.matrix_dim is None:
        raise ValueError("tensor composition is implemented for matrix carriers")
    if alg1.alpha_j_power != alg2.alpha_j_power:
        raise ClassMismatch("factors disagree on the formal J power of alpha")

    cls = alg1.cls
    p = alg1.alpha_j_power
    n1, n2 = alg1.matrix_dim, alg2.matrix_dim
    one = alg1.scalar_one
    units = _matrix_units(n1, one)
    flat_units = [units[i][j] for i in range(n1) for j in range(n1)]
    # alpha1/sigma1 on the (finitely many) unit pairs, precomputed once
    alpha1_tab = [[alg1.alpha(u, v) for v in flat_units] for u in flat_units]
    sigma1_tab = [[alg1.sigma(u, v) for v in flat_units] for u in flat_units]
    d_coef = Fraction(cls.hbar**2, 4) * Fraction(cls.j_squared ** (1 + p))

    def blocks(m: DMatrix) -> list[DMatrix]:
        return [m.block(i, j, n2) for i in range(n1) for j in range(n1)]

    def combine(m: DMatrix, nmat: DMatrix, left_tab, left_other_tab, use_d: bool) -> DMatrix:
        bs_m, bs_n = blocks(m), blocks(nmat)
        acc: Optional[DMatrix] = None
        for a_idx in range(len(flat_units)):
            bm = bs_m[a_idx]
            if bm.is_zero():
                continue
            for b_idx in range(len(flat_units)):
                bn = bs_n[b_idx]
                if bn.is_zero():
                    continue
                if use_d:
                    term = left_tab[a_idx][b_idx].kron(alg2.sigma(bm, bn))
                    alpha_part = left_other_tab[a_idx][b_idx].kron(alg2.alpha(bm, bn))
                    term = term + d_coef * alpha_part
                else:
                    term = left_tab[a_idx][b_idx].kron(alg2.sigma(bm, bn)) + left_other_tab[
                        a_idx
                    ][b_idx].kron(alg2.alpha(bm, bn))
                acc = term if acc is None else acc + term
        if acc is None:
            acc = DMatrix.zeros(n1 * n2, zero=one - one)
        return acc

    def alpha12(m: DMatrix, nmat: DMatrix) -> DMatrix:
        return combine(m, nmat, alpha1_tab, sigma1_tab, use_d=False)

    def sigma12(m: DMatrix, nmat: DMatrix) -> DMatrix:
        return combine(m, nmat, sigma1_tab, alpha1_tab, use_d=True)

    mul_j = None
    if alg1.mul_j is not None:
        mul_j = alg1.mul_j  # entrywise scalar action, dimension agnostic

    return TwoProductAlgebra(
        name=f"({alg1.name})(x)({alg2.name})",
        cls=cls,
        alpha=alpha12,
        sigma=sigma12,
        sample=_rand_matrix(alg1.rand_entry, n1 * n2),
        alpha_j_power=p,
        mul_j=mul_j,
        matrix_dim=n1 * n2,
        rand_entry=alg1.rand_entry,
        scalar_one=one,
    )


def classical_limit_note(samples: int = 25, seed: int = 0) -> dict:
    """Computed facts behind the nilpotent-deformation-scale reading of J**2 = 0.

    In the parabolic polynomial realization sigma is plain function
    multiplication, so its associator vanishes identically; alpha is the
    canonical bracket.  No numeric limit of the deformation scale is taken
    anywhere.
    """
    from . import phasespace as ps

    x = ps.PolySymbol.variable("x")
    p = ps.PolySymbol.variable("p")
    alg = ps.poisson_algebra()
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        a, b, c = alg.sample(rng), alg.sample(rng), alg.sample(rng)
        if not _associator(alg.sigma, a, b, c).is_zero():
            failures += 1
    return {
        "bracket(x, p)": str(ps.poisson(x, p)),
        "bracket(x^2, p)": str(ps.poisson(x * x, p)),
        "sigma_associator_samples": samples,
        "sigma_associator_failures": failures,
        "note": "sigma is associative function multiplication; the skew product "
        "is the canonical bracket, so the parabolic class needs no limit",
    }
