"""Square matrices over split-complex (or Gaussian-rational) entries.

All invertibility and spectrum questions for split-complex matrices are
routed through the lightcone decomposition A = A_plus*e_plus + A_minus*e_minus
with idempotents e_pm = (1 pm j)/2, which turns them into pairs of real
problems: products map componentwise and A is invertible over the split
ring iff both real components are invertible.

Exact rational determinants back every headline claim; floating eigenvalue
routes (numpy) are used for spectra and carry explicit tolerances.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .report import PropertyReport
from .sampling import rand_fraction
from .splitc import SplitComplex

DET_TOL = 1e-10  # determinant magnitude below this counts as singular
REAL_EIG_TOL = 1e-9  # imaginary part below this counts as a real eigenvalue


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions."""


class DegenerateError(RuntimeError):
    """No usable sample was found for a randomized estimate."""


class DMatrix:
    """An n-by-n matrix with exact ring entries.

    Entries may be any scalar supporting +, -, *, ``conjugate`` and
    ``is_zero`` (split-complex in the main line of use, Gaussian rationals
    for the elliptic standard representation).  The lightcone operations
    require split-complex entries.
    """

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence]) -> None:
        entries = tuple(tuple(row) for row in rows)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise DimensionMismatch("matrix must be square")
        self.entries = entries

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int, one=None, zero=None) -> "DMatrix":
        one = SplitComplex(1, 0) if one is None else one
        zero = one - one if zero is None else zero
        return cls([[one if i == k else zero for k in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, zero=None) -> "DMatrix":
        zero = SplitComplex(0, 0) if zero is None else zero
        return cls([[zero for _ in range(n)] for _ in range(n)])

    @classmethod
    def scalar(cls, n: int, value) -> "DMatrix":
        return cls.identity(n, one=value, zero=value - value)

    def __eq__(self, other) -> bool:
        return isinstance(other, DMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "DMatrix") -> "DMatrix":
        self._check_dim(other)
        return DMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "DMatrix") -> "DMatrix":
        self._check_dim(other)
        return DMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "DMatrix":
        return DMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, DMatrix):
            self._check_dim(other)
            n = self.n
            cols = list(zip(*other.entries))
            return DMatrix(
                [
                    [_dot(self.entries[i], cols[k]) for k in range(n)]
                    for i in range(n)
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "DMatrix":
        return DMatrix([[c * a for a in row] for row in self.entries])

    def map_entries(self, fn: Callable) -> "DMatrix":
        return DMatrix([[fn(a) for a in row] for row in self.entries])

    def transpose(self) -> "DMatrix":
        return DMatrix(list(zip(*self.entries)))

    def hermitian_conj(self) -> "DMatrix":
        return DMatrix(
            [
                [self.entries[k][i].conjugate() for k in range(self.n)]
                for i in range(self.n)
            ]
        )

    def trace(self):
        t = self.entries[0][0]
        for i in range(1, self.n):
            t = t + self.entries[i][i]
        return t

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.entries for a in row)

    def kron(self, other: "DMatrix") -> "DMatrix":
        m, n = self.n, other.n
        rows = []
        for i in range(m):
            for k in range(n):
                rows.append(
                    [
                        self.entries[i][j] * other.entries[k][l]
                        for j in range(m)
                        for l in range(n)
                    ]
                )
        return DMatrix(rows)

    def block(self, i: int, j: int, size: int) -> "DMatrix":
        return DMatrix(
            [
                self.entries[i * size + r][j * size : (j + 1) * size]
                for r in range(size)
            ]
        )

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(a) for a in row) for row in self.entries) + "]"

    __repr__ = __str__

    def _check_dim(self, other: "DMatrix") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")


def _dot(row, col):
    acc = row[0] * col[0]
    for a, b in zip(row[1:], col[1:]):
        acc = acc + a * b
    return acc


def trace_inner_product(a: DMatrix, b: DMatrix):
    """tr(A* B); conjugate-symmetric and possibly degenerate over the split ring."""
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n}x{a.n} vs {b.n}x{b.n}")
    acc = None
    for i in range(a.n):
        for k in range(a.n):
            term = a.entries[k][i].conjugate() * b.entries[k][i]
            acc = term if acc is None else acc + term
    return acc


# -- lightcone decomposition ----------------------------------------------


@dataclass(frozen=True)
class LightconePair:
    """Real coefficient matrices of the idempotents e_plus and e_minus."""

    plus: tuple[tuple[Fraction, ...], ...]
    minus: tuple[tuple[Fraction, ...], ...]


def decompose(a: DMatrix) -> LightconePair:
    plus, minus = [], []
    for row in a.entries:
        prow, mrow = [], []
        for z in row:
            u, v = z.lightcone()
            prow.append(u)
            mrow.append(v)
        plus.append(tuple(prow))
        minus.append(tuple(mrow))
    return LightconePair(plus=tuple(plus), minus=tuple(minus))


def recompose(pair: LightconePair) -> DMatrix:
    return DMatrix(
        [
            [SplitComplex.from_lightcone(u, v) for u, v in zip(prow, mrow)]
            for prow, mrow in zip(pair.plus, pair.minus)
        ]
    )


def det_fraction(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by rational Gaussian elimination."""
    m = [list(row) for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def det(a: DMatrix) -> SplitComplex:
    """Exact determinant over the split ring via the lightcone components."""
    pair = decompose(a)
    return SplitComplex.from_lightcone(det_fraction(pair.plus), det_fraction(pair.minus))


def is_invertible(a: DMatrix) -> bool:
    pair = decompose(a)
    return det_fraction(pair.plus) != 0 and det_fraction(pair.minus) != 0


def is_singular_exact(t: DMatrix, lam: SplitComplex) -> bool:
    """Exact-rational singularity test for T - lam*I (the oracle route)."""
    return not is_invertible(t - DMatrix.scalar(t.n, lam))


def para_spectrum_witness(t: DMatrix, lam: SplitComplex, tol: float = DET_TOL) -> bool:
    """Floating-point test that T - lam*I has no inverse over the split ring.

    Checks |det(T_plus - lam_plus*I)| <= tol or the minus analogue; agrees
    with `is_singular_exact` on rational inputs (covered by tests).
    """
    pair = decompose(t)
    lu, lv = lam.lightcone()
    n = t.n
    plus = np.array([[float(x) for x in row] for row in pair.plus]) - float(lu) * np.eye(n)
    minus = np.array([[float(x) for x in row] for row in pair.minus]) - float(lv) * np.eye(n)
    return abs(np.linalg.det(plus)) <= tol or abs(np.linalg.det(minus)) <= tol


@dataclass(frozen=True)
class ParaSpectralResult:
    """Minimizer data for min{ |‖lam‖| : T - lam*I not invertible }.

    Whenever the witness set is nonempty it contains a line in lightcone
    coordinates with one coordinate pinned to a real eigenvalue of T_plus
    or T_minus and the other free; setting the free coordinate to zero puts
    the seminorm magnitude at exactly zero.  The radius is therefore always
    exactly 0 when a witness exists, generalizing the scalar-operator case
    lam = (c/2)(1 -+ j).
    """

    radius: Fraction
    witness: SplitComplex
    branch: str  # "plus" or "minus": which real component supplied the eigenvalue
    component_eigenvalue: float

    def to_dict(self) -> dict:
        return {
            "radius": str(self.radius),
            "witness": self.witness.to_json(),
            "branch": self.branch,
            "component_eigenvalue": self.component_eigenvalue,
        }


def _scalar_multiple_of_identity(t: DMatrix) -> Optional[SplitComplex]:
    z = t.entries[0][0]
    for i in range(t.n):
        for k in range(t.n):
            want_zero = i != k
            e = t.entries[i][k]
            if want_zero and not e.is_zero():
                return None
            if not want_zero and e != z:
                return None
    return z if isinstance(z, SplitComplex) else None


def _real_eigenvalues(rows: tuple[tuple[Fraction, ...], ...]) -> list[float]:
    arr = np.array([[float(x) for x in row] for row in rows])
    eigs = np.linalg.eigvals(arr)
    out = [float(e.real) for e in eigs if abs(e.imag) <= REAL_EIG_TOL * max(1.0, abs(e))]
    out.sort()
    return out


def para_spectral_radius(t: DMatrix) -> Optional[ParaSpectralResult]:
    """min over the non-invertibility witness set of |‖lam‖|, or None if empty.

    The witness set is the union of the lines {lam_plus = mu} for real
    eigenvalues mu of T_plus and {lam_minus = nu} for real eigenvalues nu of
    T_minus; the closed-form minimum over each line is 0 (free lightcone
    coordinate set to zero), so the result is Fraction(0) with an explicit
    witness whenever either real component has a real eigenvalue.
    """
    z = _scalar_multiple_of_identity(t)
    if z is not None:
        u, _ = z.lightcone()
        witness = SplitComplex.from_lightcone(u, 0)
        return ParaSpectralResult(
            radius=Fraction(0),
            witness=witness,
            branch="plus",
            component_eigenvalue=float(u),
        )
    pair = decompose(t)
    plus_eigs = _real_eigenvalues(pair.plus)
    if plus_eigs:
        mu = plus_eigs[0]
        witness = SplitComplex.from_lightcone(Fraction(mu), 0)
        return ParaSpectralResult(Fraction(0), witness, "plus", mu)
    minus_eigs = _real_eigenvalues(pair.minus)
    if minus_eigs:
        nu = minus_eigs[0]
        witness = SplitComplex.from_lightcone(0, Fraction(nu))
        return ParaSpectralResult(Fraction(0), witness, "minus", nu)
    return None


# -- complex comparison operator --------------------------------------------


def complex_spectral_radius(t) -> float:
    """Operator 2-norm sqrt(max eigenvalue of T* T) for a complex matrix.

    Accepts anything `numpy.asarray` turns into a square complex matrix.
    """
    arr = np.asarray(t, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    gram = arr.conj().T @ arr
    eigs = np.linalg.eigvalsh(gram)
    top = float(eigs[-1])
    return math.sqrt(max(top, 0.0))


# -- operator para-norm ------------------------------------------------------


def vec_norm_squared(x: Sequence[SplitComplex]) -> Fraction:
    """Exact quadratic form sum_i x_i* x_i of a split-complex vector."""
    total = Fraction(0)
    for z in x:
        total += z.norm_squared()
    return total


def apply_matrix(t: DMatrix, x: Sequence[SplitComplex]) -> tuple[SplitComplex, ...]:
    out = []
    for row in t.entries:
        acc = row[0] * x[0]
        for a, b in zip(row[1:], x[1:]):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def _signed_ratio(t: DMatrix, x: Sequence[SplitComplex]) -> Optional[tuple[int, Fraction]]:
    """(sign, ratio**2) of ‖Tx‖/‖x‖, exact; None if ‖x‖ = 0."""
    sx = vec_norm_squared(x)
    if sx == 0:
        return None
    stx = vec_norm_squared(apply_matrix(t, x))
    if stx == 0:
        return (0, Fraction(0))
    sign = 1 if (stx > 0) == (sx > 0) else -1
    return (sign, abs(stx) / abs(sx))


def _ratio_key(sr: tuple[int, Fraction]) -> tuple[int, Fraction]:
    # orders signed ratios sign*sqrt(q): negatives first (larger q = smaller),
    # then zero, then positives by increasing q
    sign, q = sr
    return (sign, -q if sign < 0 else q)


def operator_para_norm(
    t: DMatrix,
    samples: int = 200,
    refine: int = 60,
    seed: int = 0,
    real_domain: bool = False,
) -> float:
    """Randomized upper-bound estimate of the operator para-norm.

    The para-norm is the infimum over ‖x‖ != 0 of the signed ratio
    ‖Tx‖/‖x‖ with the vector seminorm sign(s)*sqrt(|s|), s = sum x_i* x_i.
    Sampling covers both hyperboloid families (the ratio is scale invariant,
    so this is sampling ‖x‖ = +1 and ‖x‖ = -1), seeded with the standard
    basis vectors; local perturbations then descend around the best point.
    The returned value never undershoots the true infimum and is
    non-increasing in the sample budget.

    With ``real_domain`` the domain is restricted to real vectors, where the
    seminorm is Euclidean.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    n = t.n
    zero = Fraction(0)

    def rand_vector() -> tuple[SplitComplex, ...]:
        return tuple(
            SplitComplex(
                rand_fraction(rng, 4, 4),
                zero if real_domain else rand_fraction(rng, 4, 4),
            )
            for _ in range(n)
        )

    candidates: list[tuple[SplitComplex, ...]] = [
        tuple(
            SplitComplex(1 if i == k else 0, 0) for k in range(n)
        )
        for i in range(n)
    ]
    attempts = 0
    while len(candidates) < n + samples and attempts < 50 * (n + samples):
        attempts += 1
        candidates.append(rand_vector())

    best: Optional[tuple[int, Fraction]] = None
    best_x: Optional[tuple[SplitComplex, ...]] = None
    for x in candidates:
        sr = _signed_ratio(t, x)
        if sr is None:
            continue
        if best is None or _ratio_key(sr) < _ratio_key(best):
            best, best_x = sr, x
    if best is None or best_x is None:
        raise DegenerateError("no sample with nonzero vector seminorm")

    step = Fraction(1, 2)
    for _ in range(refine):
        i = rng.randrange(n)
        delta_re = step * rng.choice((-1, 1))
        delta_im = zero if real_domain else step * rng.choice((-1, 1, 0))
        trial = list(best_x)
        trial[i] = trial[i] + SplitComplex(delta_re, delta_im)
        sr = _signed_ratio(t, tuple(trial))
        if sr is not None and _ratio_key(sr) < _ratio_key(best):
            best, best_x = sr, tuple(trial)
        else:
            step = step / 2 if step > Fraction(1, 1024) else Fraction(1, 2)

    sign, q = best
    return sign * math.sqrt(float(q))


def para_cstar_check(
    mats: Sequence[DMatrix],
    samples: int = 200,
    refine: int = 60,
    seed: int = 0,
    tol: float = 1e-6,
) -> PropertyReport:
    """Evaluate both para C*-conditions on all pairs using para-norm estimates.

    |‖AB‖| >= |‖A‖| |‖B‖| and |‖A* A‖| = ‖A‖**2 are checked with the
    stochastic upper-bound estimator, so this is a heuristic screen: reported
    violations may be estimator artifacts and no existence theorem backs the
    conditions for general matrices.
    """
    report = PropertyReport(
        law="para-cstar-conditions",
        samples=0,
        notes="heuristic: sides are stochastic para-norm upper bounds",
    )
    norms = [operator_para_norm(m, samples, refine, seed + k) for k, m in enumerate(mats)]
    for i, a in enumerate(mats):
        star_norm = operator_para_norm(
            a.hermitian_conj() * a, samples, refine, seed + 101 + i
        )
        report.samples += 1
        if abs(abs(star_norm) - norms[i] ** 2) > tol:
            report.add_failure(
                {"matrix": str(a), "condition": "|‖A*A‖| = ‖A‖^2"},
                lhs=f"{abs(star_norm)!r}",
                rhs=f"{norms[i] ** 2!r}",
            )
        for j, b in enumerate(mats):
            prod_norm = operator_para_norm(a * b, samples, refine, seed + 211 + 7 * i + j)
            report.samples += 1
            if abs(prod_norm) < abs(norms[i]) * abs(norms[j]) - tol:
                report.add_failure(
                    {"a": str(a), "b": str(b), "condition": "|‖AB‖| >= |‖A‖||‖B‖|"},
                    lhs=f"{abs(prod_norm)!r}",
                    rhs=f"{abs(norms[i]) * abs(norms[j])!r}",
                )
    return report


# -- JSON wire format --------------------------------------------------------


def matrix_to_json(a: DMatrix) -> dict:
    return {
        "n": a.n,
        "entries": [[z.to_json() for z in row] for row in a.entries],
    }


def matrix_from_json(data: dict) -> DMatrix:
    n = int(data["n"])
    entries = data["entries"]
    if len(entries) != n or any(len(row) != n for row in entries):
        raise DimensionMismatch("entries shape does not match n")
    return DMatrix(
        [[SplitComplex.from_json(cell) for cell in row] for row in entries]
    )
