"""Property harness for the reversed-triangle functional analysis.

Everything here runs over split-complex scalars and vectors with exact
rational data.  Square roots are eliminated wherever possible: an inequality
sqrt(A) >= sqrt(B) + sqrt(C) between nonnegative rationals is decided from
A - B - C >= 0 and (A - B - C)**2 >= 4 B C, so the axiom sweeps are exact.
Floats appear only in reported distances and in the minimizer scan values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .report import PropertyReport
from .splitc import SplitComplex

Vector = tuple[SplitComplex, ...]


class PreconditionSkip(Exception):
    """The pair falls outside the precondition of the law being checked."""


def vec_norm_squared(x: Sequence[SplitComplex]) -> Fraction:
    total = Fraction(0)
    for z in x:
        total += z.norm_squared()
    return total


def vec_seminorm(x: Sequence[SplitComplex]) -> float:
    s = vec_norm_squared(x)
    if s == 0:
        return 0.0
    root = math.sqrt(abs(float(s)))
    return root if s > 0 else -root


def split_distance(z: SplitComplex, w: SplitComplex) -> float:
    """|‖z - w‖|, the seminorm-magnitude distance on the split plane."""
    return abs((z - w).seminorm())


def _sqrt_ge_sum(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """sqrt(a) >= sqrt(b) + sqrt(c) for nonnegative rationals, exactly."""
    gap = a - b - c
    return gap >= 0 and gap * gap >= 4 * b * c


def segment_avoids_null(x: Vector, y: Vector) -> bool:
    """Exact test that ‖(1-t)x + t y‖ never vanishes for t in [0, 1].

    The quadratic form q(t) of the interpolated vector has rational
    coefficients; root location in [0, 1] is decided without square roots.
    """
    a2 = Fraction(0)
    a1 = Fraction(0)
    a0 = Fraction(0)
    for zx, zy in zip(x, y):
        dre, dim = zy.re - zx.re, zy.im - zx.im
        # (re + t*dre)**2 - (im + t*dim)**2
        a2 += dre * dre - dim * dim
        a1 += 2 * (zx.re * dre - zx.im * dim)
        a0 += zx.re * zx.re - zx.im * zx.im

    def q(t: Fraction) -> Fraction:
        return a2 * t * t + a1 * t + a0

    q0, q1 = q(Fraction(0)), q(Fraction(1))
    if q0 == 0 or q1 == 0:
        return False
    if (q0 > 0) != (q1 > 0):
        return False
    if a2 == 0:
        # linear: same-sign endpoints already rule out an interior root
        return True
    vertex = -a1 / (2 * a2)
    if 0 < vertex < 1:
        qv = q(vertex)
        if qv == 0 or (qv > 0) != (q0 > 0):
            return False
    return True


# -- para-metric spaces -------------------------------------------------------


@dataclass(frozen=True)
class FiniteParaMetric:
    """Finite labeled point set with a symmetric nonnegative distance table.

    Entries may be exact rationals (synthetic tables) or floats (tables
    derived from seminorm distances); comparisons fall back to a small
    tolerance only when a float is involved.
    """

    labels: tuple[str, ...]
    table: tuple[tuple, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("distance table shape does not match labels")

    @classmethod
    def from_split_points(
        cls, points: Sequence[SplitComplex], labels: Optional[Sequence[str]] = None
    ) -> "FiniteParaMetric":
        if labels is None:
            labels = [str(z) for z in points]
        table = tuple(
            tuple(split_distance(a, b) for b in points) for a in points
        )
        return cls(labels=tuple(labels), table=table)

    def d(self, i: int, j: int):
        return self.table[i][j]


def _ge(a, b, tol: float = 1e-12) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a >= b
    return float(a) >= float(b) - tol


def check_pm_axioms(
    space: FiniteParaMetric,
    path_oracle: Callable[[int, int, int], bool],
    tol: float = 1e-12,
) -> PropertyReport:
    """Nonnegativity, vanishing diagonal, symmetry, and the reversed triangle
    inequality on all triples the path oracle admits.

    The oracle answers whether (x, y, z) are connectable by a path avoiding
    zero-distance points; it is supplied explicitly because path geometry is
    not recoverable from a finite table.
    """
    n = len(space.labels)
    total = 0
    report = PropertyReport(law="pm-axioms", samples=0)
    for i in range(n):
        total += 1
        if not _ge(space.d(i, i), 0, tol) or not _ge(0, space.d(i, i), tol):
            report.add_failure({"x": space.labels[i], "axiom": "PM2"},
                               lhs=str(space.d(i, i)), rhs="0")
        for j in range(n):
            total += 1
            if not _ge(space.d(i, j), 0, tol):
                report.add_failure({"x": space.labels[i], "y": space.labels[j], "axiom": "PM1"},
                                   lhs=str(space.d(i, j)), rhs=">= 0")
            if space.d(i, j) != space.d(j, i):
                report.add_failure({"x": space.labels[i], "y": space.labels[j], "axiom": "PM3"},
                                   lhs=str(space.d(i, j)), rhs=str(space.d(j, i)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) < 3:
                    continue
                if not path_oracle(i, k, j):
                    report.skipped += 1
                    continue
                total += 1
                lhs = space.d(i, j)
                dik, dkj = space.d(i, k), space.d(k, j)
                if all(isinstance(v, Fraction) for v in (lhs, dik, dkj)):
                    rhs = dik + dkj
                else:
                    rhs = float(dik) + float(dkj)
                if not _ge(lhs, rhs, tol):
                    report.add_failure(
                        {
                            "x": space.labels[i],
                            "z": space.labels[k],
                            "y": space.labels[j],
                            "axiom": "PM4",
                        },
                        lhs=str(lhs),
                        rhs=str(rhs),
                    )
    report.samples = total
    return report


@dataclass(frozen=True)
class SampledSequence:
    """Finite prefix of a sequence; conclusions are prefix-level evidence only."""

    terms: tuple
    description: str = ""

    def __post_init__(self) -> None:
        if len(self.terms) < 2:
            raise ValueError("need a prefix of length >= 2")


def para_cauchy_detect(
    seq: SampledSequence,
    epsilon: float,
    big_n: int,
    dist: Callable = split_distance,
) -> bool:
    """d(x_m, x_n) > epsilon for all distinct m, n > N within the prefix.

    Distinct indices only: the diagonal d(x_n, x_n) = 0 would make the
    condition unsatisfiable for any sequence.
    """
    if len(seq.terms) <= big_n + 1:
        raise ValueError("prefix not longer than N")
    tail = seq.terms[big_n + 1 :]
    for a_idx in range(len(tail)):
        for b_idx in range(a_idx + 1, len(tail)):
            if not dist(tail[a_idx], tail[b_idx]) > epsilon:
                return False
    return True


def divergent_implies_para_cauchy_demo(
    seq: SampledSequence,
    reference,
    epsilon: float,
    dist: Callable = split_distance,
) -> PropertyReport:
    """Verify on the prefix: if d(x_n, x) > eps/2 past N then pairs exceed eps.

    N is taken as the first index after which the hypothesis holds on the
    whole remaining prefix; the report records a failure for every tail pair
    at or below epsilon.
    """
    report = PropertyReport(
        law="divergent-implies-para-cauchy",
        samples=0,
        notes="finite prefix evidence, not a proof about the full sequence",
    )
    far = [dist(t, reference) > epsilon / 2 for t in seq.terms]
    big_n = len(seq.terms)
    for idx in range(len(seq.terms)):
        if all(far[idx:]):
            big_n = idx
            break
    tail = seq.terms[big_n:]
    if len(tail) < 2:
        report.notes += "; hypothesis never stabilized on this prefix"
        return report
    for a_idx in range(len(tail)):
        for b_idx in range(a_idx + 1, len(tail)):
            report.samples += 1
            d_val = dist(tail[a_idx], tail[b_idx])
            if not d_val > epsilon:
                report.add_failure(
                    {"m": str(big_n + a_idx), "n": str(big_n + b_idx)},
                    lhs=str(d_val),
                    rhs=f"> {epsilon}",
                )
    return report


# -- para-normed vector axioms -------------------------------------------------


def check_pn_axioms(
    vectors: Sequence[Vector],
    scalars: Sequence[SplitComplex],
    include_pn2: bool = True,
) -> PropertyReport:
    """Scalar homogeneity on all pairs, reversed triangle on admissible pairs.

    PN1 is decided exactly through the quadratic forms: the form of alpha*x
    is exactly form(alpha)*form(x), which pins both the magnitude and the
    sign of the signed seminorm.  PN2 is evaluated on pairs whose connecting
    segment avoids the null set and whose form signs agree; note that for
    dimension >= 2 the split quadratic form has signature (n, n) and the
    reversed inequality genuinely fails off the scalar case, so failures on
    such input are findings about the space, not about the checker.
    """
    report = PropertyReport(law="pn-axioms", samples=0)
    for alpha in scalars:
        s_alpha = alpha.norm_squared()
        for x in vectors:
            report.samples += 1
            s_x = vec_norm_squared(x)
            scaled = tuple(alpha * z for z in x)
            s_scaled = vec_norm_squared(scaled)
            if s_scaled != s_alpha * s_x:
                report.add_failure(
                    {"alpha": str(alpha), "x": str(x), "axiom": "PN1"},
                    lhs=str(s_scaled),
                    rhs=str(s_alpha * s_x),
                )
    if not include_pn2:
        return report
    for a_idx in range(len(vectors)):
        for b_idx in range(a_idx + 1, len(vectors)):
            x, y = vectors[a_idx], vectors[b_idx]
            s_x, s_y = vec_norm_squared(x), vec_norm_squared(y)
            if s_x == 0 or s_y == 0 or (s_x > 0) != (s_y > 0):
                report.skipped += 1
                continue
            if not segment_avoids_null(x, y):
                report.skipped += 1
                continue
            report.samples += 1
            s_sum = vec_norm_squared(tuple(a + b for a, b in zip(x, y)))
            if not _sqrt_ge_sum(abs(s_sum), abs(s_x), abs(s_y)):
                report.add_failure(
                    {"x": str(x), "y": str(y), "axiom": "PN2"},
                    lhs=f"|form(x+y)| = {abs(s_sum)}",
                    rhs=f"needs sqrt >= sqrt({abs(s_x)}) + sqrt({abs(s_y)})",
                )
    return report


# -- scalar identities ---------------------------------------------------------


def polarization_residual(x: SplitComplex, y: SplitComplex) -> SplitComplex:
    """x* y minus its polarization expansion (identically zero in the ring)."""
    j = SplitComplex(0, 1)
    quarter = Fraction(1, 4)

    def q(z: SplitComplex) -> SplitComplex:
        return z.conjugate() * z

    expansion = quarter * (q(x + y) - q(x - y)) + quarter * (j * (q(x + j * y) - q(x - j * y)))
    return x.conjugate() * y - expansion


def parallelogram_residual(x: SplitComplex, y: SplitComplex) -> SplitComplex:
    def q(z: SplitComplex) -> SplitComplex:
        return z.conjugate() * z

    return q(x + y) + q(x - y) - Fraction(2) * (q(x) + q(y))


def polarization_check(pairs: Sequence[tuple[SplitComplex, SplitComplex]]) -> PropertyReport:
    report = PropertyReport(law="polarization-identity", samples=len(pairs))
    for x, y in pairs:
        residual = polarization_residual(x, y)
        if not residual.is_zero():
            report.add_failure({"x": str(x), "y": str(y)}, lhs=str(residual), rhs="0")
    return report


def parallelogram_check(pairs: Sequence[tuple[SplitComplex, SplitComplex]]) -> PropertyReport:
    report = PropertyReport(law="parallelogram-identity", samples=len(pairs))
    for x, y in pairs:
        residual = parallelogram_residual(x, y)
        if not residual.is_zero():
            report.add_failure({"x": str(x), "y": str(y)}, lhs=str(residual), rhs="0")
    return report


def para_cauchy_schwarz_pair(x: SplitComplex, y: SplitComplex) -> tuple[Fraction, Fraction]:
    """(|form(x*y)|, |form(x)*form(y)|) under the same-sign precondition.

    |<x, y>| is read as the seminorm magnitude of the scalar x* y, the only
    magnitude the split plane carries.  Raises PreconditionSkip when the
    signed seminorms have opposite signs.
    """
    s_x, s_y = x.norm_squared(), y.norm_squared()
    if s_x * s_y < 0:
        raise PreconditionSkip(f"norm signs differ for {x} and {y}")
    w = x.conjugate() * y
    return (abs(w.norm_squared()), abs(s_x * s_y))


def para_cauchy_schwarz_check(
    pairs: Sequence[tuple[SplitComplex, SplitComplex]],
) -> PropertyReport:
    """|<x,y>| >= ‖x‖‖y‖ on same-sign pairs, compared through squares."""
    report = PropertyReport(law="para-cauchy-schwarz", samples=0)
    equalities = 0
    for x, y in pairs:
        try:
            lhs_sq, rhs_sq = para_cauchy_schwarz_pair(x, y)
        except PreconditionSkip:
            report.skipped += 1
            continue
        report.samples += 1
        if lhs_sq < rhs_sq:
            report.add_failure({"x": str(x), "y": str(y)},
                               lhs=f"|form(x*y)| = {lhs_sq}", rhs=f"{rhs_sq}")
        elif lhs_sq == rhs_sq:
            equalities += 1
    report.notes = f"equality cases: {equalities}"
    return report


def para_normed_algebra_check(scalars: Sequence[SplitComplex]) -> PropertyReport:
    """|‖xy‖| >= |‖x‖||‖y‖| with the sign precondition; equality on scalars."""
    report = PropertyReport(law="para-normed-algebra", samples=0)
    for a_idx in range(len(scalars)):
        for b_idx in range(len(scalars)):
            x, y = scalars[a_idx], scalars[b_idx]
            s_x, s_y = x.norm_squared(), y.norm_squared()
            if s_x * s_y <= 0:
                report.skipped += 1
                continue
            report.samples += 1
            s_xy = (x * y).norm_squared()
            if abs(s_xy) < abs(s_x) * abs(s_y):
                report.add_failure({"x": str(x), "y": str(y)},
                                   lhs=str(abs(s_xy)), rhs=str(abs(s_x) * abs(s_y)))
    return report


# -- non-unique minimizer scan ---------------------------------------------


@dataclass(frozen=True)
class SegmentConvexSet:
    """The segment {(1-t) q0 + t q1 : t in [0, 1]} in the split vector space."""

    q0: Vector
    q1: Vector

    def __post_init__(self) -> None:
        if len(self.q0) != len(self.q1):
            raise ValueError("endpoint dimensions differ")

    def point_at(self, t: Fraction) -> Vector:
        t = Fraction(t)
        return tuple(
            a * (1 - t) + b * t for a, b in zip(self.q0, self.q1)
        )


@dataclass(frozen=True)
class Minimizer:
    t: Fraction
    point: Vector
    value: float


@dataclass(frozen=True)
class ScanResult:
    minimizers: tuple[Minimizer, ...]
    curve: tuple[tuple[float, float], ...]  # (t, |‖x - y(t)‖|) samples


def _distance_sq(x: Vector, m: SegmentConvexSet, t: Fraction) -> Fraction:
    y = m.point_at(t)
    return abs(vec_norm_squared(tuple(a - b for a, b in zip(x, y))))


def minimizer_scan(
    x: Vector,
    m: SegmentConvexSet,
    grid: int = 200,
    value_tol: float = 1e-9,
    t_merge: float = 1e-6,
) -> ScanResult:
    """Scan t in [0,1] for minimizers of |‖x - y(t)‖|, refining local minima.

    The squared distance is an exact rational function of rational t, so the
    scan and the ternary refinements compare exactly; only the reported
    values take a square root.  All minimizers within ``value_tol`` of the
    global minimum are returned (the indefinite seminorm makes several
    global minimizers possible).
    """
    if grid < 3:
        raise ValueError("grid must be >= 3")
    ts = [Fraction(k, grid) for k in range(grid + 1)]
    vals = [_distance_sq(x, m, t) for t in ts]
    curve = tuple((float(t), math.sqrt(float(v))) for t, v in zip(ts, vals))

    def refine(center: Fraction, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        for _ in range(80):
            third = (hi - lo) / 3
            m1, m2 = lo + third, hi - third
            if _distance_sq(x, m, m1) <= _distance_sq(x, m, m2):
                hi = m2
            else:
                lo = m1
        mid = (lo + hi) / 2
        mid_v = _distance_sq(x, m, mid)
        center_v = _distance_sq(x, m, center)
        # keep the exact grid point when refinement cannot beat it
        return (center, center_v) if center_v <= mid_v else (mid, mid_v)

    candidates: list[tuple[Fraction, Fraction]] = []
    step = Fraction(1, grid)
    for idx, t in enumerate(ts):
        left = vals[idx - 1] if idx > 0 else None
        right = vals[idx + 1] if idx < grid else None
        is_local_min = (left is None or vals[idx] <= left) and (
            right is None or vals[idx] <= right
        )
        if is_local_min:
            lo = max(Fraction(0), t - step)
            hi = min(Fraction(1), t + step)
            candidates.append(refine(t, lo, hi))

    best_sq = min(v for _, v in candidates)
    best = math.sqrt(float(best_sq))
    minimizers: list[Minimizer] = []
    for t, v in sorted(candidates):
        value = math.sqrt(float(v))
        if value > best + value_tol:
            continue
        if minimizers and abs(float(t) - float(minimizers[-1].t)) < t_merge:
            continue
        minimizers.append(Minimizer(t=t, point=m.point_at(t), value=value))
    return ScanResult(minimizers=tuple(minimizers), curve=curve)


def documented_minimizer_witness() -> tuple[Vector, SegmentConvexSet]:
    """The standard non-uniqueness witness: x = 0 against the segment 1 -+ j/2."""
    x: Vector = (SplitComplex(0, 0),)
    seg = SegmentConvexSet(
        q0=(SplitComplex(1, Fraction(-1, 2)),),
        q1=(SplitComplex(1, Fraction(1, 2)),),
    )
    return x, seg
