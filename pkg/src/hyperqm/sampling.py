"""Seeded random generators for exact test inputs.

Entries are uniform over small rationals (numerator and denominator bounded
by 8 unless stated otherwise) so that exact identity checks stay cheap while
still exercising non-commutativity and sign structure.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .rings import DualRational, GaussianRational
from .splitc import Cone, SplitComplex


def rand_fraction(rng: random.Random, bound: int = 8, max_den: int = 8) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def rand_nonzero_fraction(rng: random.Random, bound: int = 8, max_den: int = 8) -> Fraction:
    while True:
        q = rand_fraction(rng, bound, max_den)
        if q != 0:
            return q


def rand_split(rng: random.Random, bound: int = 8) -> SplitComplex:
    return SplitComplex(rand_fraction(rng, bound), rand_fraction(rng, bound))


def rand_split_offcone(rng: random.Random, bound: int = 8) -> SplitComplex:
    while True:
        z = rand_split(rng, bound)
        if not z.is_null():
            return z


def rand_split_in_cone(rng: random.Random, cone: Cone, bound: int = 8) -> SplitComplex:
    while True:
        z = rand_split(rng, bound)
        if z.cone() is cone:
            return z


def rand_gauss(rng: random.Random, bound: int = 8) -> GaussianRational:
    return GaussianRational(rand_fraction(rng, bound), rand_fraction(rng, bound))


def rand_dual(rng: random.Random, bound: int = 8) -> DualRational:
    return DualRational(rand_fraction(rng, bound), rand_fraction(rng, bound))


def rand_split_vector(rng: random.Random, n: int, bound: int = 8) -> tuple[SplitComplex, ...]:
    return tuple(rand_split(rng, bound) for _ in range(n))
