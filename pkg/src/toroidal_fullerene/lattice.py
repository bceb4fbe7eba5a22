"""Rank-2 sublattices of Z^2, their quotients and character groups.

Vectors here are in the translation basis ``{v1, v2}``. A lattice is given by
a 2x2 integer matrix whose *columns* generate it.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Vec = tuple[int, int]
Mat = tuple[tuple[int, int], tuple[int, int]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def as_matrix(basis) -> Mat:
    (a, c), (b, d) = basis
    return ((int(a), int(c)), (int(b), int(d)))


def from_columns(col1: Vec, col2: Vec) -> Mat:
    return ((int(col1[0]), int(col2[0])), (int(col1[1]), int(col2[1])))


def columns(m: Mat) -> tuple[Vec, Vec]:
    return (m[0][0], m[1][0]), (m[0][1], m[1][1])


def hermite_normal_form(basis) -> Mat:
    """Column Hermite normal form ``[[h11, 0], [h21, h22]]``.

    ``h11, h22 > 0`` and ``0 <= h21 < h22``; the columns span the same
    lattice as the columns of ``basis``.

    >>> hermite_normal_form(((5, -10), (0, 20)))
    ((5, 0), (0, 20))
    """
    m = as_matrix(basis)
    (a, c), (b, d) = m
    det = a * d - b * c
    if det == 0:
        raise ValueError(f"singular lattice basis {m}")
    # unimodular column op [[x, -c/g], [y, a/g]] clears the top-right entry
    g, x, y = _xgcd(a, c)
    h11 = g
    h21 = b * x + d * y
    h22 = (a * d - b * c) // g
    if h22 < 0:
        h22 = -h22
    h21 %= h22
    return ((h11, 0), (h21, h22))


@dataclass(frozen=True)
class Lattice:
    basis: Mat
    hnf: Mat = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "basis", as_matrix(self.basis))
        object.__setattr__(self, "hnf", hermite_normal_form(self.basis))

    @classmethod
    def from_columns(cls, col1: Vec, col2: Vec) -> Lattice:
        return cls(from_columns(col1, col2))

    @classmethod
    def from_hnf(cls, h11: int, h21: int, h22: int) -> Lattice:
        return cls(((h11, 0), (h21, h22)))

    @property
    def index(self) -> int:
        return self.hnf[0][0] * self.hnf[1][1]

    @property
    def columns(self) -> tuple[Vec, Vec]:
        return columns(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.hnf == other.hnf

    def __hash__(self):
        return hash(self.hnf)

    def contains(self, w: Vec) -> bool:
        return contains(self, w)

    def reduce(self, w: Vec) -> Vec:
        return reduce(self, w)

    @cached_property
    def coset_reps(self) -> list[Vec]:
        return coset_reps(self)

    @cached_property
    def characters(self) -> list[Character]:
        return characters(self)


def pq_lattice(p: int, q: int) -> Lattice:
    """Lattice spanned by ``(p, 0)`` and ``(-q, 2q)``."""
    return Lattice.from_columns((p, 0), (-q, 2 * q))


def contains(N: Lattice, w: Vec) -> bool:
    (h11, _), (h21, h22) = N.hnf
    x, y = w
    if x % h11:
        return False
    return (y - (x // h11) * h21) % h22 == 0


def reduce(N: Lattice, w: Vec) -> Vec:
    """Canonical representative of ``w`` with ``0 <= x < h11, 0 <= y < h22``."""
    (h11, _), (h21, h22) = N.hnf
    x, y = int(w[0]), int(w[1])
    k = x // h11
    return (x - k * h11, (y - k * h21) % h22)


def coset_reps(N: Lattice) -> list[Vec]:
    (h11, _), (_, h22) = N.hnf
    return [(x, y) for x in range(h11) for y in range(h22)]


@dataclass(frozen=True, order=True)
class Character:
    """``chi(x v1 + y v2) = exp(2 pi i (r1 x + r2 y))`` with ``r1, r2`` in [0, 1)."""

    r1: Fraction
    r2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r1", Fraction(self.r1) % 1)
        object.__setattr__(self, "r2", Fraction(self.r2) % 1)

    @property
    def angles(self) -> tuple[float, float]:
        return (_turns_to_radians(self.r1), _turns_to_radians(self.r2))

    def pairing(self, w: Vec) -> Fraction:
        """``r . w`` mod 1, so that ``chi(w) = exp(2 pi i pairing)``."""
        return (self.r1 * w[0] + self.r2 * w[1]) % 1

    def __call__(self, w: Vec) -> complex:
        return turns_to_unit(self.pairing(w))

    def __neg__(self) -> Character:
        return Character(-self.r1, -self.r2)


def _turns_to_radians(r: Fraction) -> float:
    return 2 * math.pi * float(r)


def turns_to_unit(r: Fraction) -> complex:
    """``exp(2 pi i r)`` with ``r`` folded into [-1/2, 1/2] before rounding."""
    r = Fraction(r) % 1
    if r > Fraction(1, 2):
        r -= 1
    return cmath.exp(2j * cmath.pi * float(r))


def characters(N: Lattice) -> list[Character]:
    """All characters of ``Z^2 / N``, trivial character first.

    Triviality on the HNF columns ``(h11, h21)`` and ``(0, h22)`` forces
    ``r2 = j / h22`` and ``r1 = (i - h21 r2) / h11``.
    """
    (h11, _), (h21, h22) = N.hnf
    out = []
    for j in range(h22):
        r2 = Fraction(j, h22)
        for i in range(h11):
            out.append(Character((i - h21 * r2) / h11, r2))
    return out
