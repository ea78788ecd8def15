"""Exact rational and projective-point arithmetic.

Everything here is integer/Fraction exact: canonical representatives of
points in P^n(Q), naive and anticanonical heights, cube-free classes in
Q*/(Q*)^3, and integer cube roots.  No floats anywhere; height comparisons
H <= B are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime


class InvalidPoint(ValueError):
    """Raised when coordinates cannot represent a projective point."""


class InvalidArgument(ValueError):
    """Raised when an operation is called outside its domain."""


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical integer representative of a point in P^n(Q).

    Invariants: not all coordinates zero, gcd of coordinates is 1, first
    nonzero coordinate positive.  Build via :func:`normalize`.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.coords):
            raise InvalidPoint("all coordinates are zero")
        if math.gcd(*(abs(c) for c in self.coords)) != 1:
            raise InvalidPoint(f"coordinates {self.coords} not primitive")
        first = next(c for c in self.coords if c)
        if first < 0:
            raise InvalidPoint(f"coordinates {self.coords} not sign-normalized")

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coords)


def normalize(raw_coords) -> ProjectivePoint:
    """Canonical representative: divide by the gcd, make the first nonzero
    coordinate positive.  Two integer tuples represent the same projective
    point iff their normalizations are equal."""
    coords = tuple(int(c) for c in raw_coords)
    if not any(coords):
        raise InvalidPoint("all coordinates are zero")
    g = math.gcd(*(abs(c) for c in coords))
    coords = tuple(c // g for c in coords)
    first = next(c for c in coords if c)
    if first < 0:
        coords = tuple(-c for c in coords)
    return ProjectivePoint(coords)


def naive_height(p: ProjectivePoint) -> int:
    """max |c_i| over the canonical coordinates."""
    return max(abs(c) for c in p.coords)


def anticanonical_height(x: ProjectivePoint, y: ProjectivePoint) -> int:
    """H(x)^3 * H(y): the height attached to the divisor 3*h1 + h2."""
    return naive_height(x) ** 3 * naive_height(y)


@dataclass(frozen=True)
class CubeClass:
    """Class of a nonzero rational in Q*/(Q*)^3.

    Stored as the cube-free part: sorted (prime, exponent) pairs with
    exponents in {1, 2}; the empty tuple is the trivial class (r is a
    rational cube).  Signs are discarded since -1 = (-1)^3.
    """

    factorization: tuple[tuple[int, int], ...]

    @property
    def is_trivial(self) -> bool:
        return not self.factorization

    def exponents(self) -> dict[int, int]:
        return dict(self.factorization)


def _cube_free_exponents(n: int) -> dict[int, int]:
    """Prime -> exponent mod 3 (nonzero only) for a positive integer.

    Trial division up to the cube root; the cofactor then has at most two
    prime factors so it is 1, p, p^2 or p*q, which a square test, a
    primality test and one desk-scale factorization settle.
    """
    exps: dict[int, int] = {}
    m = n
    p = 2
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e % 3:
                exps[p] = e % 3
        p += 1 if p == 2 else 2
    # a perfect-cube cofactor contributes nothing mod 3
    if m > 1 and exact_cube_root(m) is None:
        s = math.isqrt(m)
        if s * s == m and isprime(s):
            exps[s] = exps.get(s, 0) + 2
        elif isprime(m):
            exps[m] = exps.get(m, 0) + 1
        else:
            for q, e in factorint(m).items():
                if e % 3:
                    exps[q] = exps.get(q, 0) + (e % 3)
    return {p: e % 3 for p, e in exps.items() if e % 3}


def cube_class(numerator: int, denominator: int) -> CubeClass:
    """Class of numerator/denominator in Q*/(Q*)^3.

    Exponents are reduced mod 3 into {1, 2}, zeros omitted, sign discarded;
    the class is trivial iff the rational is a cube in Q.
    """
    if numerator == 0 or denominator == 0:
        raise InvalidArgument("cube_class needs a nonzero rational")
    r = Fraction(numerator, denominator)
    exps = _cube_free_exponents(abs(r.numerator))
    for p, e in _cube_free_exponents(r.denominator).items():
        total = (exps.get(p, 0) - e) % 3
        if total:
            exps[p] = total
        else:
            exps.pop(p, None)
    return CubeClass(tuple(sorted(exps.items())))


def is_cube(numerator: int, denominator: int) -> bool:
    """True iff numerator/denominator is the cube of a rational."""
    return cube_class(numerator, denominator).is_trivial


def exact_cube_root(n: int) -> int | None:
    """The integer m with m^3 == n, or None when no such integer exists.

    Sign-preserving: exact_cube_root(-64) == -4.
    """
    if n == 0:
        return 0
    m = abs(n)
    r = round(m ** (1.0 / 3.0))
    # float cube root can be off by one in either direction
    while r ** 3 > m:
        r -= 1
    while (r + 1) ** 3 <= m:
        r += 1
    if r ** 3 != m:
        return None
    return r if n > 0 else -r


def rational_matrix_rank(rows) -> int:
    """Rank of a matrix with int/Fraction entries, by exact Gaussian
    elimination over Q."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        for r in range(rank + 1, n_rows):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n_cols):
                    m[r][c] -= factor * m[rank][c]
        rank += 1
        if rank == n_rows:
            break
    return rank
