"""Exact arithmetic for square integer matrices.

Entries are plain Python ints, so products, determinants, and inverses are
computed without overflow or rounding. Matrices are immutable and hashable;
all operations return new values.

Text format (used by the CLI and test fixtures): rows separated by ';',
entries by ',', e.g. "1,2;0,1" for [[1,2],[0,1]]. Whitespace is insignificant
and negative entries are permitted.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import DimensionMismatch, NotUnimodular, ParseError

__all__ = ["IntMatrix", "MatrixUnit", "sample_sl", "SAMPLE_COEFF_BOUND"]

# Default bound on |a| for randomly generated elementary matrices 1 + a*e_ij.
SAMPLE_COEFF_BOUND = 5

_INT_RE = re.compile(r"-?\d+$")

Rows = tuple[tuple[int, ...], ...]


def identity_rows(n: int) -> Rows:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def parse_entries(text: str) -> Rows:
    """Parse the bare "a,b;c,d" part of the matrix text format."""
    rows = []
    for row_text in text.split(";"):
        entries = []
        for tok in row_text.split(","):
            tok = tok.strip()
            if not _INT_RE.match(tok):
                raise ParseError(f"bad matrix entry {tok!r}")
            entries.append(int(tok))
        rows.append(tuple(entries))
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParseError(f"matrix text {text!r} is not square")
    return tuple(rows)


def _det_cofactor(rows: Rows) -> int:
    """Determinant by first-row cofactor expansion (small n)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    sign = 1
    rest = rows[1:]
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = tuple(r[:j] + r[j + 1 :] for r in rest)
            total += sign * entry * _det_cofactor(minor)
        sign = -sign
    return total


def _det_bareiss(rows: Rows) -> int:
    """Fraction-free elimination; every interior division is exact."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_of_rows(rows: Rows) -> int:
    """Exact determinant; cofactor expansion up to 4x4, Bareiss above."""
    return _det_cofactor(rows) if len(rows) <= 4 else _det_bareiss(rows)


@dataclass(frozen=True)
class MatrixUnit:
    """The matrix unit e_ij: a single 1 in row i, column j (1-based) of an n x n matrix."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise ValueError(f"matrix unit ({self.i},{self.j}) out of range for n={self.n}")

    def matrix(self) -> IntMatrix:
        rows = [[0] * self.n for _ in range(self.n)]
        rows[self.i - 1][self.j - 1] = 1
        return IntMatrix(rows)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix over Z."""

    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(e) for e in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("IntMatrix requires a non-empty square array of entries")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(identity_rows(n))

    @classmethod
    def elementary(cls, n: int, i: int, j: int, a: int) -> IntMatrix:
        """The elementary matrix 1 + a*e_ij (1-based indices, i != j)."""
        if i == j:
            raise ValueError("elementary matrix requires i != j")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"elementary position ({i},{j}) out of range for n={n}")
        rows = [list(r) for r in identity_rows(n)]
        rows[i - 1][j - 1] = int(a)
        return cls(rows)

    @classmethod
    def from_text(cls, text: str) -> IntMatrix:
        if "mod" in text:
            raise ParseError(f"unexpected modulus suffix in integer matrix {text!r}")
        return cls(parse_entries(text))

    def to_text(self) -> str:
        return ";".join(",".join(str(e) for e in r) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text()

    def __mul__(self, other: IntMatrix | int) -> IntMatrix:
        if isinstance(other, int):
            return IntMatrix(tuple(tuple(other * e for e in r) for r in self.rows))
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        a, b = self.rows, other.rows
        n = self.n
        return IntMatrix(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
        )

    def __rmul__(self, other: int) -> IntMatrix:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"cannot add {self.n}x{self.n} and {other.n}x{other.n}")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-1) * other

    def __pow__(self, e: int) -> IntMatrix:
        if e < 0:
            return self.inverse() ** (-e)
        result = IntMatrix.identity(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def det(self) -> int:
        return det_of_rows(self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_identity(self) -> bool:
        return self.rows == identity_rows(self.n)

    def inverse(self) -> IntMatrix:
        """Integer inverse via the adjugate; requires det == 1."""
        d = self.det()
        if d != 1:
            raise NotUnimodular(f"determinant is {d}, expected 1")
        n = self.n
        if n == 1:
            return IntMatrix.identity(1)
        inv = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = tuple(
                    tuple(self.rows[r][c] for c in range(n) if c != i)
                    for r in range(n)
                    if r != j
                )
                inv[i][j] = (-1) ** (i + j) * det_of_rows(minor)
        return IntMatrix(inv)


def random_elementary_rows(
    n: int, length: int, rng: random.Random, bound: int, scale: int = 1
) -> Rows:
    """Rows of a product of `length` random elementary matrices 1 + scale*a*e_ij.

    Coefficients satisfy 1 <= |a| <= bound. Used by sample_sl and by the
    congruence-subgroup sampler (scale = N yields elements of Gamma(N)).
    """
    rows = [list(r) for r in identity_rows(n)]
    if n == 1:
        return identity_rows(1)
    for _ in range(length):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        a = rng.randint(1, bound) * scale
        if rng.randrange(2):
            a = -a
        for r in range(n):
            rows[r][j] += a * rows[r][i]
    return tuple(tuple(r) for r in rows)


def sample_sl(n: int, length: int, seed: int, bound: int = SAMPLE_COEFF_BOUND) -> IntMatrix:
    """Deterministic pseudo-random element of SL_n(Z).

    Returns the product of `length` random elementary matrices with
    coefficient bound `bound`; the same seed always yields the same matrix.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if length < 0:
        raise ValueError("length must be >= 0")
    if bound < 1:
        raise ValueError("coefficient bound must be >= 1")
    rng = random.Random(seed)
    return IntMatrix(random_elementary_rows(n, length, rng, bound))
