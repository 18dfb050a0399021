"""Arithmetic in Z/N: matrices, CRT factorization, and SL_n(Z/N) by brute force.

enumerate_sl is the deliberately naive oracle: it walks every entry tuple and
keeps the determinant-1 ones. It is guarded by a cap on N^(n^2) so a typo in
a test cannot wedge the machine. sl_order_formula computes the same count in
closed form; the two must always agree, and the test suite holds them to it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import BadModulus, CapExceeded, DimensionMismatch
from .intmat import IntMatrix, Rows, det_of_rows, identity_rows, parse_entries
from .primes import factorize

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "Modulus",
    "ModMatrix",
    "crt_split",
    "crt_combine",
    "mod_reduce",
    "enumerate_sl",
    "sl_order_formula",
]

DEFAULT_ENUMERATION_CAP = 10_000_000


@dataclass(frozen=True)
class Modulus:
    """A modulus N >= 2 together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 2:
            raise BadModulus(f"modulus must be >= 2, got {self.value}")
        prod = 1
        for p, s in self.factors:
            prod *= p**s
        primes = [p for p, _ in self.factors]
        if prod != self.value or primes != sorted(set(primes)) or any(s < 1 for _, s in self.factors):
            raise ValueError(f"inconsistent factorization {self.factors} for {self.value}")

    @property
    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**s for p, s in self.factors)

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def crt_split(N: int) -> Modulus:
    """Factor N >= 2 by trial division."""
    if N < 2:
        raise BadModulus(f"modulus must be >= 2, got {N}")
    return Modulus(N, tuple(factorize(N)))


def crt_combine(residues: Iterable[tuple[int, int]]) -> int:
    """Solve x = r (mod m) over pairwise coprime moduli; x is returned in [0, prod m)."""
    x, big = 0, 1
    for r, m in residues:
        t = ((r - x) * pow(big, -1, m)) % m
        x += big * t
        big *= m
    return x % big


@dataclass(frozen=True)
class ModMatrix:
    """Immutable square matrix over Z/N with entries reduced into [0, N)."""

    rows: Rows
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise BadModulus(f"modulus must be >= 2, got {self.modulus}")
        rows = tuple(tuple(int(e) % self.modulus for e in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("ModMatrix requires a non-empty square array of entries")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int, modulus: int) -> ModMatrix:
        return cls(identity_rows(n), modulus)

    @classmethod
    def from_text(cls, text: str) -> ModMatrix:
        from .errors import ParseError

        body, sep, mod_text = text.partition("mod")
        if not sep:
            raise ParseError(f"missing 'mod N' suffix in {text!r}")
        mod_text = mod_text.strip()
        if not mod_text.isdigit():
            raise ParseError(f"bad modulus {mod_text!r}")
        return cls(parse_entries(body.strip()), int(mod_text))

    def to_text(self) -> str:
        body = ";".join(",".join(str(e) for e in r) for r in self.rows)
        return f"{body} mod {self.modulus}"

    def __str__(self) -> str:
        return self.to_text()

    def __mul__(self, other: ModMatrix) -> ModMatrix:
        if not isinstance(other, ModMatrix):
            return NotImplemented
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        if self.n != other.n:
            raise DimensionMismatch(f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        a, b, n, N = self.rows, other.rows, self.n, self.modulus
        return ModMatrix(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) % N for j in range(n))
                for i in range(n)
            ),
            N,
        )

    def __pow__(self, e: int) -> ModMatrix:
        if e < 0:
            raise ValueError("negative powers of ModMatrix are not supported")
        result = ModMatrix.identity(self.n, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def det(self) -> int:
        return det_of_rows(self.rows) % self.modulus

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n)) % self.modulus

    def is_identity(self) -> bool:
        return self.rows == identity_rows(self.n)

    def to_int(self) -> IntMatrix:
        """Lift entrywise to the canonical representatives in [0, N)."""
        return IntMatrix(self.rows)


def mod_reduce(x: IntMatrix, N: int | Modulus) -> ModMatrix:
    """Entrywise reduction of an integer matrix into Z/N."""
    modulus = N.value if isinstance(N, Modulus) else N
    return ModMatrix(x.rows, modulus)


def enumerate_sl(n: int, N: int, cap: int | None = None) -> list[ModMatrix]:
    """All of SL_n(Z/N) by exhaustive search, sorted lexicographically by entries.

    Walks every one of the N^(n^2) entry tuples and keeps those of
    determinant 1; raises CapExceeded (carrying the required cap) when the
    search space is larger than `cap` (default DEFAULT_ENUMERATION_CAP).
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if N < 2:
        raise BadModulus(f"modulus must be >= 2, got {N}")
    effective_cap = DEFAULT_ENUMERATION_CAP if cap is None else cap
    size = N ** (n * n)
    if size > effective_cap:
        raise CapExceeded(size, effective_cap)
    out = []
    for flat in itertools.product(range(N), repeat=n * n):
        rows = tuple(flat[r * n : (r + 1) * n] for r in range(n))
        if det_of_rows(rows) % N == 1:
            out.append(ModMatrix(rows, N))
    return out


def sl_order_formula(n: int, N: int) -> int:
    """|SL_n(Z/N)| as an exact integer.

    Multiplicative over the prime factorization of N; for a prime power p^s
    the count is p^((s-1)(n^2-1)) * |SL_n(Z/p)|, and |SL_n(Z/p)| is
    prod_{i<n}(p^n - p^i) / (p - 1) by exact division.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if N < 1:
        raise BadModulus(f"modulus must be >= 1, got {N}")
    if N == 1:
        return 1
    total = 1
    for p, s in factorize(N):
        gl_p = 1
        for i in range(n):
            gl_p *= p**n - p**i
        sl_p = gl_p // (p - 1)
        total *= p ** ((s - 1) * (n * n - 1)) * sl_p
    return total
