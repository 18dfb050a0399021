"""Finite-quotient witnesses separating matrices from the identity.

Two separation routes are made executable here:

* Across primes: a non-identity X in SL_n(Z) stays non-identity mod any
  prime that does not divide its level, so a reduction mod the smallest such
  prime is a finite-quotient certificate (witness_rf).
* Down one p-chain: inside Gamma(p^k), the map sending 1 + p^k*Y to
  Y mod p lands in the additive group of traceless matrices over Z/p. It is
  a surjective homomorphism with kernel Gamma(p^(k+1)), so it detects
  exactly how deep in the chain a matrix sits. witness_p reads off the depth
  s of its argument and certifies it with a nonzero image in sl_n(Z/p) and a
  p-power quotient order (witnessing residual p-finiteness of Gamma(p)).

phi_general is the same depth-one map at an arbitrary composite level N,
with image in traceless matrices mod N and kernel Gamma(N^2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    BadModulus,
    IdentityInput,
    NotInGamma,
    NotPrime,
    NotUnimodular,
)
from .gamma import gamma_index, gamma_level, gamma_member
from .intmat import IntMatrix, Rows, identity_rows
from .modular import ModMatrix, mod_reduce
from .primes import is_prime, next_prime

__all__ = [
    "TracelessMatrix",
    "CongruenceWitness",
    "sl_basis",
    "sl_elements",
    "phi_k",
    "phi_preimage",
    "phi_general",
    "phi_general_preimage",
    "power_congruence_check",
    "witness_rf",
    "witness_p",
]


@dataclass(frozen=True)
class TracelessMatrix:
    """Element of sl_n(Z/m): entries reduced into [0, m), trace = 0 mod m."""

    rows: Rows
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise BadModulus(f"modulus must be >= 2, got {self.modulus}")
        rows = tuple(tuple(int(e) % self.modulus for e in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("TracelessMatrix requires a non-empty square array")
        if sum(rows[i][i] for i in range(n)) % self.modulus != 0:
            raise ValueError("trace must vanish mod the modulus")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, n: int, modulus: int) -> TracelessMatrix:
        return cls(tuple((0,) * n for _ in range(n)), modulus)

    def is_zero(self) -> bool:
        return all(e == 0 for r in self.rows for e in r)

    def __add__(self, other: TracelessMatrix) -> TracelessMatrix:
        if not isinstance(other, TracelessMatrix):
            return NotImplemented
        if (self.n, self.modulus) != (other.n, other.modulus):
            raise ValueError("can only add traceless matrices of equal shape and modulus")
        return TracelessMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            ),
            self.modulus,
        )

    def to_text(self) -> str:
        body = ";".join(",".join(str(e) for e in r) for r in self.rows)
        return f"{body} mod {self.modulus}"

    def __str__(self) -> str:
        return self.to_text()


def sl_basis(n: int, modulus: int) -> tuple[TracelessMatrix, ...]:
    """The n^2 - 1 standard generators of sl_n(Z/m): off-diagonal matrix
    units e_ij plus the adjacent diagonal differences e_ii - e_(i+1)(i+1)."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [[0] * n for _ in range(n)]
                rows[i][j] = 1
                basis.append(TracelessMatrix(tuple(map(tuple, rows)), modulus))
    for i in range(n - 1):
        rows = [[0] * n for _ in range(n)]
        rows[i][i] = 1
        rows[i + 1][i + 1] = -1
        basis.append(TracelessMatrix(tuple(map(tuple, rows)), modulus))
    return tuple(basis)


def sl_elements(n: int, modulus: int) -> Iterator[TracelessMatrix]:
    """All m^(n^2 - 1) elements of sl_n(Z/m); the last diagonal entry is
    forced by tracelessness. Intended for small exhaustive checks."""
    free = n * n - 1
    for flat in itertools.product(range(modulus), repeat=free):
        rows = [[0] * n for _ in range(n)]
        pos = 0
        for i in range(n):
            for j in range(n):
                if i == n - 1 and j == n - 1:
                    continue
                rows[i][j] = flat[pos]
                pos += 1
        rows[n - 1][n - 1] = -sum(rows[i][i] for i in range(n - 1)) % modulus
        yield TracelessMatrix(tuple(map(tuple, rows)), modulus)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def _require_member(x: IntMatrix, level: int) -> None:
    if not gamma_member(x, level):
        raise NotInGamma(f"matrix is not congruent to 1 mod {level}")


def _difference_quotient(x: IntMatrix, step: int) -> Rows:
    """The integer matrix Y with x = 1 + step*Y; caller guarantees membership."""
    return tuple(
        tuple((e - (i == j)) // step for j, e in enumerate(row))
        for i, row in enumerate(x.rows)
    )


def phi_k(x: IntMatrix, p: int, k: int) -> TracelessMatrix:
    """Depth map on Gamma(p^k): send x = 1 + p^k*Y to Y mod p.

    A homomorphism into sl_n(Z/p) (the trace vanishes mod p because
    det x = 1) whose kernel is exactly Gamma(p^(k+1)).
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("chain depth k must be >= 1")
    _require_member(x, p**k)
    return TracelessMatrix(_difference_quotient(x, p**k), p)


def _diag_block(n: int, slot: int, step: int) -> IntMatrix:
    """Identity with the 2x2 block (1+step, step; -step, 1-step) at (slot, slot+1).

    Determinant is (1 - step^2) + step^2 = 1, and the depth map sends it to
    e_ii - e_(i+1)(i+1) + e_i(i+1) - e_(i+1)i.
    """
    rows = [list(r) for r in identity_rows(n)]
    rows[slot][slot] = 1 + step
    rows[slot][slot + 1] = step
    rows[slot + 1][slot] = -step
    rows[slot + 1][slot + 1] = 1 - step
    return IntMatrix(rows)


def _step_preimage(t: TracelessMatrix, step: int) -> IntMatrix:
    """Element of Gamma(step) whose depth-map image is t.

    Built additively from generator preimages: 1 + a*step*e_ij hits a*e_ij,
    and powers of the diagonal block (corrected by two off-diagonal
    preimages) hit the diagonal differences. The partial sums of t's
    diagonal are the coefficients that telescope to the right diagonal.
    """
    n, m = t.n, t.modulus
    acc = IntMatrix.identity(n)
    for i in range(n):
        for j in range(n):
            if i != j and t.rows[i][j]:
                acc = acc * IntMatrix.elementary(n, i + 1, j + 1, t.rows[i][j] * step)
    partial = 0
    for i in range(n - 1):
        partial = (partial + t.rows[i][i]) % m
        if partial:
            acc = acc * (_diag_block(n, i, step) ** partial)
            acc = acc * IntMatrix.elementary(n, i + 1, i + 2, -partial * step)
            acc = acc * IntMatrix.elementary(n, i + 2, i + 1, partial * step)
    return acc


def phi_preimage(t: TracelessMatrix, p: int, k: int) -> IntMatrix:
    """Constructive surjectivity of phi_k: an element of Gamma(p^k) mapping to t."""
    _require_prime(p)
    if k < 1:
        raise ValueError("chain depth k must be >= 1")
    if t.modulus != p:
        raise ValueError(f"target lives mod {t.modulus}, expected mod {p}")
    return _step_preimage(t, p**k)


def phi_general(x: IntMatrix, N: int) -> TracelessMatrix:
    """Depth map on Gamma(N) for arbitrary N >= 2: x = 1 + N*Y goes to Y mod N.

    A homomorphism onto sl_n(Z/N) with kernel Gamma(N^2).
    """
    if N < 2:
        raise BadModulus(f"level must be >= 2, got {N}")
    _require_member(x, N)
    return TracelessMatrix(_difference_quotient(x, N), N)


def phi_general_preimage(t: TracelessMatrix) -> IntMatrix:
    """Element of Gamma(N) mapping to t under phi_general, N = t.modulus."""
    return _step_preimage(t, t.modulus)


def power_congruence_check(x: IntMatrix, p: int, k: int) -> bool:
    """Whether x^p lands in Gamma(p^(k+1)) for x in Gamma(p^k).

    Always true (the binomial expansion of (1 + p^k*Y)^p has every term past
    the first divisible by p^(k+1)); computed honestly rather than assumed.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("chain depth k must be >= 1")
    _require_member(x, p**k)
    return gamma_member(x**p, p ** (k + 1))


@dataclass(frozen=True)
class CongruenceWitness:
    """A finite quotient separating `target` from the identity.

    For kind "residual-finite" the quotient is SL_n(Z/p) and the image is the
    (non-identity) reduction of the target. For kind "residual-p-finite" the
    quotient is the p-group Gamma(p)/Gamma(p^(s+1)) and the image is the
    nonzero value of the depth map phi_s in sl_n(Z/p).
    """

    kind: str
    prime: int
    level: int
    quotient_order: int
    image: ModMatrix | TracelessMatrix
    target: IntMatrix

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "prime": self.prime,
            "level": self.level,
            "quotient_order": str(self.quotient_order),
            "image": self.image.to_text(),
        }


def witness_rf(x: IntMatrix) -> CongruenceWitness:
    """Residual-finiteness witness: reduction mod the smallest prime that
    does not divide the level of x. Raises IdentityInput for x == 1."""
    level = gamma_level(x)
    if level == 0:
        raise IdentityInput("the identity is not separated from itself")
    p = 2
    while level % p == 0:
        p = next_prime(p)
    image = mod_reduce(x, p)
    assert not image.is_identity()
    return CongruenceWitness(
        kind="residual-finite",
        prime=p,
        level=p,
        quotient_order=gamma_index(x.n, p),
        image=image,
        target=x,
    )


def witness_p(x: IntMatrix, p: int) -> CongruenceWitness:
    """Residual-p-finiteness witness for x in Gamma(p).

    Reads the exact depth s of x in the p-chain (the p-adic valuation of its
    level), then certifies x against the quotient Gamma(p)/Gamma(p^(s+1)),
    whose order is a power of p, via the nonzero image phi_s(x).
    """
    _require_prime(p)
    level = gamma_level(x)
    if level == 0:
        raise IdentityInput("the identity is not separated from itself")
    if level % p != 0:
        raise NotInGamma(f"matrix is not congruent to 1 mod {p}")
    s = 0
    rest = level
    while rest % p == 0:
        rest //= p
        s += 1
    image = phi_k(x, p, s)
    assert not image.is_zero()
    quotient_order = gamma_index(x.n, p ** (s + 1)) // gamma_index(x.n, p)
    return CongruenceWitness(
        kind="residual-p-finite",
        prime=p,
        level=p ** (s + 1),
        quotient_order=quotient_order,
        image=image,
        target=x,
    )
