"""Shared strategies and independent oracles for the test suite."""

import itertools

import hypothesis.strategies as st

from congruence_lab import ElementaryGen, ElementaryWord, IntMatrix


def det_permutation_oracle(rows) -> int:
    """Leibniz-formula determinant, independent of the production code paths."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inversions % 2 else prod
    return total


def int_matrices(n: int, bound: int = 9):
    """Arbitrary n x n integer matrices with entries in [-bound, bound]."""
    row = st.lists(st.integers(-bound, bound), min_size=n, max_size=n)
    return st.lists(row, min_size=n, max_size=n).map(IntMatrix)


def _positions(n: int):
    return st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda t: t[0] != t[1])


def elementary_words(n: int, max_len: int = 8, bound: int = 5, modulus: int | None = None):
    """Random elementary words over Z (or Z/modulus)."""
    item = st.tuples(_positions(n), st.integers(-bound, bound))
    return st.lists(item, max_size=max_len).map(
        lambda items: ElementaryWord(
            n, tuple(ElementaryGen(i, j, a) for (i, j), a in items), modulus
        )
    )


def unimodular_matrices(n: int, max_len: int = 8, bound: int = 5):
    """Random elements of SL_n(Z), generated as products of elementary matrices."""
    return elementary_words(n, max_len, bound).map(lambda w: w.evaluate())
