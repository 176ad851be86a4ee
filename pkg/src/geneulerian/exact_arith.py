"""Exact integer helpers shared by every counting routine.

Python ints are already arbitrary precision, so "BigNat" is simply ``int``
with the convention that counting results are never negative.
"""

from math import factorial

__all__ = ["binomial", "total_words", "factorial"]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the combinatorial zero convention.

    Returns 0 whenever ``k < 0``, ``k > n`` or ``n < 0``; the alternating
    sums for the generalized Eulerian numbers rely on those zeros.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    # result * (n - k + j) is divisible by j at every step
    for j in range(1, k + 1):
        result = result * (n - k + j) // j
    return result


def total_words(p: int, r: int, a: int) -> int:
    """Number of colored multipermutations of {1^r, ..., p^r} with ``a`` colors."""
    if p < 1 or r < 1 or a < 1:
        raise ValueError(f"p, r, a must be positive, got p={p}, r={r}, a={a}")
    n = r * p
    return a**n * factorial(n) // factorial(r) ** p
