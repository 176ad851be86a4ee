"""Classical and generalized Eulerian numbers by closed form.

``A_{a,b,r}(p, i)`` counts words of type (p, r, a, b) with ``i`` weak descents
and equals

    sum_{j=0}^{i} (-1)^j C(rp+1, j) C(a(i-j)+b, r)^p.

All arithmetic is exact.  Indices outside the support return 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .exact_arith import binomial, total_words
from .words import Params

__all__ = [
    "EulerianRow",
    "GenEulerianRow",
    "ascent_row",
    "ascent_variant",
    "eulerian_explicit",
    "eulerian_recurrence",
    "gen_eulerian_closed",
    "gen_eulerian_row",
    "nonterminal_count_closed",
    "normalize_b",
]


@dataclass(frozen=True)
class EulerianRow:
    p: int
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0


@dataclass(frozen=True)
class GenEulerianRow:
    params: Params
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0


def eulerian_recurrence(p: int) -> EulerianRow:
    """Row ``<p, 0..p-1>`` from ``<p,i> = (p-i)<p-1,i-1> + (i+1)<p-1,i>``."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    row = [1]
    for m in range(2, p + 1):
        prev = row
        row = [0] * m
        for i in range(m):
            left = prev[i - 1] if i >= 1 else 0
            right = prev[i] if i < m - 1 else 0
            row[i] = (m - i) * left + (i + 1) * right
    values = tuple(row)
    assert sum(values) == factorial(p)
    return EulerianRow(p, values)


def eulerian_explicit(p: int, i: int) -> int:
    """``<p, i>`` from the alternating sum over ``C(p+1, j) (i-j+1)^p``."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if i < 0 or i > p - 1:
        return 0
    return sum((-1) ** j * binomial(p + 1, j) * (i - j + 1) ** p for j in range(i + 2))


def gen_eulerian_closed(params: Params, i: int) -> int:
    params.require_combinatorial()
    a, b, r, p = params.a, params.b, params.r, params.p
    n = r * p
    if i < 0 or i > n:
        return 0
    total = 0
    for j in range(i + 1):
        total += (-1) ** j * binomial(n + 1, j) * binomial(a * (i - j) + b, r) ** p
    # a negative value here would contradict the counting interpretation
    assert total >= 0, f"negative A_{{{a},{b},{r}}}({p},{i}) = {total}"
    return total


def nonterminal_count_closed(a: int, r: int, p: int, i: int) -> int:
    """Words of type (p, r, a) with exactly ``i`` non-terminal weak descents."""
    if a < 1 or r < 1 or p < 1:
        raise ValueError(f"a, r, p must be >= 1, got a={a}, r={r}, p={p}")
    n = r * p
    if i < 0 or i > n - 1:
        return 0
    total = sum(
        (-1) ** j * binomial(n + 1, j) * binomial(a * (i - j + 1), r) ** p
        for j in range(i + 2)
    )
    assert total >= 0
    return total


def gen_eulerian_row(params: Params) -> GenEulerianRow:
    """``A_{a,b,r}(p, i)`` for i = 0..rp; checks the row sum against the word count."""
    values = tuple(gen_eulerian_closed(params, i) for i in range(params.n + 1))
    assert sum(values) == total_words(params.p, params.r, params.a)
    return GenEulerianRow(params, values)


def ascent_variant(params: Params, i: int) -> int:
    """Coefficients for the basis ``C(n+i, rp)``; the row of ``A`` read backwards."""
    return gen_eulerian_closed(params, params.n - i)


def ascent_row(params: Params) -> tuple[int, ...]:
    return tuple(ascent_variant(params, i) for i in range(params.n + 1))


def normalize_b(a: int, b: int, r: int | None = None) -> tuple[int, int]:
    """Split ``b`` into ``(shift, b_reduced)`` with ``b = a*shift + b_reduced``, ``0 <= b_reduced < a``.

    Then ``C(a*n + b, r) == C(a*(n + shift) + b_reduced, r)`` for every ``n``,
    so any ``b >= 0`` reduces to the range with a counting interpretation.
    ``r`` does not affect the split and is accepted for symmetry with the
    identity it serves.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b}")
    shift, b_reduced = divmod(b, a)
    return shift, b_reduced
