"""Colored multipermutations and their weak-descent statistics.

A word of type (p, r, a, b) is an arrangement of {1^r, ..., p^r} in which every
position carries one of the colors 1..a.  Entries are ordered first by color,
then by value.  Adjacent entries ``x y`` with ``x >= y`` form a non-terminal weak
descent; the final entry is one more (terminal) descent when its color exceeds
``b``.

Text format: entries ``V.C`` (value, color; both 1-based) separated by spaces,
e.g. ``"2.1 4.1 1.3 3.3"``.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import total_ordering

from .errors import (
    BudgetExceededError,
    CombinatorialRangeError,
    WordSyntaxError,
    WordValidationError,
)
from .exact_arith import total_words

__all__ = [
    "DEFAULT_BUDGET",
    "ColoredEntry",
    "ColoredWord",
    "Params",
    "augment",
    "check_budget",
    "compare",
    "descent_distribution",
    "descent_histogram",
    "enumerate_words",
    "format_entries",
    "format_word",
    "nonterminal_distribution",
    "nonterminal_weak_descents",
    "parse_entries",
    "parse_word",
    "weak_descents",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Params:
    """Color count ``a``, terminal threshold ``b``, multiplicity ``r``, symbol count ``p``."""

    a: int
    b: int
    r: int
    p: int

    def __post_init__(self):
        for name in ("a", "r", "p"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.b < 0:
            raise ValueError(f"b must be >= 0, got {self.b}")

    @property
    def n(self) -> int:
        """Word length r * p."""
        return self.r * self.p

    @property
    def combinatorial(self) -> bool:
        return self.b < self.a

    def require_combinatorial(self) -> None:
        if self.b >= self.a:
            raise CombinatorialRangeError(
                f"b={self.b} >= a={self.a}: weak descents are only defined for 0 <= b < a"
            )

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "r": self.r, "p": self.p}


@total_ordering
@dataclass(frozen=True, eq=True)
class ColoredEntry:
    """The entry ``value^{c_color}``, ordered by (color, value)."""

    value: int
    color: int

    def __lt__(self, other: ColoredEntry) -> bool:
        if not isinstance(other, ColoredEntry):
            return NotImplemented
        return (self.color, self.value) < (other.color, other.value)

    def __str__(self) -> str:
        return f"{self.value}.{self.color}"


def compare(e1: ColoredEntry, e2: ColoredEntry) -> int:
    """-1, 0 or 1 as ``e1`` is less than, equal to or greater than ``e2``."""
    k1 = (e1.color, e1.value)
    k2 = (e2.color, e2.value)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class ColoredWord:
    entries: tuple[ColoredEntry, ...]
    params: Params

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        _validate_entries(self.entries, self.params)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ColoredEntry]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return format_entries(self.entries)


def _validate_entries(entries: Sequence[ColoredEntry], params: Params) -> None:
    counts = [0] * (params.p + 1)
    for entry in entries:
        if not 1 <= entry.value <= params.p:
            raise WordValidationError(
                f"value {entry.value} outside 1..{params.p} in entry {entry}"
            )
        if not 1 <= entry.color <= params.a:
            raise WordValidationError(
                f"color {entry.color} outside 1..{params.a} in entry {entry}"
            )
        counts[entry.value] += 1
    for v in range(1, params.p + 1):
        if counts[v] != params.r:
            raise WordValidationError(
                f"value {v} appears {counts[v]} time(s), needs exactly {params.r}"
            )


def nonterminal_weak_descents(w: Sequence[ColoredEntry]) -> int:
    """Number of adjacent pairs ``x y`` with ``x >= y`` in the colored order.

    Accepts a :class:`ColoredWord` or any entry sequence (e.g. an augmented word).
    """
    return sum(1 for x, y in zip(w[:-1], w[1:]) if not x < y)


def weak_descents(w: Sequence[ColoredEntry], b: int) -> int:
    """Non-terminal weak descents plus the terminal descent (final color > ``b``)."""
    if len(w) == 0:
        return 0
    return nonterminal_weak_descents(w) + (1 if w[-1].color > b else 0)


def augment(w: Sequence[ColoredEntry], b: int) -> tuple[ColoredEntry, ...]:
    """Append ``1^{c_{b+1}}``.

    The result has one more copy of 1 than a word of its type allows, so it is
    returned as a plain tuple rather than a :class:`ColoredWord`.
    """
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b}")
    if isinstance(w, ColoredWord) and b >= w.params.a:
        raise CombinatorialRangeError(f"color b+1={b + 1} exceeds a={w.params.a}")
    return tuple(w) + (ColoredEntry(1, b + 1),)


def check_budget(params: Params, budget: int = DEFAULT_BUDGET) -> int:
    """Return the word count, raising :class:`BudgetExceededError` above ``budget``."""
    required = total_words(params.p, params.r, params.a)
    if required > budget:
        raise BudgetExceededError(required, budget)
    return required


def enumerate_words(
    params: Params,
    budget: int = DEFAULT_BUDGET,
    prefix: Sequence[ColoredEntry] = (),
) -> Iterator[ColoredWord]:
    """Yield every word of type ``params`` once, in lexicographic colored order.

    ``prefix`` restricts the stream to words starting with those entries, which
    lets callers split the enumeration into disjoint pieces (for example one
    per first entry) and merge counts afterwards.
    """
    params.require_combinatorial()
    check_budget(params, budget)
    p, r, a, n = params.p, params.r, params.a, params.n

    remaining = [r] * (p + 1)
    for entry in prefix:
        if not (1 <= entry.value <= p and 1 <= entry.color <= a):
            raise WordValidationError(f"prefix entry {entry} out of range")
        remaining[entry.value] -= 1
        if remaining[entry.value] < 0:
            raise WordValidationError(f"prefix uses value {entry.value} too often")
    if len(prefix) > n:
        raise WordValidationError("prefix longer than the word")

    alphabet = [ColoredEntry(v, c) for c in range(1, a + 1) for v in range(1, p + 1)]
    current = list(prefix)

    def extend() -> Iterator[ColoredWord]:
        if len(current) == n:
            yield ColoredWord(tuple(current), params)
            return
        for entry in alphabet:
            if remaining[entry.value]:
                remaining[entry.value] -= 1
                current.append(entry)
                yield from extend()
                current.pop()
                remaining[entry.value] += 1

    return extend()


def descent_histogram(params: Params, budget: int = DEFAULT_BUDGET) -> list[list[int]]:
    """Counts ``h[d][c-1]`` of words with ``d`` non-terminal weak descents and final color ``c``.

    Runs the compiled (or numpy) kernel; ``params.b`` is ignored.
    """
    from ._kernels import descent_color_histogram

    check_budget(params, budget)
    hist = descent_color_histogram(params.p, params.r, params.a)
    return [[int(x) for x in row] for row in hist]


def descent_distribution(params: Params, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Entry ``i`` counts words with exactly ``i`` weak descents at threshold ``params.b``."""
    params.require_combinatorial()
    hist = descent_histogram(params, budget)
    dist = [0] * (params.n + 1)
    for d, row in enumerate(hist):
        for c0, count in enumerate(row):
            dist[d + (1 if c0 + 1 > params.b else 0)] += count
    return dist


def nonterminal_distribution(params: Params, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Entry ``i`` counts words with exactly ``i`` non-terminal weak descents (i = 0..rp-1)."""
    params.require_combinatorial()
    return [sum(row) for row in descent_histogram(params, budget)]


_TOKEN = re.compile(r"\S+")
_ENTRY = re.compile(r"([0-9]+)\.([0-9]+)")


def parse_entries(text: str, offset: int = 0) -> list[ColoredEntry]:
    """Parse ``V.C`` tokens without checking any type constraints."""
    entries = []
    for m in _TOKEN.finditer(text):
        em = _ENTRY.fullmatch(m.group())
        if em is None:
            raise WordSyntaxError(
                f"expected an entry VALUE.COLOR, got {m.group()!r}", offset + m.start()
            )
        entries.append(ColoredEntry(int(em.group(1)), int(em.group(2))))
    return entries


def format_entries(entries: Sequence[ColoredEntry]) -> str:
    return " ".join(f"{e.value}.{e.color}" for e in entries)


def parse_word(text: str, params: Params) -> ColoredWord:
    """Parse ``"V.C V.C ..."`` into a validated word of type ``params``.

    Raises :class:`WordSyntaxError` for malformed tokens and
    :class:`WordValidationError` when the multiset or color constraints fail.
    """
    return ColoredWord(tuple(parse_entries(text)), params)


def format_word(w: Sequence[ColoredEntry]) -> str:
    return format_entries(w)
