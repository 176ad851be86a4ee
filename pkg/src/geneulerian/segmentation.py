"""Segmented colored multipermutations (SCMs) and their bijections.

An SCM splits a word into segments with walls; each segment is strictly
increasing in the colored order and segments may be empty.  Two variants:

``Variant.NONTERMINAL``
    walls sit at non-terminal weak descents; ``b`` is 0.
``Variant.THRESHOLDED``
    walls sit at all weak descents, including a trailing wall when the last
    color exceeds ``b``; the final segment may only use colors ``<= b``.

Walls are numbered from 1.  A wall's position is the number of entries to its
left (0..rp).

Text format: segments joined by ``|`` tokens, e.g.
``"2.1 4.1 1.3 3.3 | 1.1 2.1 4.1 | 2.2 5.2 5.3 | | 1.1 5.1 4.2 3.3 | 3.3"``.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import BinAssignmentError, WordValidationError
from .exact_arith import binomial
from .words import (
    DEFAULT_BUDGET,
    ColoredEntry,
    ColoredWord,
    Params,
    enumerate_words,
    format_entries,
    parse_entries,
)

__all__ = [
    "BinAssignment",
    "SegmentedWord",
    "Variant",
    "bins_to_scm",
    "count_extraneous_free_scms",
    "count_scms",
    "enumerate_bin_assignments",
    "enumerate_scms",
    "extraneous_free_counts",
    "format_scm",
    "insert_wall",
    "is_extraneous",
    "parse_scm",
    "remove_wall",
    "scm_to_word",
    "wall_position",
    "word_to_scm",
]


class Variant(enum.Enum):
    NONTERMINAL = "nonterminal"
    THRESHOLDED = "thresholded"


def _check_variant(variant: Variant, b: int) -> None:
    if variant is Variant.NONTERMINAL and b != 0:
        raise ValueError(f"the nonterminal variant requires b = 0, got b={b}")


@dataclass(frozen=True)
class SegmentedWord:
    segments: tuple[tuple[ColoredEntry, ...], ...]
    params: Params
    variant: Variant = Variant.NONTERMINAL

    def __post_init__(self):
        segs = tuple(tuple(s) for s in self.segments)
        object.__setattr__(self, "segments", segs)
        if not segs:
            raise WordValidationError("an SCM has at least one segment")
        _check_variant(self.variant, self.params.b)
        self.params.require_combinatorial()
        ColoredWord(tuple(itertools.chain.from_iterable(segs)), self.params)
        for k, seg in enumerate(segs, start=1):
            for x, y in zip(seg[:-1], seg[1:]):
                if not x < y:
                    raise WordValidationError(
                        f"segment {k} is not increasing at {x} {y}"
                    )
        if self.variant is Variant.THRESHOLDED:
            for e in segs[-1]:
                if e.color > self.params.b:
                    raise WordValidationError(
                        f"final segment entry {e} has color > b={self.params.b}"
                    )

    @property
    def wall_count(self) -> int:
        return len(self.segments) - 1

    def __str__(self) -> str:
        return format_scm(self)


def _wall_check(s: SegmentedWord, wall_index: int) -> None:
    if not 1 <= wall_index <= s.wall_count:
        raise IndexError(f"wall {wall_index} out of range 1..{s.wall_count}")


def wall_position(s: SegmentedWord, wall_index: int) -> int:
    _wall_check(s, wall_index)
    return sum(len(seg) for seg in s.segments[:wall_index])


def is_extraneous(s: SegmentedWord, wall_index: int) -> bool:
    """Whether the wall can be removed without changing the descent structure.

    A wall is extraneous when (a) both neighbours are nonempty and joining
    them keeps the segment increasing, (b) the segment to its left is empty,
    or (c) it is the final wall, the segment to its right is empty and every
    entry to its left has color at most the threshold.  The threshold is
    ``b`` for the thresholded variant and ``a`` (so any color) for the
    nonterminal variant, where no terminal descent is recorded.
    """
    _wall_check(s, wall_index)
    left = s.segments[wall_index - 1]
    right = s.segments[wall_index]
    if not left:
        return True
    if right:
        return left[-1] < right[0]
    if wall_index != s.wall_count:
        return False
    threshold = s.params.b if s.variant is Variant.THRESHOLDED else s.params.a
    return all(e.color <= threshold for e in left)


def word_to_scm(
    w: ColoredWord, variant: Variant = Variant.NONTERMINAL, b: int | None = None
) -> SegmentedWord:
    """Cut ``w`` at every (non-terminal) weak descent.

    The thresholded variant adds an empty final segment when the last color
    exceeds ``b``.  ``b`` defaults to ``w.params.b``.
    """
    if b is None:
        b = w.params.b
    _check_variant(variant, b)
    params = w.params if w.params.b == b else Params(w.params.a, b, w.params.r, w.params.p)
    segments = []
    current = [w[0]]
    for x, y in zip(w.entries[:-1], w.entries[1:]):
        if x < y:
            current.append(y)
        else:
            segments.append(tuple(current))
            current = [y]
    segments.append(tuple(current))
    if variant is Variant.THRESHOLDED and w[-1].color > b:
        segments.append(())
    return SegmentedWord(tuple(segments), params, variant)


def scm_to_word(s: SegmentedWord) -> ColoredWord:
    return ColoredWord(tuple(itertools.chain.from_iterable(s.segments)), s.params)


def insert_wall(s: SegmentedWord, position: int) -> SegmentedWord:
    """Add a wall at ``position``, to the right of any walls already there.

    The added wall is always extraneous.
    """
    n = s.params.n
    if not 0 <= position <= n:
        raise IndexError(f"position {position} out of range 0..{n}")
    start = 0
    target = 0
    for k, seg in enumerate(s.segments):
        if start <= position:
            target = k
        start += len(seg)
    offset = position - sum(len(seg) for seg in s.segments[:target])
    seg = s.segments[target]
    new = s.segments[:target] + (seg[:offset], seg[offset:]) + s.segments[target + 1 :]
    return SegmentedWord(new, s.params, s.variant)


def remove_wall(s: SegmentedWord, wall_index: int) -> SegmentedWord:
    """Delete a wall, merging its neighbours.  Refuses non-extraneous walls."""
    if not is_extraneous(s, wall_index):
        raise ValueError(f"wall {wall_index} is not extraneous")
    k = wall_index
    merged = s.segments[k - 1] + s.segments[k]
    new = s.segments[: k - 1] + (merged,) + s.segments[k + 1 :]
    return SegmentedWord(new, s.params, s.variant)


def format_scm(s: SegmentedWord) -> str:
    tokens: list[str] = []
    for k, seg in enumerate(s.segments):
        if k:
            tokens.append("|")
        if seg:
            tokens.append(format_entries(seg))
    return " ".join(tokens)


def parse_scm(
    text: str, params: Params, variant: Variant = Variant.NONTERMINAL
) -> SegmentedWord:
    """Inverse of :func:`format_scm`; validates like the constructor."""
    segments: list[list[ColoredEntry]] = [[]]
    offset = 0
    for piece in text.split("|"):
        if offset:
            segments.append([])
        segments[-1].extend(parse_entries(piece, offset))
        offset += len(piece) + 1
    return SegmentedWord(tuple(tuple(seg) for seg in segments), params, variant)


@dataclass(frozen=True)
class BinAssignment:
    """Values placed in the (column, color) bins, both indices 1-based.

    For the thresholded variant the final column only has bins for colors
    ``1..b``.
    """

    params: Params
    columns: int
    bins: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    variant: Variant = Variant.NONTERMINAL

    def to_json(self) -> list[list[list[int]]]:
        """Nested lists ``[column][color] -> sorted values`` (0-based list indices)."""
        return [
            [sorted(self.bins.get((col, color), ())) for color in range(1, self.params.a + 1)]
            for col in range(1, self.columns + 1)
        ]

    @classmethod
    def from_json(
        cls,
        data: Sequence[Sequence[Iterable[int]]],
        params: Params,
        variant: Variant = Variant.NONTERMINAL,
    ) -> BinAssignment:
        bins = {}
        for col, colors in enumerate(data, start=1):
            for color, values in enumerate(colors, start=1):
                values = tuple(values)
                if values:
                    bins[(col, color)] = values
        return cls(params, len(data), bins, variant)


def bins_to_scm(assignment: BinAssignment) -> SegmentedWord:
    """Sort each column increasingly and concatenate the columns with walls."""
    params = assignment.params
    variant = assignment.variant
    last_colors = params.b if variant is Variant.THRESHOLDED else params.a
    if assignment.columns < 1:
        raise BinAssignmentError("need at least one column")
    copies: Counter[int] = Counter()
    columns: list[list[ColoredEntry]] = [[] for _ in range(assignment.columns)]
    for (col, color), values in sorted(assignment.bins.items()):
        if not 1 <= col <= assignment.columns:
            raise BinAssignmentError(f"column {col} out of range 1..{assignment.columns}")
        limit = last_colors if col == assignment.columns else params.a
        if not 1 <= color <= limit and values:
            raise BinAssignmentError(
                f"color {color} out of range 1..{limit} in column {col}"
            )
        seen = Counter(values)
        for v, times in seen.items():
            if times > 1:
                raise BinAssignmentError(
                    f"bin (column {col}, color {color}) holds {times} copies of {v}"
                )
            if not 1 <= v <= params.p:
                raise BinAssignmentError(f"value {v} out of range 1..{params.p}")
            copies[v] += 1
            columns[col - 1].append(ColoredEntry(v, color))
    for v in range(1, params.p + 1):
        if copies[v] != params.r:
            raise BinAssignmentError(
                f"value {v} placed {copies[v]} time(s), needs exactly {params.r}"
            )
    return SegmentedWord(tuple(tuple(sorted(c)) for c in columns), params, variant)


def _bins(params: Params, columns: int, variant: Variant) -> list[tuple[int, int]]:
    last_colors = params.b if variant is Variant.THRESHOLDED else params.a
    out = []
    for col in range(1, columns + 1):
        top = last_colors if col == columns else params.a
        out.extend((col, color) for color in range(1, top + 1))
    return out


def enumerate_bin_assignments(
    params: Params, columns: int, variant: Variant = Variant.NONTERMINAL
) -> Iterator[BinAssignment]:
    """Every placement of r copies of each value into distinct bins."""
    _check_variant(variant, params.b)
    bins = _bins(params, columns, variant)
    choices = list(itertools.combinations(bins, params.r))
    for pick in itertools.product(choices, repeat=params.p):
        content: dict[tuple[int, int], list[int]] = {}
        for v, chosen in enumerate(pick, start=1):
            for key in chosen:
                content.setdefault(key, []).append(v)
        yield BinAssignment(
            params, columns, {k: tuple(vs) for k, vs in content.items()}, variant
        )


def _weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    # stars and bars: choose where the parts-1 bars sit among n + parts - 1 slots
    for bars in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        sizes = []
        for bar in bars:
            sizes.append(bar - prev - 1)
            prev = bar
        sizes.append(n + parts - 1 - prev - 1)
        yield tuple(sizes)


def enumerate_scms(
    params: Params,
    segment_count: int,
    variant: Variant = Variant.NONTERMINAL,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[SegmentedWord]:
    """All SCMs with ``segment_count`` segments, found by cutting every word every way.

    Independent of the bins construction; meant for tiny parameters.
    """
    _check_variant(variant, params.b)
    cuts = list(_weak_compositions(params.n, segment_count))
    for w in enumerate_words(params, budget):
        entries = w.entries
        for sizes in cuts:
            segments = []
            start = 0
            ok = True
            for size in sizes:
                seg = entries[start : start + size]
                if any(not x < y for x, y in zip(seg[:-1], seg[1:])):
                    ok = False
                    break
                segments.append(seg)
                start += size
            if not ok:
                continue
            if variant is Variant.THRESHOLDED and any(
                e.color > params.b for e in segments[-1]
            ):
                continue
            yield SegmentedWord(tuple(segments), params, variant)


def count_scms(params: Params, segment_count: int, variant: Variant = Variant.NONTERMINAL) -> int:
    """Number of SCMs with the given number of segments, extraneous walls allowed."""
    if segment_count < 1:
        raise ValueError(f"segment_count must be >= 1, got {segment_count}")
    a, r, p = params.a, params.r, params.p
    if variant is Variant.THRESHOLDED:
        return binomial(a * (segment_count - 1) + params.b, r) ** p
    return binomial(a * segment_count, r) ** p


def extraneous_free_counts(
    params: Params, variant: Variant = Variant.NONTERMINAL, budget: int = DEFAULT_BUDGET
) -> list[int]:
    """Entry ``k`` counts words whose SCM image has ``k`` segments (entry 0 is always 0)."""
    _check_variant(variant, params.b)
    counts = [0] * (params.n + 2)
    for w in enumerate_words(params, budget):
        counts[len(word_to_scm(w, variant, params.b).segments)] += 1
    return counts


def count_extraneous_free_scms(
    params: Params,
    segment_count: int,
    variant: Variant = Variant.NONTERMINAL,
    budget: int = DEFAULT_BUDGET,
) -> int:
    if segment_count < 1:
        raise ValueError(f"segment_count must be >= 1, got {segment_count}")
    counts = extraneous_free_counts(params, variant, budget)
    return counts[segment_count] if segment_count < len(counts) else 0
