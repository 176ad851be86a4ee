import itertools
from collections import Counter

import pytest

from geneulerian.words import ColoredEntry, ColoredWord, Params

# the worked example word used throughout (r=3, p=5, a=3)
EXAMPLE_WORD = "2.1 4.1 1.3 3.3 1.1 2.1 4.1 2.2 5.2 5.3 1.1 5.1 4.2 3.3 3.3"
EXAMPLE_SCM = "2.1 4.1 1.3 3.3 | 1.1 2.1 4.1 | 2.2 5.2 5.3 | | 1.1 5.1 4.2 3.3 | 3.3"
EXAMPLE_PARAMS = Params(a=3, b=0, r=3, p=5)

# (a, b, r, p) grid small enough for brute force over all (value, color) strings
SMALL_GRID = [
    Params(a, b, r, p)
    for a in (1, 2, 3)
    for b in range(a)
    for r in (1, 2)
    for p in (1, 2, 3)
    if (a * p) ** (r * p) <= 50_000
]


def brute_words(p, r, a):
    """Every colored word, by filtering all (value, color) strings of length rp.

    Deliberately naive and unrelated to the library's enumerators.
    """
    n = r * p
    alphabet = [(v, c) for v in range(1, p + 1) for c in range(1, a + 1)]
    out = []
    for seq in itertools.product(alphabet, repeat=n):
        counts = Counter(v for v, _ in seq)
        if all(counts[v] == r for v in range(1, p + 1)):
            out.append(seq)
    return out


def brute_weak_descents(seq, b):
    # direct reading of the order: compare (color, value) tuples
    keys = [(c, v) for v, c in seq]
    d = sum(1 for x, y in zip(keys, keys[1:]) if x >= y)
    return d + (1 if seq[-1][1] > b else 0)


def brute_distribution(params):
    dist = [0] * (params.n + 1)
    for seq in brute_words(params.p, params.r, params.a):
        dist[brute_weak_descents(seq, params.b)] += 1
    return dist


def as_word(seq, params):
    return ColoredWord(tuple(ColoredEntry(v, c) for v, c in seq), params)


@pytest.fixture
def example_params():
    return EXAMPLE_PARAMS


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
