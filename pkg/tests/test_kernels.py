import os
import subprocess
import sys

import numpy as np
import pytest

from geneulerian import _kernels
from geneulerian.words import Params, enumerate_words, nonterminal_weak_descents


def python_histogram(p, r, a):
    n = r * p
    hist = np.zeros((n, a), dtype=np.int64)
    for word in enumerate_words(Params(a, 0, r, p)):
        hist[nonterminal_weak_descents(word), word[-1].color - 1] += 1
    return hist


@pytest.mark.parametrize(
    "p, r, a", [(1, 1, 1), (1, 1, 3), (2, 1, 1), (1, 2, 2), (3, 1, 2), (2, 2, 2), (3, 2, 2), (2, 3, 2)]
)
def test_backends_agree_with_python_enumeration(p, r, a):
    expected = python_histogram(p, r, a)
    np.testing.assert_array_equal(_kernels.histogram_numpy(p, r, a), expected)
    if _kernels.HAVE_NUMBA:
        np.testing.assert_array_equal(_kernels.histogram_numba(p, r, a), expected)


def test_backends_agree_on_largest_grid_point():
    if not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    np.testing.assert_array_equal(
        _kernels.histogram_numba(3, 2, 3), _kernels.histogram_numpy(3, 2, 3)
    )


def test_numpy_blocking_over_colorings(monkeypatch):
    # force several coloring blocks and single-arrangement blocks
    monkeypatch.setattr(_kernels, "_BLOCK_ROWS", 7)
    np.testing.assert_array_equal(_kernels.histogram_numpy(2, 2, 2), python_histogram(2, 2, 2))


def test_multiset_arrangements_lexicographic():
    rows = [tuple(x) for x in _kernels.multiset_arrangements(2, 2)]
    assert rows == [(0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0)]


def test_env_flag_selects_numpy():
    env = dict(os.environ, GENEULERIAN_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from geneulerian import _kernels; print(_kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
