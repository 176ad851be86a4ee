"""Hot loop behind the brute-force descent counts.

Every colored multipermutation is reduced to a key sequence where the entry
``value^color`` becomes ``(color - 1) * p + (value - 1)``; comparing keys is the
colored order.  The kernels return a histogram ``hist[d, c]`` counting words with
``d`` non-terminal weak descents whose final entry has color ``c + 1``.  Any
threshold ``b`` can be read off that table, so one pass serves every ``b``.

Two interchangeable back ends exist:

* ``histogram_numba``: nested loops compiled with ``numba.njit``.
* ``histogram_numpy``: block-vectorized numpy, no compiler needed.

``descent_color_histogram`` picks numba unless the environment variable
``GENEULERIAN_DISABLE_NUMBA`` is set to a non-empty value other than ``0``, or
numba cannot be imported.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

__all__ = [
    "BACKEND",
    "HAVE_NUMBA",
    "descent_color_histogram",
    "histogram_numba",
    "histogram_numpy",
    "multiset_arrangements",
]

HAVE_NUMBA = numba is not None
_DISABLED = os.environ.get("GENEULERIAN_DISABLE_NUMBA", "") not in ("", "0")
BACKEND = "numba" if HAVE_NUMBA and not _DISABLED else "numpy"

# rows of the (arrangement, coloring) product handled per numpy block
_BLOCK_ROWS = 1 << 16


def _next_permutation(arr):
    """Advance ``arr`` to its lexicographic successor in place.

    Works for arrays with repeated values.  Returns False (leaving ``arr``
    untouched) when ``arr`` is already the last arrangement.
    """
    n = arr.shape[0]
    i = n - 2
    while i >= 0 and arr[i] >= arr[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while arr[j] <= arr[i]:
        j -= 1
    tmp = arr[i]
    arr[i] = arr[j]
    arr[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = arr[lo]
        arr[lo] = arr[hi]
        arr[hi] = tmp
        lo += 1
        hi -= 1
    return True


if HAVE_NUMBA:
    _next_permutation_jit = numba.njit(cache=True)(_next_permutation)
else:  # pragma: no cover
    _next_permutation_jit = _next_permutation


def _histogram_loops(p, r, a):
    n = r * p
    hist = np.zeros((n, a), dtype=np.int64)
    values = np.empty(n, dtype=np.int64)
    for t in range(n):
        values[t] = t // r
    colors = np.zeros(n, dtype=np.int64)
    keys = np.empty(n, dtype=np.int64)
    # flags[t] = 1 iff keys[t] >= keys[t + 1]
    flags = np.zeros(max(n - 1, 1), dtype=np.int64)
    while True:
        for t in range(n):
            colors[t] = 0
            keys[t] = values[t]
        d = 0
        for t in range(n - 1):
            flags[t] = 1 if keys[t] >= keys[t + 1] else 0
            d += flags[t]
        while True:
            hist[d, colors[n - 1]] += 1
            # odometer over the a**n colorings, last position fastest
            t = n - 1
            while t >= 0 and colors[t] == a - 1:
                colors[t] = 0
                keys[t] = values[t]
                t -= 1
            if t < 0:
                break
            colors[t] += 1
            keys[t] += p
            # only pairs touching positions t..n-1 can change
            for k in range(max(t - 1, 0), n - 1):
                f = 1 if keys[k] >= keys[k + 1] else 0
                d += f - flags[k]
                flags[k] = f
        if not _next_permutation_jit(values):
            break
    return hist


if HAVE_NUMBA:
    _histogram_loops_jit = numba.njit(cache=True)(_histogram_loops)


def histogram_numba(p: int, r: int, a: int) -> np.ndarray:
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    return _histogram_loops_jit(p, r, a)


def multiset_arrangements(p: int, r: int) -> np.ndarray:
    """All arrangements of {0^r, ..., (p-1)^r} in lexicographic order, one per row."""
    n = r * p
    current = np.repeat(np.arange(p, dtype=np.int64), r)
    rows = [current.copy()]
    while _next_permutation(current):
        rows.append(current.copy())
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def _colorings(a: int, n: int, start: int, stop: int) -> np.ndarray:
    """Colorings ``start..stop-1`` of the a**n odometer, as 0-based digits."""
    idx = np.arange(start, stop, dtype=np.int64)
    place = a ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // place[None, :]) % a


def histogram_numpy(p: int, r: int, a: int) -> np.ndarray:
    n = r * p
    hist = np.zeros((n, a), dtype=np.int64)
    arrangements = multiset_arrangements(p, r)
    n_colorings = a**n
    color_step = min(n_colorings, _BLOCK_ROWS)
    for c0 in range(0, n_colorings, color_step):
        colors = _colorings(a, n, c0, min(c0 + color_step, n_colorings))
        arr_step = max(1, _BLOCK_ROWS // colors.shape[0])
        color_part = colors[None, :, :] * p
        last = colors[:, -1]
        for m0 in range(0, arrangements.shape[0], arr_step):
            block = arrangements[m0 : m0 + arr_step]
            keys = color_part + block[:, None, :]
            d = (keys[:, :, :-1] >= keys[:, :, 1:]).sum(axis=2)
            flat = d * a + last[None, :]
            hist += np.bincount(flat.ravel(), minlength=n * a).reshape(n, a)
    return hist


def descent_color_histogram(p: int, r: int, a: int) -> np.ndarray:
    """Histogram of (non-terminal weak descents, final color) over all words.

    No budget check happens here; callers guard the word count first.
    """
    if BACKEND == "numba":
        return histogram_numba(p, r, a)
    return histogram_numpy(p, r, a)
