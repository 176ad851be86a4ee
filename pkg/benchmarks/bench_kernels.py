"""Time the numba and numpy descent-histogram kernels against each other.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case enumerates every colored multipermutation of the given (p, r, a);
the first numba call includes compilation (or cache loading) and is reported
separately.
"""

import argparse
import time

import numpy as np

from geneulerian import _kernels
from geneulerian.exact_arith import total_words

CASES = [
    (3, 2, 3),   # largest acceptance grid point, 65,610 words
    (4, 2, 2),   # 645,120 words
    (5, 1, 3),   # 29,160 words
    (3, 3, 2),   # 860,160 words
    (8, 1, 2),   # 10,321,920 words
]


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels.HAVE_NUMBA:
        t0 = time.perf_counter()
        _kernels.histogram_numba(1, 1, 1)
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.3f}s")

    print(f"{'p':>2} {'r':>2} {'a':>2} {'words':>12} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for p, r, a in CASES:
        words = total_words(p, r, a)
        t_np, h_np = best_of(lambda: _kernels.histogram_numpy(p, r, a), args.repeat)
        if _kernels.HAVE_NUMBA:
            t_nb, h_nb = best_of(lambda: _kernels.histogram_numba(p, r, a), args.repeat)
            assert np.array_equal(h_np, h_nb)
            speed = f"{t_np / t_nb:8.1f}x"
            nb = f"{t_nb:10.4f}"
        else:
            nb, speed = f"{'n/a':>10}", f"{'':>8}"
        assert int(h_np.sum()) == words
        print(f"{p:>2} {r:>2} {a:>2} {words:>12,} {t_np:10.4f} {nb} {speed}")


if __name__ == "__main__":
    main()
