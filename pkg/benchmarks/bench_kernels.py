"""Compare the numba and numpy key kernels.

    python benchmarks/bench_kernels.py [--rank 3] [--length 8] [--repeat 3]

The first numba call per kernel includes JIT compilation (or a cache load);
that cost is reported separately from the steady-state timings.
"""

import argparse
import time

import numpy as np

from plactic import kernels
from plactic.identities import SearchBounds, shortest_identity_search
from plactic.monoid import ALL_MONOIDS


def all_words(rank, length):
    grid = np.indices((rank,) * length).reshape(length, -1).T + 1
    return np.ascontiguousarray(grid, dtype=np.int64)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--length", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--search", default="baxt", help="monoid for the search timing")
    args = ap.parse_args()

    words = all_words(args.rank, args.length)
    print(f"{len(words)} words of length {args.length} over {args.rank} letters")
    backends = kernels.available_backends()
    print(f"{'monoid':<10}" + "".join(f"{b:>12}" for b in backends) + f"{'first call':>12}{'speedup':>10}")
    for m in ALL_MONOIDS:
        row, times = f"{m.value:<10}", {}
        first = float("nan")
        if "numba" in backends:
            t0 = time.perf_counter()
            kernels.batch_keys(m.value, words[:4], args.rank, "numba")
            first = time.perf_counter() - t0
        ref = None
        for b in backends:
            keys = kernels.batch_keys(m.value, words, args.rank, b)
            if ref is None:
                ref = keys
            elif not np.array_equal(ref, keys):
                raise SystemExit(f"backends disagree on {m.value}")
            times[b] = best_of(lambda: kernels.batch_keys(m.value, words, args.rank, b), args.repeat)
            row += f"{times[b]:>11.4f}s"
        speedup = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        print(row + f"{first:>11.3f}s{speedup:>9.1f}x")

    bounds = SearchBounds(3, 4)
    for b in backends:
        t0 = time.perf_counter()
        shortest_identity_search(args.search, 6 if args.search == "baxt" else 4, bounds, backend=b)
        print(f"search {args.search} ({b}): {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
