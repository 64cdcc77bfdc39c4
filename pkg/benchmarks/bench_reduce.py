"""Benchmark the compiled reduction kernel against the pure-Python fallback.

Usage: python benchmarks/bench_reduce.py [--words 20000] [--rank 4] [--len 40]

Reduction is the hot inner loop of enumeration, the word-problem check,
and full-element Monte Carlo, so this is the speedup that matters.
"""

import argparse
import random
import time

from kiselman._reduce_py import reduce_word as reduce_py

try:
    from kiselman._speedups import reduce_word as reduce_c
except ImportError:
    reduce_c = None


def make_words(count, rank, max_len, seed=1234):
    rng = random.Random(seed)
    return [
        tuple(rng.randint(1, rank) for _ in range(rng.randint(0, max_len)))
        for _ in range(count)
    ]


def bench(fn, words, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for w in words:
            fn(w)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--words", type=int, default=20_000)
    parser.add_argument("--rank", type=int, default=4)
    parser.add_argument("--len", dest="max_len", type=int, default=40)
    args = parser.parse_args()

    words = make_words(args.words, args.rank, args.max_len)
    t_py = bench(reduce_py, words)
    print(f"pure python: {t_py:.3f}s for {args.words} words "
          f"(rank {args.rank}, length <= {args.max_len})")
    if reduce_c is None:
        print("compiled kernel not built; install with the extension to compare")
        return
    mismatches = sum(reduce_c(w) != reduce_py(w) for w in words[:2000])
    t_c = bench(reduce_c, words)
    print(f"compiled:    {t_c:.3f}s  (speedup {t_py / t_c:.1f}x, "
          f"{mismatches} mismatches in 2000 spot checks)")


if __name__ == "__main__":
    main()
