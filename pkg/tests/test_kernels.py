"""The compiled and pure-Python reduction kernels must agree exactly."""

import itertools
import random

import pytest

from kiselman._reduce_py import reduce_word as reduce_py

compiled = pytest.importorskip("kiselman._speedups", reason="extension not built")


def test_exhaustive_small_words():
    for n in (2, 3):
        for length in range(7):
            for w in itertools.product(range(1, n + 1), repeat=length):
                assert compiled.reduce_word(w) == reduce_py(w)


def test_random_long_words():
    rng = random.Random(42)
    for _ in range(2000):
        n = rng.randint(2, 6)
        w = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 40)))
        assert compiled.reduce_word(w) == reduce_py(w)


def test_accepts_lists_and_tuples():
    assert compiled.reduce_word([1, 2, 1]) == (2, 1)
    assert reduce_py([1, 2, 1]) == (2, 1)
    assert compiled.reduce_word(()) == ()
