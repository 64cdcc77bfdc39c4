"""The level function on K_n, the ultrametric it induces, and metric sets.

The level of x is the least i such that deleting generators 1..i from x
leaves the idempotent on {i+1, ..., n}.  It equals the least i with
x * e_{[i]} = f, and is computable by folding the one-step update ``g``
over any word representing x, starting from n.  The map
d(x, y) = min { i : deleting 1..i from both gives equal elements } is an
ultrametric with d(x, f) equal to the level of x.
"""

from __future__ import annotations

from kiselman.core import (
    Element,
    RankMismatchError,
    idempotent,
    multiply,
    validate_word,
    zero,
)
from kiselman.morphisms import delete


class IncompleteUniverseError(ValueError):
    """Ball/sphere/R-set queries need a complete enumeration of K_n."""


def _interval(i: int) -> range:
    """[i] = {1, ..., i}; [0] is empty."""
    return range(1, i + 1)


def level_by_definition(x: Element) -> int:
    """min { i in 0..n : deleting 1..i from x yields e_{{i+1,...,n}} }."""
    n = x.rank
    for i in range(n + 1):
        rest = idempotent(n, range(i + 1, n + 1))
        if delete(_interval(i), x) == rest:
            return i
    raise AssertionError("unreachable: i = n always qualifies")


def g(i: int, j: int) -> int:
    """One-step level update under right multiplication by a_j."""
    return i - 1 if i == j else i


def level_by_recursion(rank: int, letters) -> int:
    """Fold ``g`` over any representative word, starting from level n."""
    letters = validate_word(rank, letters)
    lvl = rank
    for j in letters:
        lvl = g(lvl, j)
    return lvl


def level(x: Element) -> int:
    """Level of an element, via the recursion on its canonical word."""
    return level_by_recursion(x.rank, x.letters)


def m_function(x: Element) -> int:
    """min { i in 0..n : x * e_{[i]} = f }; coincides with the level."""
    n = x.rank
    f = zero(n)
    for i in range(n + 1):
        if multiply(x, idempotent(n, _interval(i))) == f:
            return i
    raise AssertionError("unreachable: i = n always qualifies")


def level_sets(x: Element) -> tuple[frozenset[int], frozenset[int]]:
    """The deletion-based and absorption-based witness sets (provably equal).

    First set: { i : deleting 1..i from x gives e_{{i+1,...,n}} }.
    Second set: { i : x * e_{[i]} = f }.
    """
    n = x.rank
    f = zero(n)
    a_set = frozenset(
        i
        for i in range(n + 1)
        if delete(_interval(i), x) == idempotent(n, range(i + 1, n + 1))
    )
    b_set = frozenset(
        i
        for i in range(n + 1)
        if multiply(x, idempotent(n, _interval(i))) == f
    )
    return a_set, b_set


def distance(x: Element, y: Element) -> int:
    """Ultrametric: least truncation depth at which x and y agree."""
    if x.rank != y.rank:
        raise RankMismatchError(f"rank {x.rank} vs {y.rank}")
    for i in range(x.rank + 1):
        if delete(_interval(i), x) == delete(_interval(i), y):
            return i
    raise AssertionError("unreachable: full deletion equalizes everything")


def _require_complete(universe) -> None:
    if not universe.complete:
        raise IncompleteUniverseError("universe enumeration is not complete")


def ball(universe, center: Element, r: int) -> list[Element]:
    """Closed metric ball, in shortlex order over a complete universe."""
    _require_complete(universe)
    return [x for x in universe.elements if distance(center, x) <= r]


def sphere(universe, center: Element, r: int) -> list[Element]:
    """Metric sphere, in shortlex order over a complete universe."""
    _require_complete(universe)
    return [x for x in universe.elements if distance(center, x) == r]


def r_set(universe) -> list[Element]:
    """All x with x * a_1 = f; coincides with the radius-1 ball around f."""
    _require_complete(universe)
    n = universe.rank
    f = zero(n)
    a1 = idempotent(n, {1})
    return [x for x in universe.elements if multiply(x, a1) == f]
