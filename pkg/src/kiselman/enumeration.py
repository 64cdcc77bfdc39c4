"""Enumeration of K_n and the brute-force congruence oracle.

The enumeration is a breadth-first walk of the right Cayley graph starting
at the unit, deduplicating by canonical word.  The oracle materializes all
words up to a length bound and computes the congruence generated by the
defining relations by union-find, applying every shortening relation
instance in every context.  Because each relation instance connects a
longer word to a shorter one, processing words in increasing length order
discovers exactly the edges available within the bound; running the
closure at two consecutive bounds and comparing the restricted partitions
is the slack-stability check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from kiselman.core import Element, generator, multiply, unit


class BudgetExceededError(RuntimeError):
    """The word universe for the oracle would exceed the configured budget."""


class OracleInstabilityError(RuntimeError):
    """The congruence classes changed between slack levels; the length bound
    is too small to trust."""


@dataclass(frozen=True)
class ElementList:
    """A materialized, shortlex-sorted chunk of K_n."""

    rank: int
    elements: tuple[Element, ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def enumerate_elements(n: int, cap: int = 1_000_000) -> ElementList:
    """BFS over right multiplication by generators, deduplicated.

    Marked complete iff closure is reached within ``cap`` elements;
    otherwise the partial list is returned with ``complete=False``.
    """
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    gens = [generator(n, i) for i in range(1, n + 1)]
    e = unit(n)
    seen = {e}
    frontier = [e]
    complete = True
    while frontier:
        nxt = []
        for x in frontier:
            for a in gens:
                y = multiply(x, a)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            complete = False
            break
        frontier = nxt
    elements = tuple(sorted(seen, key=lambda x: x.shortlex_key))
    if not complete:
        elements = elements[:cap]
    return ElementList(rank=n, elements=elements, complete=complete)


@dataclass(frozen=True)
class CongruencePartition:
    """Partition of all words of length <= max_len into congruence classes."""

    rank: int
    max_len: int
    slack: int
    class_ids: dict  # word tuple -> class id (ids are dense, ordered by shortlex minimum)
    num_classes: int

    def same_class(self, u, v) -> bool:
        return self.class_ids[tuple(u)] == self.class_ids[tuple(v)]


def _all_words(n: int, max_len: int):
    """All words over [n] of length 0..max_len, in increasing length order."""
    yield ()
    for length in range(1, max_len + 1):
        for w in iter_product(range(1, n + 1), repeat=length):
            yield w


def _closure_roots(n: int, bound_small: int, bound_large: int, keep_len: int):
    """Union-find congruence closure; returns the root maps for words of
    length <= keep_len at both bounds."""
    words = list(_all_words(n, bound_large))
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    def snapshot() -> dict:
        return {w: find(index[w]) for w in words if len(w) <= keep_len}

    snap_small = None
    for w in words:
        if snap_small is None and len(w) > bound_small:
            snap_small = snapshot()
        length = len(w)
        k = index[w]
        for p in range(length - 1):
            a, b = w[p], w[p + 1]
            if a == b:
                # a_i a_i -> a_i
                union(k, index[w[: p + 1] + w[p + 2 :]])
            if p + 2 < length:
                c = w[p + 2]
                if a == c and b < a:
                    # a_i a_j a_i -> a_i a_j  (j < i)
                    union(k, index[w[: p + 2] + w[p + 3 :]])
                if a == c and b > a:
                    # a_j a_i a_j -> a_i a_j  (j < i)
                    union(k, index[w[:p] + (b, a) + w[p + 3 :]])
    if snap_small is None:
        snap_small = snapshot()
    return snap_small, snapshot()


def _label(roots: dict) -> dict:
    """Relabel a root map with dense ids in shortlex-first-seen order."""
    ids: dict = {}
    out = {}
    for w in sorted(roots, key=lambda w: (len(w), w)):
        root = roots[w]
        if root not in ids:
            ids[root] = len(ids)
        out[w] = ids[root]
    return out


def congruence_oracle(
    n: int,
    max_len: int,
    slack: int = 2,
    budget: int = 5_000_000,
) -> CongruencePartition:
    """Exact congruence classes of all words of length <= max_len.

    Relation instances are applied in every context within length bound
    max_len + slack; stability against bound max_len + slack + 1 is
    required, so both closures are computed.
    """
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    if n ** (max_len + slack + 1) > budget:
        raise BudgetExceededError(
            f"word universe n={n}, bound={max_len + slack + 1} exceeds budget {budget}"
        )
    roots_small, roots_large = _closure_roots(
        n, max_len + slack, max_len + slack + 1, max_len
    )
    labels_small = _label(roots_small)
    labels_large = _label(roots_large)
    if labels_small != labels_large:
        raise OracleInstabilityError(
            f"classes differ between slack {slack} and {slack + 1}; "
            "increase slack or the budget"
        )
    return CongruencePartition(
        rank=n,
        max_len=max_len,
        slack=slack,
        class_ids=labels_small,
        num_classes=len(set(labels_small.values())),
    )


def cardinality_table(max_rank: int = 4, cap: int = 1_000_000) -> list[tuple[int, int]]:
    """[(n, |K_n|)] for n = 2..max_rank; truncated at the first incomplete
    enumeration.  Consecutive ratios must be strictly increasing."""
    table: list[tuple[int, int]] = []
    for n in range(2, max_rank + 1):
        listing = enumerate_elements(n, cap=cap)
        if not listing.complete:
            break
        table.append((n, len(listing)))
    ratios = [b / a for (_, a), (_, b) in zip(table, table[1:])]
    if any(r2 <= r1 for r1, r2 in zip(ratios, ratios[1:])):
        raise AssertionError(f"growth ratios not increasing: {ratios}")
    return table
