import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kiselman import core

words = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.just(n), st.lists(st.integers(1, n), max_size=8).map(tuple)
    )
)


def test_idempotent_generator_relation():
    assert core.reduce(2, (1, 1)) == core.generator(2, 1)


def test_braidlike_relations_rank2():
    # i=2, j=1: both three-letter relation words collapse to (2, 1)
    assert core.reduce(2, (1, 2, 1)).letters == (2, 1)
    assert core.reduce(2, (2, 1, 2)).letters == (2, 1)


def test_empty_word_is_unit():
    assert core.reduce(3, ()) == core.unit(3)
    assert core.parse_word("") == ()


def test_mixed_gap_word_is_canonical():
    # between the two 2s sit a 1 (smaller) and a 3 (larger): no rule applies
    assert core.reduce(3, (2, 1, 3, 2)).letters == (2, 1, 3, 2)


def test_letter_out_of_range_rejected():
    with pytest.raises(core.MalformedWordError):
        core.reduce(2, (3,))


def test_rank_mismatch_rejected():
    with pytest.raises(core.RankMismatchError):
        core.multiply(core.unit(2), core.unit(3))


def test_unit_and_zero_absorption():
    for n in (2, 3):
        e, f = core.unit(n), core.zero(n)
        x = core.reduce(n, (2, 1))
        assert e * x == x == x * e
        assert f * x == f == x * f


def test_multiply_matches_presentation():
    a1 = core.generator(2, 1)
    a21 = core.reduce(2, (2, 1))
    assert core.multiply(a1, a21) == a21


def test_content():
    assert core.content(core.unit(2)) == frozenset()
    assert core.content(core.reduce(2, (2, 1))) == frozenset({1, 2})


def test_idempotent_ordering_and_zero():
    assert core.idempotent(3, {1, 3}).letters == (3, 1)
    assert core.idempotent(3, ()) == core.unit(3)
    assert core.idempotent(3, {1, 2, 3}) == core.zero(3)
    with pytest.raises(core.MalformedWordError):
        core.idempotent(3, {4})


def test_power_examples():
    x = core.reduce(2, (1, 2))
    assert core.power(x, 1) == x
    assert core.power(x, 2) == core.idempotent(2, {1, 2})
    assert core.power(x, 1) != core.idempotent(2, {1, 2})
    with pytest.raises(ValueError):
        core.power(x, 0)


def test_tau_examples():
    assert core.tau(core.unit(2)) == core.unit(2)
    assert core.tau(core.generator(2, 1)) == core.generator(2, 2)
    x = core.reduce(2, (1, 2))
    assert core.tau(x) == x


@given(words)
@settings(max_examples=300, deadline=None)
def test_reduce_is_idempotent(data):
    n, w = data
    x = core.reduce(n, w)
    assert core.reduce(n, x.letters) == x


@given(words)
@settings(max_examples=300, deadline=None)
def test_canonical_between_occurrence_invariant(data):
    n, w = data
    letters = core.reduce(n, w).letters
    for p, v in enumerate(letters):
        for q in range(p + 1, len(letters)):
            if letters[q] != v:
                continue
            gap = letters[p + 1 : q]
            assert any(t < v for t in gap) and any(t > v for t in gap)
            break


@given(words, words, words)
@settings(max_examples=200, deadline=None)
def test_associativity(d1, d2, d3):
    n = d1[0]
    # clamp letters: the three draws may carry different ranks
    x, y, z = (core.reduce(n, tuple(min(i, n) for i in w[1])) for w in (d1, d2, d3))
    assert (x * y) * z == x * (y * z)


@given(words, words)
@settings(max_examples=200, deadline=None)
def test_content_homomorphism(d1, d2):
    n = d1[0]
    x = core.reduce(n, d1[1])
    y = core.reduce(n, tuple(min(i, n) for i in d2[1]))
    assert core.content(x * y) == core.content(x) | core.content(y)


@given(words, words)
@settings(max_examples=200, deadline=None)
def test_tau_antiautomorphism(d1, d2):
    n = d1[0]
    x = core.reduce(n, d1[1])
    y = core.reduce(n, tuple(min(i, n) for i in d2[1]))
    assert core.tau(x * y) == core.tau(y) * core.tau(x)
    assert core.tau(core.tau(x)) == x


def test_word_round_trip():
    w = (2, 1, 3, 2)
    assert core.parse_word(core.format_word(w)) == w
    assert core.parse_word("2, 1, 3, 2") == w
