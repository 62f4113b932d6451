import random

import pytest
from hypothesis import given, settings, strategies as st

from trivial_area.oracle import oracle_area_trivial
from trivial_area.spelling import area_free_trivial, interval_table
from trivial_area.witness import execute_null_sequence, matching_to_null_sequence, validate_matching
from trivial_area.word import Word, free_reduce, invert, swap_generators

words = st.text(alphabet="aAbB", max_size=12).map(Word)


@pytest.mark.parametrize(
    "text,area",
    [("aabAAB", 2), ("", 0), ("aA", 0), ("aB", 2), ("abab", 4), ("abAB", 2)],
)
def test_examples(text, area):
    assert area_free_trivial(text)[0] == area


def test_example_witness():
    area, mt = area_free_trivial("aabAAB")
    assert validate_matching("aabAAB", mt) == (True, 2)
    assert len(mt.pairs) == 2


def test_table_diagonal_and_small():
    tab = interval_table("abAB")
    assert all(tab[i, i] == 1 for i in range(1, 5))
    assert tab[3, 2] == 0
    assert interval_table("aA")[1, 2] == 0


def test_table_entries_match_oracle():
    rng = random.Random(11)
    for _ in range(60):
        w = Word("".join(rng.choice("aAbB") for _ in range(rng.randint(1, 8))))
        tab = interval_table(w)
        for i in range(1, len(w) + 1):
            for j in range(i, len(w) + 1):
                assert tab[i, j] == oracle_area_trivial(w.text[i - 1:j])


@given(words)
def test_table_invariants(w):
    tab = interval_table(w)
    n = len(w)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            v = tab[i, j]
            assert 0 <= v <= j - i + 1
            assert v % 2 == (j - i + 1) % 2
            assert v <= tab[i, j - 1] + 1
            assert v <= tab[i + 1, j] + 1


@given(words)
def test_agrees_with_oracle(w):
    assert area_free_trivial(w)[0] == oracle_area_trivial(w)


@given(words)
def test_witness_round_trip(w):
    area, mt = area_free_trivial(w)
    assert validate_matching(w, mt) == (True, area)
    assert execute_null_sequence(w, matching_to_null_sequence(w, mt), "trivial") == (True, area)


@given(st.text(alphabet="aAbB", max_size=40).map(Word))
def test_symmetries_and_zero(w):
    a = area_free_trivial(w)[0]
    assert area_free_trivial(invert(w))[0] == a
    assert area_free_trivial(swap_generators(w))[0] == a
    assert (a == 0) == (len(free_reduce(w)) == 0)


@settings(max_examples=50)
@given(words, words)
def test_subadditive(u, v):
    assert area_free_trivial(u + v)[0] <= area_free_trivial(u)[0] + area_free_trivial(v)[0]


def test_cubic_operation_count():
    for n in (10, 50, 200):
        tab = interval_table(Word("ab" * (n // 2)))
        assert tab.operations <= n ** 3
        assert tab.operations == sum((n - k) * k for k in range(1, n))
