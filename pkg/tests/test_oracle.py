import pytest
from hypothesis import given, settings, strategies as st

from trivial_area import oracle
from trivial_area.oracle import (
    OracleBoundError, all_words, code_word, exhaustive_areas, exhaustive_partition_min,
    oracle_area_powers, oracle_area_trivial, oracle_partition_min, word_code,
)
from trivial_area.word import Word, invert, parse_word, swap_generators

short_words = st.text(alphabet="aAbB", max_size=9).map(Word)


@pytest.mark.parametrize("text,area", [("", 0), ("aA", 0), ("aB", 2), ("aabAAB", 2)])
def test_trivial_examples(text, area):
    assert oracle_area_trivial(text) == area


@pytest.mark.parametrize("text,area", [("a^4", 1), ("bB", 0), ("abAB", 2), ("", 0)])
def test_powers_examples(text, area):
    assert oracle_area_powers(parse_word(text)) == area


@pytest.mark.parametrize("text,area", [("aa", 1), ("aA", 0), ("abAB", 2), ("", 0)])
def test_partition_examples(text, area):
    assert oracle_partition_min(text) == area


def test_bounds():
    with pytest.raises(OracleBoundError):
        oracle_area_trivial("a" * 15)
    with pytest.raises(OracleBoundError):
        oracle_area_powers("a" * 15)
    with pytest.raises(OracleBoundError):
        oracle_partition_min("a" * 13)
    with pytest.raises(OracleBoundError):
        exhaustive_partition_min(11)


def test_code_round_trip():
    for L in range(4):
        for code, w in enumerate(all_words(L)):
            assert word_code(w) == code
            assert code_word(code, L) == w


def test_tables_match_per_word_oracles():
    T = exhaustive_areas(6, "trivial")
    P = exhaustive_areas(6, "powers")
    Q = exhaustive_partition_min(6)
    for L in range(7):
        for code, w in enumerate(all_words(L)):
            assert T[L][code] == oracle_area_trivial(w), w
            assert P[L][code] == oracle_area_powers(w), w
            assert Q[L][code] == oracle_partition_min(w), w


@given(short_words)
def test_parity(w):
    assert oracle_area_trivial(w) % 2 == len(w) % 2


@given(short_words)
def test_symmetries(w):
    for f in (oracle_area_trivial, oracle_area_powers, oracle_partition_min):
        a = f(w)
        assert f(invert(w)) == a
        assert f(swap_generators(w)) == a


@settings(max_examples=50)
@given(short_words)
def test_powers_never_exceed_trivial(w):
    assert oracle_area_powers(w) <= oracle_area_trivial(w) <= len(w)


def test_clear_cache():
    oracle_area_powers("abab")
    oracle.clear_cache()
    assert oracle_area_powers("abab") == 3
