import re

import pytest
from hypothesis import given, strategies as st

from trivial_area.word import (
    Letter, Syllable, SyllableWord, Word, WordSyntaxError, cyclic_canonicalize, format_word,
    free_reduce, invert, is_freely_reduced, parse_word, swap_generators, syllables,
)

words = st.text(alphabet="aAbB", max_size=24).map(Word)


def naive_reduce(t: str) -> str:
    # rewrite one inverse pair at a time until none is left
    while True:
        u = re.sub("aA|Aa|bB|Bb", "", t, count=1)
        if u == t:
            return t
        t = u


class TestParse:
    def test_empty(self):
        assert parse_word("") == Word()
        assert len(parse_word("  ")) == 0

    def test_compressed(self):
        w = parse_word("aabAAB")
        assert w.letters == (
            Letter("a", 1), Letter("a", 1), Letter("b", 1),
            Letter("a", -1), Letter("a", -1), Letter("b", -1),
        )

    def test_caret(self):
        assert parse_word("a^2 b^-3").text == "aaBBB"

    def test_mixed_tokens(self):
        assert parse_word("a^2b A b^1") == parse_word("aabAb")

    @pytest.mark.parametrize("text,pos", [("abc", 2), ("a^0", 2), ("a^", 1), ("A^2", 1), ("x", 0)])
    def test_errors(self, text, pos):
        with pytest.raises(WordSyntaxError) as exc:
            parse_word(text)
        assert exc.value.position == pos


class TestFormat:
    def test_examples(self):
        w = Word("aaB")
        assert format_word(Word(), "compressed") == ""
        assert format_word(w, "compressed") == "aaB"
        assert format_word(w, "caret") == "a^2 b^-1"

    def test_caret_keeps_cancelling_letters_apart(self):
        assert format_word(Word("aA"), "caret") == "a^1 a^-1"

    @given(words, st.sampled_from(["compressed", "caret"]))
    def test_round_trip(self, w, style):
        assert parse_word(format_word(w, style)) == w

    @given(st.lists(st.tuples(st.sampled_from("ab"), st.integers(-5, 5).filter(bool)), max_size=6))
    def test_reformat_idempotent(self, syls):
        text = " ".join(f"{g}^{e}" for g, e in syls)
        once = format_word(parse_word(text), "caret")
        assert format_word(parse_word(once), "caret") == once


class TestFreeReduce:
    @pytest.mark.parametrize("text", ["aA", "abBA"])
    def test_trivial(self, text):
        assert free_reduce(Word(text)) == Word()

    def test_figure_word(self):
        w = parse_word("a^-1 a^2 b^3 a^4 b^-1 a^2 b^2 b^-1 b a^3 b b^-1 b")
        expected = "abbbaaaaBaabbaaab"
        assert naive_reduce(w.text) == expected
        assert free_reduce(w).text == expected
        assert free_reduce(w) == parse_word("a b^3 a^4 b^-1 a^2 b^2 a^3 b")

    @given(words)
    def test_matches_naive(self, w):
        assert free_reduce(w).text == naive_reduce(w.text)

    @given(words)
    def test_properties(self, w):
        r = free_reduce(w)
        assert free_reduce(r) == r
        assert len(r) % 2 == len(w) % 2
        assert len(r) <= len(w)
        assert is_freely_reduced(r)


class TestInvert:
    def test_examples(self):
        assert invert(Word()) == Word()
        assert invert(Word("ab")) == Word("BA")
        assert invert(parse_word("a^2b")) == Word("BAA")  # b^-1 a^-1 a^-1

    @given(words)
    def test_involution(self, w):
        assert invert(invert(w)) == w
        assert free_reduce(w + invert(w)) == Word()
        assert swap_generators(swap_generators(w)) == w


class TestSyllables:
    def test_examples(self):
        assert syllables(Word()) == ()
        assert syllables(Word("aab")) == (Syllable("a", 2), Syllable("b", 1))
        assert syllables(Word("aBBBa")) == (Syllable("a", 1), Syllable("b", -3), Syllable("a", 1))

    def test_rejects_unreduced(self):
        with pytest.raises(ValueError):
            syllables(Word("abBa"))

    @given(words)
    def test_concatenation(self, w):
        r = free_reduce(w)
        syls = syllables(r)
        assert Word.from_syllables(syls) == r
        assert all(s.generator != t.generator for s, t in zip(syls, syls[1:]))

    def test_syllable_word(self):
        sw = SyllableWord.from_exponents([2, 1], [-1, 3])
        assert sw.m == 2 and sw.is_canonical
        assert sw.word().text == "aaBabbb"
        assert not SyllableWord((Syllable("b", 1), Syllable("a", 1))).is_canonical
        with pytest.raises(ValueError):
            SyllableWord((Syllable("a", 1), Syllable("a", 1)))
        with pytest.raises(ValueError):
            SyllableWord((Syllable("a", 0),))


class TestCanonicalize:
    def test_empty(self):
        c = cyclic_canonicalize(Word("aA"))
        assert c.kind == "empty" and c.word == Word() and c.cancelled_pairs == 1

    def test_power(self):
        c = cyclic_canonicalize(Word("baaB"))
        assert c.kind == "power"
        assert (c.generator, c.exponent) == ("a", 2)
        assert c.source_positions == (2, 3)

    def test_alternating(self):
        c = cyclic_canonicalize(Word("aba"))
        assert c.kind == "alternating"
        assert c.word == Word("aab")
        assert c.syllable_word.syllables == (Syllable("a", 2), Syllable("b", 1))
        assert c.source_positions == (3, 1, 2)

    def test_rotation_prefers_earliest_a_syllable(self):
        c = cyclic_canonicalize(Word("babaB"))
        # b (aba) B is conjugate to aba
        assert c.word == Word("aab")
        c = cyclic_canonicalize(Word("bab"))
        assert c.word == Word("abb") and c.rotation == 1

    @given(words)
    def test_invariants(self, w):
        c = cyclic_canonicalize(w)
        replay = free_reduce(c.conjugator + c.word + invert(c.conjugator))
        assert replay == free_reduce(w)
        assert [w.text[p - 1] for p in c.source_positions] == list(c.word.text)
        core = c.word.text
        if c.kind == "empty":
            assert core == ""
        elif c.kind == "power":
            assert len(set(core)) == 1
        else:
            assert is_freely_reduced(c.word)
            assert core[0].lower() != core[-1].lower()
            assert len(c.syllables) % 2 == 0 and c.syllable_word.is_canonical
            assert len({ch.lower() for ch in core}) == 2
