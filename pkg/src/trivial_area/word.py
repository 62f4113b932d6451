"""Words over a^{±1}, b^{±1}: parsing, formatting, free and cyclic reduction.

A word is stored as a compressed string where ``a``/``b`` are the generators
and ``A``/``B`` their inverses, so ``"aabAAB"`` is a^2 b a^-2 b^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

GENERATORS = ("a", "b")
LETTERS = "aAbB"

_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_SWAP = {"a": "b", "A": "B", "b": "a", "B": "A"}

_TOKEN = re.compile(r"\s*(?:([ab])\^(-?)(\d+)|([abAB]))")


class WordSyntaxError(ValueError):
    """Raised when text does not match the word grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Letter(NamedTuple):
    generator: str
    sign: int

    @property
    def char(self) -> str:
        return self.generator if self.sign > 0 else self.generator.upper()

    @classmethod
    def from_char(cls, c: str) -> "Letter":
        return cls(c.lower(), 1 if c.islower() else -1)


class Syllable(NamedTuple):
    generator: str
    exponent: int

    def expand(self) -> str:
        c = self.generator if self.exponent > 0 else self.generator.upper()
        return c * abs(self.exponent)


@dataclass(frozen=True)
class Word:
    """Immutable word; ``text`` is the compressed letter string."""

    text: str = ""

    def __post_init__(self):
        bad = set(self.text) - set(LETTERS)
        if bad:
            raise ValueError(f"invalid letters {sorted(bad)!r} in word")

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter.from_char(c) for c in self.text)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.text[i])
        return Letter.from_char(self.text[i])

    def __add__(self, other: "Word") -> "Word":
        return Word(self.text + other.text)

    def __str__(self) -> str:
        return self.text

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(self)

    @classmethod
    def from_letters(cls, letters) -> "Word":
        return cls("".join(Letter(*x).char for x in letters))

    @classmethod
    def from_syllables(cls, syls) -> "Word":
        return cls("".join(Syllable(*s).expand() for s in syls))


@dataclass(frozen=True)
class SyllableWord:
    """Alternating syllable decomposition a^{i_1} b^{i'_1} ... a^{i_m} b^{i'_m}."""

    syllables: tuple[Syllable, ...]

    def __post_init__(self):
        for s in self.syllables:
            if s.exponent == 0:
                raise ValueError("syllable exponent must be nonzero")
        for s, t in zip(self.syllables, self.syllables[1:]):
            if s.generator == t.generator:
                raise ValueError("adjacent syllables must have distinct generators")

    @property
    def m(self) -> int:
        return len(self.syllables) // 2

    @property
    def is_canonical(self) -> bool:
        syls = self.syllables
        return (
            len(syls) >= 2
            and len(syls) % 2 == 0
            and syls[0].generator == "a"
            and syls[-1].generator == "b"
        )

    @property
    def a_exponents(self) -> tuple[int, ...]:
        return tuple(s.exponent for s in self.syllables[0::2])

    @property
    def b_exponents(self) -> tuple[int, ...]:
        return tuple(s.exponent for s in self.syllables[1::2])

    def word(self) -> Word:
        return Word.from_syllables(self.syllables)

    @classmethod
    def from_exponents(cls, a_exps, b_exps) -> "SyllableWord":
        if len(a_exps) != len(b_exps):
            raise ValueError("need as many a-exponents as b-exponents")
        syls = []
        for i, ip in zip(a_exps, b_exps):
            syls += [Syllable("a", i), Syllable("b", ip)]
        return cls(tuple(syls))


@dataclass(frozen=True)
class CanonicalForm:
    """Cyclically reduced conjugate of a word, rotated to start with an a-syllable.

    ``kind`` is ``"empty"``, ``"power"`` or ``"alternating"``. The input word is
    freely equal to ``conjugator * word * conjugator^-1``. ``source_positions``
    gives, for each letter of ``word``, its 1-based position in the input.
    """

    kind: str
    word: Word
    syllables: tuple[Syllable, ...]
    rotation: int
    cancelled_pairs: int
    source_positions: tuple[int, ...]
    conjugator: Word

    @property
    def generator(self) -> str | None:
        return self.syllables[0].generator if self.kind == "power" else None

    @property
    def exponent(self) -> int:
        return self.syllables[0].exponent if self.kind == "power" else 0

    @property
    def syllable_word(self) -> SyllableWord | None:
        if self.kind != "alternating":
            return None
        return SyllableWord(self.syllables)


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    return parse_word(w)


def parse_word(text: str) -> Word:
    """Parse ``text`` in the word grammar.

    Lowercase letters are generators, uppercase their inverses, and ``a^k`` /
    ``b^-k`` expand to powers. Whitespace between tokens is ignored.

    >>> parse_word("a^2 b^-3").text
    'aaBBB'
    """
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
        gen, minus, digits, simple = m.groups()
        if simple:
            out.append(simple)
        else:
            k = int(digits)
            if k == 0:
                raise WordSyntaxError("zero exponent", m.start(3))
            out.append((gen.upper() if minus else gen) * k)
        pos = m.end()
    return Word("".join(out))


def _runs(text: str) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    for c in text:
        if runs and runs[-1][0] == c:
            runs[-1] = (c, runs[-1][1] + 1)
        else:
            runs.append((c, 1))
    return runs


def format_word(w: Word, style: str = "compressed") -> str:
    """Render ``w`` as compressed letters or as space-separated caret powers."""
    if style == "compressed":
        return w.text
    if style == "caret":
        parts = []
        for c, k in _runs(w.text):
            parts.append(f"{c.lower()}^{k if c.islower() else -k}")
        return " ".join(parts)
    raise ValueError(f"unknown style {style!r}")


def is_inverse_pair(x: str, y: str) -> bool:
    return _INVERSE[x] == y


def _reduce_positions(text: str) -> list[int]:
    stack: list[int] = []
    for i, c in enumerate(text):
        if stack and _INVERSE[text[stack[-1]]] == c:
            stack.pop()
        else:
            stack.append(i)
    return stack


def free_reduce(w: Word) -> Word:
    text = w.text
    return Word("".join(text[i] for i in _reduce_positions(text)))


def is_freely_reduced(w: Word) -> bool:
    t = w.text
    return all(_INVERSE[x] != y for x, y in zip(t, t[1:]))


def invert(w: Word) -> Word:
    return Word("".join(_INVERSE[c] for c in reversed(w.text)))


def swap_generators(w: Word) -> Word:
    """Exchange a and b throughout ``w``."""
    return Word("".join(_SWAP[c] for c in w.text))


def syllables(w: Word) -> tuple[Syllable, ...]:
    if not is_freely_reduced(w):
        raise ValueError(f"word {w.text!r} is not freely reduced")
    out: list[Syllable] = []
    for c in w.text:
        e = 1 if c.islower() else -1
        g = c.lower()
        if out and out[-1].generator == g:
            out[-1] = Syllable(g, out[-1].exponent + e)
        else:
            out.append(Syllable(g, e))
    return tuple(out)


def cyclic_canonicalize(w: Word) -> CanonicalForm:
    """Reduce ``w`` to a cyclically reduced conjugate starting with an a-syllable.

    Area in either presentation is unchanged by this. Among rotations that
    start an a-syllable, the one starting earliest in the reduced word wins.
    """
    text = w.text
    keep = _reduce_positions(text)
    cancelled = (len(text) - len(keep)) // 2

    lo, hi = 0, len(keep) - 1
    while lo < hi and _INVERSE[text[keep[lo]]] == text[keep[hi]]:
        lo += 1
        hi -= 1
        cancelled += 1
    prefix = "".join(text[i] for i in keep[:lo])
    core = keep[lo:hi + 1] if keep else []

    if not core:
        return CanonicalForm("empty", Word(), (), 0, cancelled, (), Word(prefix))

    chars = [text[i] for i in core]
    L = len(chars)
    starts = [p for p in range(L) if chars[p].lower() != chars[p - 1].lower()]
    if not starts:
        word = Word("".join(chars))
        return CanonicalForm(
            "power", word, syllables(word), 0, cancelled,
            tuple(i + 1 for i in core), Word(prefix),
        )

    rot = next(p for p in starts if chars[p].lower() == "a")
    order = core[rot:] + core[:rot]
    word = Word("".join(text[i] for i in order))
    conj = Word(prefix + "".join(chars[:rot]))
    return CanonicalForm(
        "alternating", word, syllables(word), rot, cancelled,
        tuple(i + 1 for i in order), conj,
    )
