"""Brute-force areas straight from the move definitions.

These are deliberately naive. ``oracle_area_trivial`` and ``oracle_area_powers``
search over null-sequences: every move shortens the word, so the residues form
a DAG and the least number of paid deletions is a memoized minimum over moves.
``oracle_partition_min`` minimizes over non-crossing monochromatic partitions.

For exhaustive sweeps the same recurrences are tabulated over every word up to
a given length (``exhaustive_areas``, ``exhaustive_partition_min``), with words
encoded as base-4 integers, first letter most significant.
"""

from __future__ import annotations

import itertools
import sys
import threading
from functools import lru_cache

import numpy as np
from numba import njit

from .word import Word, as_word

MAX_ORACLE_LEN = 14
MAX_PARTITION_LEN = 12

_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}
_DIGIT = {"a": 0, "A": 1, "b": 2, "B": 3}
_CHAR = "aAbB"

_lock = threading.Lock()


class OracleBoundError(ValueError):
    pass


def _check_len(w: Word, bound: int) -> None:
    if len(w) > bound:
        raise OracleBoundError(f"word length {len(w)} exceeds oracle bound {bound}")


@lru_cache(maxsize=None)
def _trivial(t: str) -> int:
    if not t:
        return 0
    best = sys.maxsize
    for i in range(len(t) - 1):
        if _INV[t[i]] == t[i + 1]:
            best = min(best, _trivial(t[:i] + t[i + 2:]))
            if best == 0:
                return 0
    for i in range(len(t)):
        best = min(best, 1 + _trivial(t[:i] + t[i + 1:]))
    return best


@lru_cache(maxsize=None)
def _powers(t: str) -> int:
    if not t:
        return 0
    best = sys.maxsize
    n = len(t)
    for i in range(n - 1):
        if _INV[t[i]] == t[i + 1]:
            best = min(best, _powers(t[:i] + t[i + 2:]))
            if best == 0:
                return 0
    for i in range(n):
        j = i
        while j < n and t[j] == t[i]:
            best = min(best, 1 + _powers(t[:i] + t[j + 1:]))
            j += 1
    return best


def oracle_area_trivial(w, bound: int = MAX_ORACLE_LEN) -> int:
    """Least number of single-letter deletions in a null-sequence for ``w``."""
    w = as_word(w)
    _check_len(w, bound)
    with _lock:
        return _trivial(w.text)


def oracle_area_powers(w, bound: int = MAX_ORACLE_LEN) -> int:
    """Least number of power-run deletions (a^k or b^k) in a null-sequence."""
    w = as_word(w)
    _check_len(w, bound)
    with _lock:
        return _powers(w.text)


def clear_cache() -> None:
    with _lock:
        _trivial.cache_clear()
        _powers.cache_clear()


def oracle_partition_min(w, bound: int = MAX_PARTITION_LEN) -> int:
    """Minimum number of nonzero-sum blocks over non-crossing monochromatic partitions."""
    w = as_word(w)
    _check_len(w, bound)
    t = w.text
    gen = [c.lower() for c in t]
    sgn = [1 if c.islower() else -1 for c in t]

    @lru_cache(maxsize=None)
    def part(i: int, j: int) -> int:
        # positions i..j-1
        if i >= j:
            return 0
        return block(i, j, sgn[i])

    @lru_cache(maxsize=None)
    def block(p: int, j: int, s: int) -> int:
        # block open with last member p and running sum s; p+1..j-1 remain
        best = (s != 0) + part(p + 1, j)
        for q in range(p + 1, j):
            if gen[q] == gen[p]:
                best = min(best, part(p + 1, q) + block(q, j, s + sgn[q]))
        return best

    return part(0, len(t))


def all_words(length: int):
    """Every word of exactly ``length`` letters, in code order."""
    for letters in itertools.product(_CHAR, repeat=length):
        yield Word("".join(letters))


def word_code(w) -> int:
    code = 0
    for c in as_word(w).text:
        code = 4 * code + _DIGIT[c]
    return code


def code_word(code: int, length: int) -> Word:
    out = []
    for _ in range(length):
        out.append(_CHAR[code & 3])
        code >>= 2
    return Word("".join(reversed(out)))


@njit(cache=True)
def _fill_move_table(max_len, runs):
    # flat layout: words of length L start at offset (4^L - 1) / 3
    total = (4 ** (max_len + 1) - 1) // 3
    cost = np.zeros(total, dtype=np.int8)
    d = np.zeros(max_len, dtype=np.int64)
    for L in range(1, max_len + 1):
        off = (4 ** L - 1) // 3
        for code in range(4 ** L):
            c = code
            for i in range(L - 1, -1, -1):
                d[i] = c & 3
                c >>= 2
            best = 127
            for i in range(L - 1):
                if d[i] ^ 1 == d[i + 1]:
                    nl = L - 2
                    hi = code >> (2 * (L - i))
                    lo = code & ((1 << (2 * (L - i - 2))) - 1)
                    v = cost[(4 ** nl - 1) // 3 + (hi << (2 * (L - i - 2))) + lo]
                    if v < best:
                        best = v
            for i in range(L):
                j = i
                while j < L and d[j] == d[i]:
                    nl = L - (j - i + 1)
                    hi = code >> (2 * (L - i))
                    lo = code & ((1 << (2 * (L - 1 - j))) - 1)
                    v = 1 + cost[(4 ** nl - 1) // 3 + (hi << (2 * (L - 1 - j))) + lo]
                    if v < best:
                        best = v
                    if not runs:
                        break
                    j += 1
            cost[off + code] = best
    return cost


@njit(cache=True)
def _fill_partition_table(max_len):
    total = (4 ** (max_len + 1) - 1) // 3
    F = np.zeros(total, dtype=np.int8)
    S = 2 * max_len + 1
    # H[g, s + max_len, flat(v)]: v follows an open g-block with sum s
    H = np.zeros((2, S, total), dtype=np.int8)
    for g in range(2):
        for si in range(S):
            H[g, si, 0] = 1 if si != max_len else 0
    d = np.zeros(max_len, dtype=np.int64)
    for L in range(1, max_len + 1):
        off = (4 ** L - 1) // 3
        offm = (4 ** (L - 1) - 1) // 3
        for code in range(4 ** L):
            first = code >> (2 * (L - 1))
            rest = code & ((1 << (2 * (L - 1))) - 1)
            s = 1 if (first & 1) == 0 else -1
            F[off + code] = H[first >> 1, s + max_len, offm + rest]
        if L == max_len:
            break
        for code in range(4 ** L):
            c = code
            for i in range(L - 1, -1, -1):
                d[i] = c & 3
                c >>= 2
            for g in range(2):
                for si in range(S):
                    best = (1 if si != max_len else 0) + F[off + code]
                    for q in range(L):
                        if d[q] >> 1 != g:
                            continue
                        ns = si + (1 if (d[q] & 1) == 0 else -1)
                        if ns < 0 or ns >= S:
                            continue
                        pre = code >> (2 * (L - q))
                        suf_len = L - q - 1
                        suf = code & ((1 << (2 * suf_len)) - 1)
                        v = F[(4 ** q - 1) // 3 + pre] + H[g, ns, (4 ** suf_len - 1) // 3 + suf]
                        if v < best:
                            best = v
                    H[g, si, off + code] = best
    return F


def _split(flat: np.ndarray, max_len: int) -> list[np.ndarray]:
    return [flat[(4 ** L - 1) // 3:(4 ** (L + 1) - 1) // 3] for L in range(max_len + 1)]


def exhaustive_areas(max_len: int, mode: str) -> list[np.ndarray]:
    """Oracle areas of all words up to ``max_len``; ``out[L][word_code(w)]``."""
    if mode not in ("trivial", "powers"):
        raise ValueError(f"unknown mode {mode!r}")
    if max_len > 12:
        raise OracleBoundError("exhaustive tables limited to length 12")
    return _split(_fill_move_table(max_len, mode == "powers"), max_len)


def exhaustive_partition_min(max_len: int) -> list[np.ndarray]:
    """``oracle_partition_min`` for all words up to ``max_len``, indexed like ``exhaustive_areas``."""
    if max_len > 10:
        raise OracleBoundError("exhaustive partition table limited to length 10")
    return _split(_fill_partition_table(max_len), max_len)
