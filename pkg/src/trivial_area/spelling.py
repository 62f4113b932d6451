"""Area in <a, b | a, b> (spelling length) by the Nussinov-Jacobson interval DP.

``A[i, j]`` is the area of the subword x_i ... x_j. The last letter is either
deleted, or it cancels against some earlier inverse letter x_r, which splits
the interval into two independent halves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .witness import Matching
from .word import Word, as_word

_DIGIT = {"a": 0, "A": 1, "b": 2, "B": 3}


def _digits(w: Word) -> np.ndarray:
    # 1-based; slot 0 unused
    d = np.zeros(len(w) + 1, dtype=np.int8)
    for i, c in enumerate(w.text, 1):
        d[i] = _DIGIT[c]
    return d


@njit(cache=True)
def _fill(d, n):
    A = np.zeros((n + 2, n + 2), dtype=np.int32)
    ops = 0
    for i in range(1, n + 1):
        A[i, i] = 1
    for k in range(1, n):
        for i in range(1, n - k + 1):
            j = i + k
            best = A[i, j - 1] + 1
            inv = d[j] ^ 1
            for r in range(i, j):
                ops += 1
                if d[r] == inv:
                    v = A[i, r - 1] + A[r + 1, j - 1]
                    if v < best:
                        best = v
            A[i, j] = best
    return A, ops


@dataclass(frozen=True)
class IntervalTable:
    """Filled DP table; ``table[i, j]`` is 1-based, zero when i > j."""

    word: Word
    values: np.ndarray
    operations: int

    @property
    def n(self) -> int:
        return len(self.word)

    def __getitem__(self, ij) -> int:
        i, j = ij
        if i > j:
            return 0
        return int(self.values[i, j])

    @property
    def area(self) -> int:
        return self[1, self.n] if self.n else 0


def interval_table(w) -> IntervalTable:
    w = as_word(w)
    values, ops = _fill(_digits(w), len(w))
    values.setflags(write=False)
    return IntervalTable(w, values, int(ops))


def traceback(tab: IntervalTable) -> Matching:
    """Recover one optimal matching: smallest partner r first, deletion last."""
    d = _digits(tab.word)
    A = tab.values
    pairs = []
    stack = [(1, tab.n)]
    while stack:
        i, j = stack.pop()
        if i >= j:
            continue
        target = A[i, j]
        inv = d[j] ^ 1
        for r in range(i, j):
            if d[r] == inv and A[i, r - 1] + A[r + 1, j - 1] == target:
                pairs.append((r, j))
                stack += [(i, r - 1), (r + 1, j - 1)]
                break
        else:
            stack.append((i, j - 1))
    return Matching(tuple(pairs))


def area_free_trivial(w) -> tuple[int, Matching]:
    """Area of ``w`` in <a, b | a, b> with a non-crossing matching witness.

    >>> area_free_trivial("aabAAB")[0]
    2
    """
    tab = interval_table(w)
    return tab.area, traceback(tab)
