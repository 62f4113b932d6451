"""Pseudo-polynomial zero subset sum.

``S[q, p]`` is true when some nonempty subset of the entries q, q+1, ..., k
(1-based) sums to p, for -n <= p <= n with n the sum of absolute values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SubsetTable:
    values: tuple[int, ...]
    table: np.ndarray  # shape (k + 2, 2n + 1); rows 0 and k + 1 are all False
    n: int

    def __getitem__(self, pq) -> bool:
        p, q = pq
        if not (-self.n <= p <= self.n and 1 <= q <= len(self.values)):
            return False
        return bool(self.table[q, p + self.n])

    @property
    def operations(self) -> int:
        return len(self.values) * (2 * self.n + 1)


def subset_table(values) -> SubsetTable:
    values = tuple(int(v) for v in values)
    if any(v == 0 for v in values):
        raise ValueError("entries must be nonzero")
    k = len(values)
    n = sum(abs(v) for v in values)
    S = np.zeros((k + 2, 2 * n + 1), dtype=bool)
    for q in range(k, 0, -1):
        v = values[q - 1]
        nxt = S[q + 1]
        row = nxt.copy()
        # p - v in range  <=>  p in [v - n, v + n]
        if v > 0:
            row[v:] |= nxt[:2 * n + 1 - v]
        else:
            row[:2 * n + 1 + v] |= nxt[-v:]
        row[v + n] = True
        S[q] = row
    S.setflags(write=False)
    return SubsetTable(values, S, n)


def zero_subset(values) -> tuple[bool, tuple[int, ...] | None]:
    """Is there a nonempty subset summing to zero? Returns 1-based witness indices.

    >>> zero_subset([3, -1, -2])
    (True, (1, 2, 3))
    """
    tab = subset_table(values)
    if not tab[0, 1]:
        return False, None
    picked = []
    p = 0
    for q in range(1, len(tab.values) + 1):
        if tab[p, q + 1]:
            continue
        v = tab.values[q - 1]
        picked.append(q)
        if v == p:
            break
        p -= v
    return True, tuple(picked)


def validate_subset(values, witness) -> bool:
    values = tuple(values)
    witness = tuple(witness)
    if not witness:
        raise ValueError("witness must be nonempty")
    if any(b <= a for a, b in zip(witness, witness[1:])):
        raise ValueError("witness indices must be strictly increasing")
    if witness[0] < 1 or witness[-1] > len(values):
        raise ValueError(f"witness index out of range 1..{len(values)}")
    return sum(values[j - 1] for j in witness) == 0
