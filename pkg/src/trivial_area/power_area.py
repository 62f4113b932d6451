"""Area in <a, b | a^k, b^k ; k in N> (Jiang's width).

The input is first replaced by its cyclically reduced conjugate
w = a^{i_1} b^{i'_1} ... a^{i_m} b^{i'_m}. Two tables are then filled by
increasing span k - j:

* ``last(j, k, r)``  = area of a^{i_j} b^{i'_j} ... a^{i_k} b^r
* ``first(r, j, k)`` = area of a^r b^{i'_j} ... a^{i_k} b^{i'_k}

A minimal cactus diagram for such a word pinches its start vertex against some
other vertex where an a-edge meets a b-edge, splitting the face in two; the
tables minimize over that choice. Exponents outside [-n, n] never arise from
pinching the full word and are treated as infinite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .subset_sum import zero_subset
from .witness import Block, NonCrossingPartition
from .word import CanonicalForm, SyllableWord, Word, as_word, cyclic_canonicalize

INF = 1 << 28


def pow_area(e: int) -> int:
    """Area of the one-face word x^e."""
    return 0 if e == 0 else 1


@njit(cache=True)
def _fill(ia, ib, n):
    # ia, ib: 1-based exponent arrays of length m + 1; slot 0 unused.
    # Rows are swept over all r at once; the r = 0 slot is overwritten at the end.
    m = ia.shape[0] - 1
    W = 2 * n + 1
    AL = np.full((m + 2, m + 2, W), INF, dtype=np.int32)
    AF = np.full((m + 2, m + 2, W), INF, dtype=np.int32)
    ops = 0
    for j in range(1, m + 1):
        for x in range(W):
            v = 1 if x == n else 2
            AL[j, j, x] = v
            AF[j, j, x] = v
    for s in range(1, m):
        for j in range(1, m - s + 1):
            k = j + s
            last = AL[j, k]
            first = AF[j, k]
            for l in range(j, k + 1):
                ops += 2 * (W - 1)
                if l < k:
                    c = AF[j, l, ia[j] + n]
                    src = AL[l + 1, k]
                    for x in range(W):
                        v = c + src[x]
                        if v < last[x]:
                            last[x] = v
                    c = AL[l + 1, k, ib[k] + n]
                    src = AF[j, l]
                    for x in range(W):
                        v = src[x] + c
                        if v < first[x]:
                            first[x] = v
                if l == j:
                    # last: face a^{i_j}, remainder b^{i'_j} ... b^r
                    src = AL[j + 1, k]
                    d = ib[j]
                    for x in range(max(0, -d), min(W, W - d)):
                        v = 1 + src[x + d]
                        if v < last[x]:
                            last[x] = v
                    # first: face a^r, remainder b^{i'_j} ... b^{i'_k}
                    e = ib[j] + ib[k]
                    if -n <= e <= n:
                        v = 1 + AL[j + 1, k, e + n]
                        for x in range(W):
                            if v < first[x]:
                                first[x] = v
                elif l < k:
                    e = ia[j] + ia[l]
                    if -n <= e <= n:
                        c = AF[j, l - 1, e + n]
                        src = AL[l + 1, k]
                        d = ib[l]
                        for x in range(max(0, -d), min(W, W - d)):
                            v = c + src[x + d]
                            if v < last[x]:
                                last[x] = v
                    e = ib[k] + ib[l]
                    if -n <= e <= n:
                        c = AL[l + 1, k, e + n]
                        src = AF[j, l - 1]
                        d = ia[l]
                        for x in range(max(0, -d), min(W, W - d)):
                            v = src[x + d] + c
                            if v < first[x]:
                                first[x] = v
                else:
                    # last: face b^r
                    e = ia[j] + ia[k]
                    if -n <= e <= n:
                        v = AF[j, k - 1, e + n] + 1
                        for x in range(W):
                            if v < last[x]:
                                last[x] = v
                    # first: face b^{i'_k}
                    src = AF[j, k - 1]
                    d = ia[k]
                    for x in range(max(0, -d), min(W, W - d)):
                        v = src[x + d] + 1
                        if v < first[x]:
                            first[x] = v
            # r = 0: merge the wrap-adjacent syllables of equal generator
            e = ia[j] + ia[k]
            last[n] = AF[j, k - 1, e + n] if -n <= e <= n else INF
            e = ib[j] + ib[k]
            first[n] = AL[j + 1, k, e + n] if -n <= e <= n else INF
    return AL, AF, ops


@dataclass(frozen=True)
class AreaTables:
    """Filled tables for a canonical syllable word; entries outside the range are ``math.inf``."""

    syllable_word: SyllableWord
    n: int
    last_values: np.ndarray
    first_values: np.ndarray
    operations: int

    @property
    def m(self) -> int:
        return self.syllable_word.m

    def _get(self, arr, j, k, r):
        if not (1 <= j <= k <= self.m and -self.n <= r <= self.n):
            return math.inf
        v = int(arr[j, k, r + self.n])
        return math.inf if v >= INF else v

    def last(self, j: int, k: int, r: int):
        """Area of a^{i_j} b^{i'_j} ... a^{i_k} b^r."""
        return self._get(self.last_values, j, k, r)

    def first(self, r: int, j: int, k: int):
        """Area of a^r b^{i'_j} ... a^{i_k} b^{i'_k}."""
        return self._get(self.first_values, j, k, r)

    @property
    def area(self) -> int:
        return self.first(self.syllable_word.a_exponents[0], 1, self.m)


def area_tables(sw: SyllableWord) -> AreaTables:
    if not sw.is_canonical:
        raise ValueError("syllable word must alternate a, b, ... starting with a and ending with b")
    ia = np.array((0,) + sw.a_exponents, dtype=np.int64)
    ib = np.array((0,) + sw.b_exponents, dtype=np.int64)
    n = int(np.abs(ia).sum() + np.abs(ib).sum())
    AL, AF, ops = _fill(ia, ib, n)
    AL.setflags(write=False)
    AF.setflags(write=False)
    return AreaTables(sw, n, AL, AF, int(ops))


def _trace(tab: AreaTables) -> list[tuple[str, tuple[int, ...]]]:
    """Return the faces of one optimal cactus diagram as (generator, syllable ids).

    Syllable ids are 0-based into the canonical syllable sequence: a-syllable l
    is ``2l - 2`` and b-syllable l is ``2l - 1``. Each state carries the ids that
    make up its modified exponent.
    """
    ia = (0,) + tab.syllable_word.a_exponents
    ib = (0,) + tab.syllable_word.b_exponents
    A = lambda l: 2 * l - 2  # noqa: E731
    B = lambda l: 2 * l - 1  # noqa: E731
    last, first = tab.last, tab.first

    faces = []
    stack = [("first", 1, tab.m, ia[1], (A(1),))]
    while stack:
        kind, j, k, r, frags = stack.pop()
        if kind == "last":
            if j == k:
                faces += [("a", (A(j),)), ("b", frags)]
                continue
            if r == 0:
                faces.append(("b", frags))
                stack.append(("first", j, k - 1, ia[j] + ia[k], (A(j), A(k))))
                continue
            target = last(j, k, r)
            for l in range(j, k + 1):
                if l < k and first(ia[j], j, l) + last(l + 1, k, r) == target:
                    stack += [("first", j, l, ia[j], (A(j),)), ("last", l + 1, k, r, frags)]
                    break
                if l == j:
                    if 1 + last(j + 1, k, ib[j] + r) == target:
                        faces.append(("a", (A(j),)))
                        stack.append(("last", j + 1, k, ib[j] + r, (B(j),) + frags))
                        break
                elif l < k:
                    if first(ia[j] + ia[l], j, l - 1) + last(l + 1, k, ib[l] + r) == target:
                        stack += [
                            ("first", j, l - 1, ia[j] + ia[l], (A(j), A(l))),
                            ("last", l + 1, k, ib[l] + r, (B(l),) + frags),
                        ]
                        break
                elif first(ia[j] + ia[k], j, k - 1) + 1 == target:
                    faces.append(("b", frags))
                    stack.append(("first", j, k - 1, ia[j] + ia[k], (A(j), A(k))))
                    break
            else:
                raise AssertionError(f"no optimal split for last({j}, {k}, {r})")
        else:
            if j == k:
                faces += [("a", frags), ("b", (B(j),))]
                continue
            if r == 0:
                faces.append(("a", frags))
                stack.append(("last", j + 1, k, ib[j] + ib[k], (B(j), B(k))))
                continue
            target = first(r, j, k)
            for l in range(j, k + 1):
                if l < k and first(r, j, l) + last(l + 1, k, ib[k]) == target:
                    stack += [("first", j, l, r, frags), ("last", l + 1, k, ib[k], (B(k),))]
                    break
                if l == j:
                    if 1 + last(j + 1, k, ib[j] + ib[k]) == target:
                        faces.append(("a", frags))
                        stack.append(("last", j + 1, k, ib[j] + ib[k], (B(j), B(k))))
                        break
                elif l < k:
                    if first(r + ia[l], j, l - 1) + last(l + 1, k, ib[k] + ib[l]) == target:
                        stack += [
                            ("first", j, l - 1, r + ia[l], frags + (A(l),)),
                            ("last", l + 1, k, ib[k] + ib[l], (B(k), B(l))),
                        ]
                        break
                elif first(r + ia[k], j, k - 1) + 1 == target:
                    faces.append(("b", (B(k),)))
                    stack.append(("first", j, k - 1, r + ia[k], frags + (A(k),)))
                    break
            else:
                raise AssertionError(f"no optimal split for first({r}, {j}, {k})")
    return faces


def cactus_partition(tab: AreaTables) -> NonCrossingPartition:
    """Optimal cactus diagram of the canonical word as a partition of its letter positions."""
    spans = []
    pos = 1
    for s in tab.syllable_word.syllables:
        spans.append(range(pos, pos + abs(s.exponent)))
        pos += abs(s.exponent)
    blocks = []
    for gen, ids in _trace(tab):
        blocks.append(Block(gen, tuple(p for i in ids for p in spans[i])))
    return NonCrossingPartition(tuple(blocks))


@dataclass(frozen=True)
class PowerSolution:
    area: int
    witness: NonCrossingPartition
    canonical: CanonicalForm
    tables: AreaTables | None = None


def solve_powers(w) -> PowerSolution:
    canon = cyclic_canonicalize(as_word(w))
    if canon.kind == "empty":
        return PowerSolution(0, NonCrossingPartition(), canon)
    if canon.kind == "power":
        block = Block(canon.generator, tuple(range(1, len(canon.word) + 1)))
        return PowerSolution(1, NonCrossingPartition((block,)), canon)
    tab = area_tables(canon.syllable_word)
    return PowerSolution(tab.area, cactus_partition(tab), canon, tab)


def area_power_relators(w) -> tuple[int, NonCrossingPartition]:
    """Area of ``w`` in <a, b | a^k, b^k>, with a partition of the canonical word.

    >>> area_power_relators("abAB")[0]
    2
    """
    sol = solve_powers(w)
    return sol.area, sol.witness


@dataclass(frozen=True)
class Theorem2Report:
    exponents: tuple[int, ...]
    word: Word
    area: int
    exists: bool
    subset: tuple[int, ...] | None
    equivalence_holds: bool
    upper_bound_holds: bool


def theorem2_word(exponents) -> Word:
    """a b^{i_1} a b^{i_2} ... a b^{i_k}."""
    return SyllableWord.from_exponents([1] * len(exponents), list(exponents)).word()


def theorem2_check(exponents) -> Theorem2Report:
    """Compare area(a b^{i_1} ... a b^{i_k}) <= k against zero subset sum."""
    exps = tuple(int(e) for e in exponents)
    if not exps:
        raise ValueError("need at least one exponent")
    exists, subset = zero_subset(exps)
    w = theorem2_word(exps)
    area, _ = area_power_relators(w)
    k = len(exps)
    return Theorem2Report(
        exps, w, area, exists, subset,
        equivalence_holds=(area <= k) == exists,
        upper_bound_holds=area <= k + 1,
    )
