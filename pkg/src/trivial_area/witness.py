"""Witnesses for area computations and their independent checks.

A ``Matching`` certifies area in <a, b | a, b>: unmatched letters are deleted and
matched pairs cancel. A ``NonCrossingPartition`` is the flat form of a cactus
diagram for <a, b | a^k, b^k>: each block is one face, and only blocks with
nonzero exponent sum cost anything. Either converts to a ``NullSequence`` of
moves that can be replayed against the word.

Positions are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .word import Word, as_word

TRIVIAL = "trivial"
POWERS = "powers"


class IllegalMoveError(ValueError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(tuple(p) for p in self.pairs)))


class Block(NamedTuple):
    letter: str
    positions: tuple[int, ...]


@dataclass(frozen=True)
class NonCrossingPartition:
    blocks: tuple[Block, ...] = ()

    def __post_init__(self):
        blocks = tuple(Block(b[0], tuple(sorted(b[1]))) for b in self.blocks)
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=lambda b: b.positions)))


class Move(NamedTuple):
    kind: str  # "delete" or "cancel"
    start: int
    stop: int  # inclusive; a cancel always has stop == start + 1

    @classmethod
    def delete(cls, start: int, stop: int | None = None) -> "Move":
        return cls("delete", start, start if stop is None else stop)

    @classmethod
    def cancel(cls, p: int) -> "Move":
        return cls("cancel", p, p + 1)


@dataclass(frozen=True)
class NullSequence:
    moves: tuple[Move, ...] = ()

    @property
    def cost(self) -> int:
        return sum(1 for mv in self.moves if mv.kind == "delete")


def _sign(c: str) -> int:
    return 1 if c.islower() else -1


def _is_noncrossing(n: int, groups) -> bool:
    owner = [None] * (n + 1)
    last = {}
    for g, positions in enumerate(groups):
        for p in positions:
            owner[p] = g
        if positions:
            last[g] = max(positions)
    stack: list[int] = []
    seen = set()
    for p in range(1, n + 1):
        g = owner[p]
        if g is None:
            continue
        if g in seen:
            if not stack or stack[-1] != g:
                return False
            if p == last[g]:
                stack.pop()
        else:
            seen.add(g)
            if p != last[g]:
                stack.append(g)
    return True


def validate_matching(w, mt: Matching) -> tuple[bool, int]:
    """Check ``mt`` is a non-crossing set of cancelling pairs in ``w``.

    Returns ``(ok, len(w) - 2 * len(pairs))``.
    """
    w = as_word(w)
    t = w.text
    n = len(t)
    for p, q in mt.pairs:
        if not (1 <= p <= n and 1 <= q <= n):
            raise ValueError(f"pair ({p}, {q}) out of range 1..{n}")
    implied = n - 2 * len(mt.pairs)
    used = [x for pair in mt.pairs for x in pair]
    ok = (
        len(set(used)) == len(used)
        and all(p < q and t[p - 1].lower() == t[q - 1].lower()
                and t[p - 1] != t[q - 1] for p, q in mt.pairs)
        and _is_noncrossing(n, mt.pairs)
    )
    return ok, implied


def partition_area(w, pt: NonCrossingPartition) -> int:
    t = as_word(w).text
    return sum(1 for b in pt.blocks if sum(_sign(t[p - 1]) for p in b.positions) != 0)


def validate_partition(w, pt: NonCrossingPartition) -> tuple[bool, int]:
    """Check ``pt`` is monochromatic and non-crossing over ``w``.

    Returns ``(ok, number of blocks with nonzero exponent sum)``. Raises
    ``ValueError`` if the blocks do not partition 1..len(w).
    """
    t = as_word(w).text
    n = len(t)
    covered = sorted(p for b in pt.blocks for p in b.positions)
    if covered != list(range(1, n + 1)) or any(not b.positions for b in pt.blocks):
        raise ValueError("blocks do not partition the word positions")
    mono = all(
        b.letter in ("a", "b") and all(t[p - 1].lower() == b.letter for p in b.positions)
        for b in pt.blocks
    )
    ok = mono and _is_noncrossing(n, [b.positions for b in pt.blocks])
    return ok, partition_area(w, pt)


def matching_to_null_sequence(w, mt: Matching) -> NullSequence:
    """Delete every unmatched letter, then cancel matched pairs innermost first."""
    w = as_word(w)
    ok, _ = validate_matching(w, mt)
    if not ok:
        raise ValueError("invalid matching")
    partner = {}
    for p, q in mt.pairs:
        partner[p], partner[q] = q, p
    current = list(range(1, len(w) + 1))
    moves = []
    for p in range(len(w), 0, -1):
        if p not in partner:
            idx = current.index(p)
            moves.append(Move.delete(idx + 1))
            del current[idx]
    while current:
        for idx in range(len(current) - 1):
            if partner[current[idx]] == current[idx + 1]:
                moves.append(Move.cancel(idx + 1))
                del current[idx:idx + 2]
                break
        else:
            raise AssertionError("non-crossing matching left no adjacent pair")
    return NullSequence(tuple(moves))


def partition_to_null_sequence(w, pt: NonCrossingPartition) -> NullSequence:
    """Clear blocks innermost first: cancel within the block, then delete any remainder."""
    w = as_word(w)
    t = w.text
    ok, _ = validate_partition(w, pt)
    if not ok:
        raise ValueError("invalid partition")
    current = list(range(1, len(w) + 1))
    pending = [set(b.positions) for b in pt.blocks]
    moves = []
    while pending:
        for k, block in enumerate(pending):
            idx = [i for i, p in enumerate(current) if p in block]
            if idx[-1] - idx[0] + 1 == len(idx):
                break
        else:
            raise AssertionError("non-crossing partition left no contiguous block")
        lo = idx[0]
        seg = current[lo:lo + len(idx)]
        reduced = True
        while reduced:
            reduced = False
            for i in range(len(seg) - 1):
                if t[seg[i] - 1] != t[seg[i + 1] - 1]:
                    moves.append(Move.cancel(lo + i + 1))
                    del seg[i:i + 2]
                    reduced = True
                    break
        if seg:
            moves.append(Move.delete(lo + 1, lo + len(seg)))
        current[lo:lo + len(idx)] = []
        del pending[k]
    return NullSequence(tuple(moves))


def execute_null_sequence(w, ns: NullSequence, mode: str = TRIVIAL) -> tuple[bool, int]:
    """Replay ``ns`` against ``w``; returns ``(emptied, cost)``.

    Raises ``IllegalMoveError`` for a move that is out of range or not allowed in
    ``mode``.
    """
    if mode not in (TRIVIAL, POWERS):
        raise ValueError(f"unknown mode {mode!r}")
    cur = list(as_word(w).text)
    for k, mv in enumerate(ns.moves):
        if not 1 <= mv.start <= mv.stop <= len(cur):
            raise IllegalMoveError(k, f"range {mv.start}..{mv.stop} outside word of length {len(cur)}")
        seg = cur[mv.start - 1:mv.stop]
        if mv.kind == "cancel":
            if mv.stop != mv.start + 1:
                raise IllegalMoveError(k, "cancel must name two adjacent positions")
            x, y = seg
            if x.lower() != y.lower() or x == y:
                raise IllegalMoveError(k, f"{x}{y} is not an inverse pair")
        elif mv.kind == "delete":
            if mode == TRIVIAL and mv.stop != mv.start:
                raise IllegalMoveError(k, "trivial mode deletes one letter at a time")
            if len(set(seg)) != 1:
                raise IllegalMoveError(k, f"{''.join(seg)} is not a power of one letter")
        else:
            raise IllegalMoveError(k, f"unknown move kind {mv.kind!r}")
        del cur[mv.start - 1:mv.stop]
    return not cur, ns.cost


def witness_json(w, mode: str, area: int, witness) -> dict:
    out = {"word": as_word(w).text, "mode": mode, "area": int(area)}
    if isinstance(witness, Matching):
        out["matching"] = [list(p) for p in witness.pairs]
    else:
        out["partition"] = [
            {"letter": b.letter, "positions": list(b.positions)} for b in witness.blocks
        ]
    return out


def witness_from_json(obj: dict):
    """Inverse of ``witness_json``: returns ``(word, mode, area, witness)``."""
    if "matching" in obj:
        wit = Matching(tuple(tuple(p) for p in obj["matching"]))
    else:
        wit = NonCrossingPartition(
            tuple(Block(b["letter"], tuple(b["positions"])) for b in obj["partition"])
        )
    return Word(obj["word"]), obj["mode"], obj["area"], wit
