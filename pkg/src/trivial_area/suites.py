"""Random word generators, differential suites against the oracles, and timing.

Each suite returns a ``SuiteResult`` listing counterexamples verbatim rather
than raising, so callers can print everything that went wrong.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .power_area import area_power_relators, area_tables, solve_powers, theorem2_check
from .spelling import area_free_trivial, interval_table
from .subset_sum import validate_subset, zero_subset
from .witness import (
    POWERS, TRIVIAL, execute_null_sequence, matching_to_null_sequence,
    partition_to_null_sequence, validate_matching, validate_partition,
)
from .word import Syllable, Word, cyclic_canonicalize, free_reduce, invert, swap_generators

NONZERO_EXPONENTS = tuple(e for e in range(-4, 5) if e)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self, timing: bool = True) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures"
        return line + (f" ({self.seconds:.1f}s)" if timing else "")


def random_word(rng: random.Random, n: int) -> Word:
    return Word("".join(rng.choice("aAbB") for _ in range(n)))


def random_syllable_word(rng: random.Random, n: int, exponents=NONZERO_EXPONENTS) -> Word:
    """Alternating syllables with random nonzero exponents, cut to exactly ``n`` letters."""
    out = []
    size = 0
    gen = rng.choice("ab")
    while size < n:
        s = Syllable(gen, rng.choice(exponents)).expand()
        out.append(s)
        size += len(s)
        gen = "b" if gen == "a" else "a"
    return Word("".join(out)[:n])


def _random_for(mode: str, rng: random.Random, n: int) -> Word:
    return random_syllable_word(rng, n) if mode == POWERS else random_word(rng, n)


def check_word(w: Word, mode: str, expected: int | None, res: SuiteResult) -> int:
    """Compute the area of ``w`` in ``mode``, verify its witness, compare to ``expected``."""
    res.checked += 1
    if mode == TRIVIAL:
        area, wit = area_free_trivial(w)
        host = w
        ok, implied = validate_matching(host, wit)
        ns = matching_to_null_sequence(host, wit) if ok else None
    else:
        sol = solve_powers(w)
        area, wit = sol.area, sol.witness
        host = sol.canonical.word
        ok, implied = validate_partition(host, wit)
        ns = partition_to_null_sequence(host, wit) if ok else None
    if expected is not None and area != expected:
        res.fail(f"{mode} {w.text!r}: dp area {area} != oracle {expected}")
    if not ok or implied != area:
        res.fail(f"{mode} {w.text!r}: witness invalid or implies {implied} != {area}")
    elif ns is not None:
        emptied, cost = execute_null_sequence(host, ns, mode)
        if not emptied or cost != area:
            res.fail(f"{mode} {w.text!r}: null-sequence emptied={emptied} cost={cost} area={area}")
    if (area == 0) != (len(free_reduce(w)) == 0):
        res.fail(f"{mode} {w.text!r}: area {area} but free reduction is {free_reduce(w).text!r}")
    if mode == TRIVIAL and area % 2 != len(w) % 2:
        res.fail(f"trivial {w.text!r}: area {area} has wrong parity")
    return area


def exhaustive_suite(max_len: int, mode: str) -> SuiteResult:
    """Every word of length 0..max_len against the tabulated oracle."""
    res = SuiteResult(f"exhaustive {mode} length<={max_len}")
    t0 = time.perf_counter()
    table = oracle.exhaustive_areas(max_len, mode)
    for L in range(max_len + 1):
        expected = table[L]
        for code, letters in enumerate(itertools.product("aAbB", repeat=L)):
            check_word(Word("".join(letters)), mode, int(expected[code]), res)
    res.seconds = time.perf_counter() - t0
    return res


def random_suite(samples: int, max_len: int, mode: str, seed: int) -> SuiteResult:
    """Random words of length 1..max_len against the per-word oracle."""
    rng = random.Random(seed)
    res = SuiteResult(f"random {mode} {samples} words length<={max_len}")
    t0 = time.perf_counter()
    fn = oracle.oracle_area_trivial if mode == TRIVIAL else oracle.oracle_area_powers
    for _ in range(samples):
        w = _random_for(mode, rng, rng.randint(1, max_len))
        check_word(w, mode, fn(w), res)
    res.seconds = time.perf_counter() - t0
    return res


def partition_arbitration_suite(max_len: int = 10) -> SuiteResult:
    """Minimum cactus-partition area equals the null-sequence area for all short words."""
    res = SuiteResult(f"partition-min vs powers oracle length<={max_len}")
    t0 = time.perf_counter()
    part = oracle.exhaustive_partition_min(max_len)
    powers = oracle.exhaustive_areas(max_len, POWERS)
    for L in range(max_len + 1):
        res.checked += len(part[L])
        for code in np.flatnonzero(part[L] != powers[L]):
            w = oracle.code_word(int(code), L)
            res.fail(f"{w.text!r}: partition-min {part[L][code]} != powers {powers[L][code]}")
    res.seconds = time.perf_counter() - t0
    return res


def theorem2_suite(instances: int, seed: int, max_k: int = 6, max_exp: int = 5) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult(f"theorem2 {instances} instances k<={max_k}")
    t0 = time.perf_counter()
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    for _ in range(instances):
        inst = [rng.choice(exps) for _ in range(rng.randint(1, max_k))]
        rep = theorem2_check(inst)
        res.checked += 1
        if not rep.equivalence_holds:
            res.fail(f"{inst}: area {rep.area}, zero subset {rep.exists}")
        if not rep.upper_bound_holds:
            res.fail(f"{inst}: area {rep.area} > k + 1")
    res.seconds = time.perf_counter() - t0
    return res


def brute_zero_subset(values) -> bool:
    """Enumerate all 2^k - 1 nonempty subsets."""
    k = len(values)
    if k == 0:
        return False
    masks = np.arange(1, 1 << k)
    bits = (masks[:, None] >> np.arange(k)) & 1
    return bool((bits @ np.asarray(values, dtype=np.int64) == 0).any())


def _check_subset(values, res: SuiteResult) -> None:
    res.checked += 1
    exists, wit = zero_subset(values)
    if exists != brute_zero_subset(values):
        res.fail(f"{list(values)}: dp says {exists}")
    elif exists and not validate_subset(values, wit):
        res.fail(f"{list(values)}: witness {wit} does not sum to zero")


def subset_sum_suite(max_k: int, samples: int, max_random_k: int, seed: int,
                     ordered_k: int = 5) -> SuiteResult:
    """All multisets of size <= max_k over [-4, 4] minus 0, every ordering up to
    ``ordered_k``, then random instances up to ``max_random_k``."""
    rng = random.Random(seed)
    res = SuiteResult(f"subset sum multisets k<={max_k}, ordered k<={ordered_k}, "
                      f"{samples} random k<={max_random_k}")
    t0 = time.perf_counter()
    for k in range(max_k + 1):
        for inst in itertools.combinations_with_replacement(NONZERO_EXPONENTS, k):
            _check_subset(inst, res)
    for k in range(ordered_k + 1):
        for inst in itertools.product(NONZERO_EXPONENTS, repeat=k):
            _check_subset(inst, res)
    for _ in range(samples):
        _check_subset([rng.choice(NONZERO_EXPONENTS) for _ in range(rng.randint(1, max_random_k))], res)
    res.seconds = time.perf_counter() - t0
    return res


def area_of(w: Word, mode: str) -> int:
    return area_free_trivial(w)[0] if mode == TRIVIAL else area_power_relators(w)[0]


def invariance_suite(samples: int, max_len: int, mode: str, seed: int) -> SuiteResult:
    """Inversion, rotation and a<->b symmetry, plus subadditivity on random pairs."""
    rng = random.Random(seed)
    res = SuiteResult(f"invariance {mode} {samples} words length<={max_len}")
    t0 = time.perf_counter()
    for _ in range(samples):
        w = _random_for(mode, rng, rng.randint(1, max_len))
        a = area_of(w, mode)
        res.checked += 1
        variants = [("inverse", invert(w)), ("swap", swap_generators(w))]
        variants += [(f"rotation {i}", w[i:] + w[:i]) for i in range(1, len(w))]
        for label, v in variants:
            b = area_of(v, mode)
            if b != a:
                res.fail(f"{mode} {w.text!r}: area {a} but {label} {v.text!r} has {b}")
    for _ in range(samples):
        u = _random_for(mode, rng, rng.randint(0, max_len))
        v = _random_for(mode, rng, rng.randint(0, max_len))
        res.checked += 1
        if area_of(u + v, mode) > area_of(u, mode) + area_of(v, mode):
            res.fail(f"{mode}: area({u.text}{v.text}) > area({u.text}) + area({v.text})")
    res.seconds = time.perf_counter() - t0
    return res


@dataclass
class BenchResult:
    presentation: str
    sizes: list[int]
    seconds: list[float]
    slope: float | None


def fit_slope(sizes, seconds) -> float:
    """Least-squares slope of log(time) against log(n)."""
    return float(np.polyfit(np.log(sizes), np.log(seconds), 1)[0])


def bench(max_n: int, presentation: str, seed: int = 0, words: int = 3,
          min_n: int = 8) -> BenchResult:
    """Time the table fill at doubling sizes up to ``max_n`` and fit the growth exponent.

    Each size takes the median over ``words`` random words. The slope uses the
    four largest sizes and is omitted when ``max_n`` is 32 or less.
    """
    rng = random.Random(seed)
    sizes = []
    n = max_n
    while n >= min_n:
        sizes.append(n)
        n //= 2
    sizes.reverse()
    # compile outside the timed region
    interval_table(Word("aA"))
    area_tables(cyclic_canonicalize(Word("abAB")).syllable_word)
    seconds = []
    for n in sizes:
        times = []
        for _ in range(words):
            w = _random_for(presentation, rng, n)
            if presentation == TRIVIAL:
                t0 = time.perf_counter()
                interval_table(w)
            else:
                canon = cyclic_canonicalize(w)
                if canon.kind != "alternating":
                    continue
                t0 = time.perf_counter()
                area_tables(canon.syllable_word)
            times.append(time.perf_counter() - t0)
        seconds.append(float(np.median(times)) if times else float("nan"))
    slope = None
    if max_n > 32 and len(sizes) >= 4:
        slope = fit_slope(sizes[-4:], seconds[-4:])
    return BenchResult(presentation, sizes, seconds, slope)
