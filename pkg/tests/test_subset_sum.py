import itertools

import pytest
from hypothesis import given, strategies as st

from trivial_area.subset_sum import subset_table, validate_subset, zero_subset

entries = st.lists(st.integers(-6, 6).filter(bool), max_size=10)


def brute(values):
    return any(
        sum(c) == 0
        for r in range(1, len(values) + 1)
        for c in itertools.combinations(values, r)
    )


def test_examples():
    assert zero_subset([1, -1]) == (True, (1, 2))
    assert zero_subset([1, 2, 4]) == (False, None)
    assert zero_subset([3, -1, -2]) == (True, (1, 2, 3))
    assert zero_subset([]) == (False, None)


def test_rejects_zero():
    with pytest.raises(ValueError):
        zero_subset([1, 0, -1])


def test_validate_examples():
    assert validate_subset([1, -1], [1, 2])
    assert not validate_subset([1, 2], [1])
    assert not validate_subset([3, -1, -2], [2, 3])


@pytest.mark.parametrize("wit", [[], [2, 1], [1, 1], [0], [4]])
def test_validate_errors(wit):
    with pytest.raises(ValueError):
        validate_subset([1, 2, 3], wit)


def test_table_meaning():
    vals = [2, -3, 1]
    tab = subset_table(vals)
    for q in range(1, 4):
        tail = vals[q - 1:]
        reachable = {sum(c) for r in range(1, len(tail) + 1) for c in itertools.combinations(tail, r)}
        for p in range(-tab.n, tab.n + 1):
            assert tab[p, q] == (p in reachable)
    assert not tab[0, 4] and not tab[100, 1]
    assert tab.operations == 3 * (2 * 6 + 1)


@given(entries)
def test_agrees_with_enumeration(vals):
    exists, wit = zero_subset(vals)
    assert exists == brute(vals)
    if exists:
        assert validate_subset(vals, wit)


@given(entries, st.randoms())
def test_permutation_and_sign_invariance(vals, rnd):
    exists = zero_subset(vals)[0]
    shuffled = list(vals)
    rnd.shuffle(shuffled)
    assert zero_subset(shuffled)[0] == exists
    assert zero_subset([-v for v in vals])[0] == exists
