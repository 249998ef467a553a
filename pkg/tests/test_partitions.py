from collections import Counter

import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions

from hodge_recursion.partitions import (
    aut_order,
    enumerate_partitions,
    enumerate_tuples,
    format_partition,
    index_splits,
    join_parts,
    partition,
    remove_part,
    rh_count,
    split_part,
    sub_multisets,
)


def test_partition_normalizes():
    assert partition([1, 3, 2, 3]) == (3, 3, 2, 1)
    with pytest.raises(ValueError):
        partition([2, 0])


def test_aut_and_rh():
    assert aut_order((2, 2, 1, 1, 1)) == 12
    assert aut_order((3,)) == 1
    assert rh_count(0, (1,)) == 0
    assert rh_count(0, (1, 1)) == 2
    assert rh_count(1, (2,)) == 3
    assert rh_count(1, (1, 1)) == 4
    with pytest.raises(ValueError):
        rh_count(0, ())


def test_surgeries():
    mu = (3, 2, 1)
    assert join_parts(mu, 0, 2) == (4, 2)
    assert split_part(mu, 0, 1, 2) == (2, 2, 1, 1)
    assert remove_part(mu, 1) == (3, 1)
    with pytest.raises(ValueError):
        join_parts(mu, 1, 1)
    with pytest.raises(ValueError):
        split_part(mu, 1, 1, 2)
    with pytest.raises(IndexError):
        remove_part(mu, 3)


@pytest.mark.parametrize("n", range(0, 13))
def test_partition_counts(n):
    parts = enumerate_partitions(n)
    assert len(parts) == npartitions(n)
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts, reverse=True)


def test_partitions_of_fixed_length():
    assert enumerate_partitions(5, 2) == [(4, 1), (3, 2)]


def test_enumerate_tuples():
    assert enumerate_tuples(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    with pytest.raises(ValueError):
        enumerate_tuples(0, 2)


@pytest.mark.parametrize("nu", [(), (1,), (2, 2, 1), (3, 3, 3, 1, 1), (4, 2, 2, 2)])
def test_sub_multiset_weights_count_index_splits(nu):
    splits = sub_multisets(nu)
    m = Counter(nu)
    expected_entries = 1
    for k in m.values():
        expected_entries *= k + 1
    assert len(splits) == expected_entries
    assert sum(w for _, _, w in splits) == 2 ** len(nu)
    by_index = Counter()
    for J, K in index_splits(range(len(nu))):
        by_index[(tuple(sorted((nu[j] for j in J), reverse=True)), tuple(sorted((nu[k] for k in K), reverse=True)))] += 1
    assert by_index == Counter({(a, b): w for a, b, w in splits})


def test_aut_factor_over_splits():
    # |Aut(nu1)| |Aut(nu2)| C-weight = |Aut(nu)|
    nu = (3, 3, 2, 2, 2, 1)
    for a, b, w in sub_multisets(nu):
        assert aut_order(a) * aut_order(b) * w == aut_order(nu)


def test_format():
    assert format_partition((3, 1, 1)) == "(3,1,1)"
