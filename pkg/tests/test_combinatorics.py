from math import factorial

import pytest
from hypothesis import given, strategies as st

from kleinrgw.combinatorics import (
    Partition, check_degree, class_size, conjugate, content_sum, crosscap_sign, dim_rep, hooks,
    is_self_conjugate, partitions_of, rank, self_conjugate_partitions, sign, sq, zeta,
)
from kleinrgw.errors import ArgumentError, BoundsError

partition_strategy = st.integers(1, 10).flatmap(lambda d: st.sampled_from(partitions_of(d)))


def test_partition_counts():
    assert partitions_of(1) == [Partition((1,))]
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(10)) == 42


def test_partitions_are_distinct_and_sized():
    for d in range(1, 9):
        parts = partitions_of(d)
        assert len(set(parts)) == len(parts)
        assert all(p.size == d for p in parts)


@pytest.mark.parametrize("d", [0, -1, 13])
def test_degree_bounds(d):
    with pytest.raises(BoundsError):
        partitions_of(d)


def test_check_degree_rejects_bool():
    with pytest.raises(BoundsError):
        check_degree(True)


def test_partition_validation():
    with pytest.raises(ArgumentError):
        Partition((1, 2))
    with pytest.raises(ArgumentError):
        Partition((2, 0))
    assert Partition.from_parts([1, 3, 2]) == (3, 2, 1)


@pytest.mark.parametrize("lam, expected", [
    ((2, 1, 1), (3, 1)),
    ((2, 2), (2, 2)),
    ((4, 3, 3, 2, 1), (5, 4, 3, 1)),
])
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected


@pytest.mark.parametrize("lam, r", [((1,), 1), ((2, 2), 2), ((5, 1, 1, 1, 1), 1)])
def test_rank(lam, r):
    assert rank(lam) == r


@pytest.mark.parametrize("lam, expected", [((1,), [1]), ((2, 2), [1, 2, 2, 3]), ((2, 1), [1, 1, 3])])
def test_hooks(lam, expected):
    assert sorted(hooks(lam)) == expected


@pytest.mark.parametrize("lam, dim", [((5,), 1), ((2, 1), 2), ((2, 2), 2)])
def test_dim(lam, dim):
    assert dim_rep(lam) == dim


@pytest.mark.parametrize("lam, c", [((2, 1), 0), ((2,), 1), ((3,), 3)])
def test_content(lam, c):
    assert content_sum(lam) == c


@pytest.mark.parametrize("lam, z", [((1,), 1), ((2, 2), 8), ((3, 1, 1), 6)])
def test_zeta(lam, z):
    assert zeta(lam) == z


def test_sq_worked_value():
    # a worked value with mixed even and odd parts
    assert sq((4, 3, 3, 2, 1)) == Partition.from_parts((2, 2, 3, 3, 1, 1, 1))
    assert sq((1, 1, 1)) == (1, 1, 1)
    assert sq((2,)) == (1, 1)


@pytest.mark.parametrize("lam, s", [((1, 1, 1), 1), ((2,), -1), ((3, 2), -1)])
def test_sign(lam, s):
    assert sign(lam) == s


def test_crosscap_sign_requires_self_conjugate():
    assert crosscap_sign((2, 1)) == -1
    assert crosscap_sign((1,)) == 1
    with pytest.raises(ArgumentError):
        crosscap_sign((2,))


def test_self_conjugate_counts():
    # partitions into distinct odd parts: 1, 0, 1, 1, 1, 1, 1, 2, 2, 2
    assert [len(self_conjugate_partitions(d)) for d in range(1, 11)] == [1, 0, 1, 1, 1, 1, 1, 2, 2, 2]


@given(partition_strategy)
def test_conjugation_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size
    assert rank(conjugate(lam)) == rank(lam)
    assert content_sum(conjugate(lam)) == -content_sum(lam)


@given(partition_strategy)
def test_hook_multiset_conjugation_invariant(lam):
    assert sorted(hooks(lam)) == sorted(hooks(conjugate(lam)))
    assert dim_rep(lam) == dim_rep(conjugate(lam))


@given(st.integers(1, 9))
def test_class_sizes_and_dimensions_sum(d):
    assert sum(class_size(a) for a in partitions_of(d)) == factorial(d)
    assert sum(dim_rep(r) ** 2 for r in partitions_of(d)) == factorial(d)


def _permutation_of_type(lam):
    perm, start = [], 0
    for p in lam:
        perm.extend(start + (i + 1) % p for i in range(p))
        start += p
    return tuple(perm)


@given(partition_strategy)
def test_sq_matches_squared_permutation(lam):
    from kleinrgw.oracles import cycle_type
    g = _permutation_of_type(lam)
    assert cycle_type(g) == lam
    assert sq(lam) == cycle_type(tuple(g[i] for i in g))
    assert len(sq(lam)) == len(lam) + sum(1 for p in lam if p % 2 == 0)


@given(partition_strategy)
def test_self_conjugate_parity(lam):
    if is_self_conjugate(lam):
        assert (lam.size - rank(lam)) % 2 == 0
