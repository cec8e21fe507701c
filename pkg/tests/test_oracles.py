from fractions import Fraction

import pytest

from kleinrgw.combinatorics import Partition, partitions_of, self_conjugate_partitions
from kleinrgw.errors import ArgumentError, BoundsError
from kleinrgw.oracles import (
    class_algebra_constants, cycle_type, expected_sfs, frobenius_character, level0_exponential,
    level0_fiber_sum, o_rho, r_alpha_crosscheck, sfs_bruteforce, sfs_identity_sides, sfs_report,
)


def test_cycle_type():
    assert cycle_type((1, 2, 0, 4, 3)) == (3, 2)
    assert cycle_type((0, 1, 2)) == (1, 1, 1)


def test_frobenius_small():
    assert frobenius_character((2, 1), (3,)) == -1
    assert frobenius_character((1, 1), (2,)) == -1
    with pytest.raises(ArgumentError):
        frobenius_character((2,), (1,))


def test_class_algebra_identity_and_bounds():
    consts = class_algebra_constants(4)
    ident = Partition((1, 1, 1, 1))
    for a in partitions_of(4):
        assert consts[(ident, a)] == {a: 1}
    # a transposition squared is the identity 6 ways
    assert consts[((2, 1, 1), (2, 1, 1))][ident] == 6
    with pytest.raises(BoundsError):
        class_algebra_constants(7)


@pytest.mark.parametrize("rho, value", [((2, 1), -1), ((3,), 0), ((1,), 1)])
def test_sfs_values(rho, value):
    assert sfs_bruteforce(rho) == value
    assert sfs_bruteforce(rho, "element") == value
    assert expected_sfs(rho) == value


def test_sfs_mode_validation():
    with pytest.raises(ArgumentError):
        sfs_bruteforce((2, 1), "bogus")


@pytest.mark.parametrize("d", range(1, 6))
def test_sfs_report(d):
    assert sfs_report(d).ok


def test_sfs_identity_examples():
    lhs, rhs = sfs_identity_sides((1,))
    assert lhs == rhs == 1
    for alpha in [(2,), (1, 1)]:
        lhs, rhs = sfs_identity_sides(alpha)
        assert lhs == rhs


def test_o_rho_on_self_conjugate():
    # every S_d representation is real, so the even and odd class sums add to 1
    for d in range(1, 11):
        for r in self_conjugate_partitions(d):
            assert o_rho(r) in (0, 1)
            assert o_rho(r) == Fraction(1 - expected_sfs(r), 2)


def test_r_alpha_values():
    assert level0_fiber_sum((1,)) == 1
    assert level0_fiber_sum((1, 1)) == 0
    assert level0_fiber_sum((2,)) == 0
    assert level0_exponential(4) == {
        Partition((2, 2)): Fraction(-1, 4), Partition((3, 1)): Fraction(1, 3),
        Partition((1, 1, 1, 1)): Fraction(-1, 12),
    }


@pytest.mark.parametrize("d", range(1, 8))
def test_r_alpha_crosscheck(d):
    report = r_alpha_crosscheck(d)
    assert report.ok, (report.mismatches, report.parity_violations)
