from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kleinrgw.errors import ArgumentError, NotInvertibleError, TruncationError
from kleinrgw.ring import (
    QSeries, Scalar, SPoly, USeries, exp_q, hook_product, invert_u, log_q, s, sinh_factor, t,
    to_u_series,
)

rationals = st.fractions(max_denominator=20).filter(lambda x: abs(x) <= 20)
spolys = st.dictionaries(st.integers(-6, 6), rationals, max_size=5).map(SPoly)


def test_sinh_factor():
    assert sinh_factor(1) == s - s ** -1
    assert sinh_factor(3) == SPoly({3: 1, -3: -1})
    with pytest.raises(ArgumentError):
        sinh_factor(0)


def test_hook_product_of_21():
    assert hook_product([3, 1, 1]) == sinh_factor(3) * sinh_factor(1) ** 2


def test_u_expansion():
    x = to_u_series(s - s ** -1, 5)
    assert x.terms() == {1: 1, 3: Fraction(1, 24), 5: Fraction(1, 1920)}
    assert to_u_series(SPoly.const(1), 5).terms() == {0: 1}
    y = to_u_series(s ** 2 - s ** -2, 5)
    assert y.terms() == {1: 2, 3: Fraction(8, 24), 5: Fraction(32, 1920)}


def test_inverse_sinh():
    inv = invert_u(sinh_factor(1), 3)
    assert inv.terms() == {-1: 1, 1: Fraction(-1, 24), 3: Fraction(7, 5760)}
    assert invert_u(SPoly.const(1), 4).terms() == {0: 1}
    half = invert_u(sinh_factor(2), 1)
    assert half.coefficient(-1) == Fraction(1, 2)


def test_inverse_of_zero():
    with pytest.raises(NotInvertibleError):
        invert_u(SPoly(), 4)
    with pytest.raises(NotInvertibleError):
        USeries.zero(4).inverse()


def test_truncation_error_on_compare():
    a = invert_u(sinh_factor(1), 5)
    with pytest.raises(TruncationError):
        a.agrees(a, upto=9)


@given(spolys, spolys)
def test_u_expansion_is_a_homomorphism(p, q):
    n = 8
    assert to_u_series(p * q, n).agrees(to_u_series(p, n) * to_u_series(q, n))
    assert to_u_series(p + q, n).agrees(to_u_series(p, n) + to_u_series(q, n))


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_sinh_antisymmetry(ks):
    p = hook_product(ks)
    assert p.reflect() == p * (-1) ** len(ks)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_series_inverse(ks):
    p = hook_product(ks)
    inv = invert_u(p, 12)
    assert (inv * p).agrees(USeries.const(1, 12), upto=12 - len(ks))


@given(spolys, spolys)
def test_spoly_ring_axioms(p, q):
    assert p * q == q * p
    assert (p + q) - q == p
    assert p * (q + 1) == p * q + p


def test_spoly_division():
    assert (s ** 3 * 6) / (s * 2) == s ** 2 * 3
    assert SPoly({1: 2}).inverse() == SPoly({-1: Fraction(1, 2)})


def test_scalar_arithmetic():
    a = t * 2 + Scalar.const(s)
    assert sorted(a.t_exponents()) == [0, 1]
    assert (t ** 2).inverse() == Scalar.t_power(-2)
    assert (t * s) * (t ** -1) == Scalar.const(s)


@given(st.dictionaries(st.integers(1, 6), rationals, max_size=6))
def test_exp_log_roundtrip(coeffs):
    f = QSeries(coeffs, 6)
    assert log_q(exp_q(f)) == f


def test_exp_of_zero_and_q():
    assert exp_q(QSeries({}, 5)) == QSeries({}, 5, 1)
    e = exp_q(QSeries({1: 1}, 6))
    assert [e[d] for d in range(7)] == [Fraction(1, 1), 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24),
                                         Fraction(1, 120), Fraction(1, 720)]


def test_exp_log_with_series_coefficients():
    f = QSeries({1: invert_u(sinh_factor(1), 12)}, 4)
    assert log_q(exp_q(f)).agrees(f)


def test_qseries_constant_checks():
    with pytest.raises(ArgumentError):
        exp_q(QSeries({}, 3, 1))
    with pytest.raises(ArgumentError):
        log_q(QSeries({}, 3, 2))
    with pytest.raises(ArgumentError):
        QSeries({0: 1}, 3)
