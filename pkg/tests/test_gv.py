from fractions import Fraction

import pytest

from kleinrgw.errors import ArgumentError, TruncationError
from kleinrgw.gv import (
    COMPLEX, REAL, connected_real_series, default_hmax, extract_complex_bps, extract_real_bps,
    gv_verify, parity_check, resynthesize, sinh_power, sphere_connected_series, sphere_cy_report,
    torus_product, torus_report,
)
from kleinrgw.ring import QSeries, SPoly, sinh_factor, to_u_series


def test_sinh_power():
    assert sinh_power(2, 3) == sinh_factor(2) ** 3
    inv = sinh_power(1, -1, 5)
    assert (inv * to_u_series(sinh_factor(1), 8)).agrees(1, upto=5)


def test_default_hmax_covers_support():
    assert default_hmax(0, 5) == 10
    assert default_hmax(3, 5) == 31


def test_genus_zero_tables():
    report = gv_verify(0, 5)
    assert report.ok, report.failures
    assert report.real.values == {(1, 0): 1}
    assert report.complex.values == {(1, 0): 1}


def test_genus_one_tables():
    report = gv_verify(1, 6)
    assert report.ok, report.failures
    assert report.real.values == {(d, 1): (-1) ** (d - 1) for d in range(1, 7)}
    assert report.complex.values == {(d, 1): 1 for d in range(1, 7)}


def test_genus_two_is_integral():
    report = gv_verify(2, 4)
    assert report.ok, report.failures
    assert all(v.denominator == 1 for v in report.real.values.values())
    assert report.real.support()[1] == [2]


def test_degree_one_support():
    for g in range(0, 4):
        table = extract_complex_bps(g, 1)
        assert table.values == {(1, g): 1}


def test_genus_two_degree_one_series():
    series = connected_real_series(2, 1)
    assert series[1] == sinh_factor(1)


def test_genus_three_degree_one():
    series = connected_real_series(3, 2)
    table = extract_real_bps(series, 3)
    assert table.value(1, 3) == 1
    assert all(table.value(1, h) == 0 for h in range(0, 10) if h != 3)


def test_resynthesis_roundtrip():
    series = connected_real_series(2, 4)
    table = extract_real_bps(series, 2)
    assert resynthesize(table, 4) == series


def test_truncation_error():
    with pytest.raises(TruncationError):
        gv_verify(0, 5, order=2)


def test_extraction_needs_connected_series():
    with pytest.raises(ArgumentError):
        extract_real_bps(QSeries({1: SPoly.const(1)}, 2, 1), 1)


def test_parity_mod_two():
    assert parity_check(12)


def test_torus_small():
    assert torus_product(6) == [1, 1, 0, 1, 1, 1, 1]
    assert torus_report(6).ok


def test_sphere_small():
    report = sphere_cy_report(4, 8)
    assert report.ok, report.checks
    assert sphere_connected_series(4, 8)[2] == 0
    first = sphere_connected_series(3, 3)[3]
    assert first.coefficient(-1) == Fraction(1, 9)
