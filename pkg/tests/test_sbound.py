# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-09
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Case analysis lower bound and class number asymptotic test methods.
"""


from math import log, pi
import numpy as np
import pytest
from sympy import factorint

from siegelmargin.sbase import CertificationError, InvalidArgumentError
from siegelmargin.sprime import build_prime_power_table
from siegelmargin.sbound import (
    CASE1_END,
    CASE2_END,
    CASE3_END,
    CASE3_T_END,
    LOG_D_MIN,
    BoundConstants,
    CaseParams,
    case1_bound,
    case2_bound,
    case2_corners,
    case2_error_term,
    case2_scan,
    case3_bound,
    case3_chain,
    case3_corners,
    case3_scan,
    check_theorem2,
    error_term,
    invert_h_to_y,
    k0,
    logd_from_t,
    omega_table,
    sigma,
    squarefree_count,
    sum_2w,
    sum_2w_over_n,
    t_from_logd,
    theorem1_certificate,
    theorem1_curves,
    theorem2_ratio
)


CORNER = 16 * log(16) + log(4)
'Abscissa where case two order changes from 8 to 9.'


@pytest.fixture(scope='module')
def bound_table():
    """
    Prime power table covering every case three `t`.
    """

    return build_prime_power_table(1000)


def test_constants_audit() -> None:
    records = BoundConstants().audit()
    failed = [record.name for record in records if not record.direction_ok]
    assert failed == []
    names = {record.name for record in records}
    assert {'numerator_a', 'numerator_b', 'sigma16', 'case3_tail', 'lemma_h_sum', 'j_half'} <= names
    BoundConstants().check()


def test_constants_audit_too_large() -> None:
    with pytest.raises(CertificationError) as info:
        BoundConstants(assumption_const=8.0).check()
    assert info.value.link == 'constant numerator_b'


def test_beta_floor() -> None:
    floor, fraction = BoundConstants().beta_floor()
    assert floor > 0.999
    assert fraction > 0.523


def test_sigma_and_order(small_table) -> None:
    assert sigma(small_table, 16) == pytest.approx(3.7852675, abs=1e-7)
    assert k0(45.0, 16) == 8
    assert k0(46.0, 16) == 9
    assert CaseParams(16, 16, 100.0).k0 == 18
    assert CaseParams(16, 16, 100.0).check_sigma(small_table) == sigma(small_table, 16)
    with pytest.raises(InvalidArgumentError):
        k0(1.0, 16)
    with pytest.raises(InvalidArgumentError):
        CaseParams(16, 8, 50.0)


def test_t_logd() -> None:
    assert t_from_logd(100.0) == pytest.approx(24.6534264, abs=1e-7)
    for logd in (LOG_D_MIN, 100.0, 1000.0):
        assert logd_from_t(t_from_logd(logd)) == pytest.approx(logd, rel=1e-15)


def test_error_term() -> None:
    value = error_term(8, 3.786, 16)
    assert value == pytest.approx(case2_error_term(8), rel=1e-2)
    with pytest.raises(CertificationError):
        error_term(2, 3.5, 16)
    orders = np.array([8, 9, 18])
    np.testing.assert_allclose(case2_error_term(orders), [case2_error_term(int(k)) for k in orders])


def test_case1_bound() -> None:
    assert case1_bound(CASE1_END) == pytest.approx(6.662, abs=1e-12)
    assert case1_bound(LOG_D_MIN) > case1_bound(CASE1_END)
    with pytest.raises(InvalidArgumentError):
        case1_bound(43.0)


def test_case2_bound(small_table) -> None:
    assert case2_bound(CASE2_END, small_table) == pytest.approx(6.577, abs=1e-3)
    assert case2_bound(CORNER - 1e-9, small_table) == pytest.approx(6.5313, abs=1e-4)
    assert case2_bound(CORNER + 1e-6, small_table) == pytest.approx(6.806, abs=1e-3)
    with pytest.raises(InvalidArgumentError):
        case2_bound(CASE1_END, small_table)


def test_case2_corners() -> None:
    corners = case2_corners()
    assert len(corners) == 10
    assert corners[0] == pytest.approx(CORNER, abs=1e-12)
    assert abs(corners[0] - 45.747) < 1e-3
    assert all(CASE1_END < corner <= CASE2_END for corner in corners)


def test_case2_scan(small_table) -> None:
    curve = case2_scan(1e-3, small_table)
    assert curve.logd[0] > CASE1_END
    assert curve.logd[-1] == CASE2_END
    assert np.all(np.diff(curve.logd) > 0)
    assert curve.min_bound > 6.53
    assert abs(curve.argmin_logd - CORNER) < 1e-3
    assert set(curve.k0.tolist()) == set(range(8, 19))
    rows = list(curve.rows())
    assert len(rows) == len(curve.logd)
    assert rows[-1][1] == 18


def test_case2_scan_continuity(small_table) -> None:
    curve = case2_scan(1e-3, small_table)
    steps = np.abs(np.diff(curve.bound))
    widths = np.diff(curve.logd)
    same = curve.k0[1:] == curve.k0[:-1]
    assert np.all(steps[same] <= 0.01 * widths[same] + 1e-12)
    jumps = np.flatnonzero(~same)
    corners = case2_corners()
    assert len(jumps) == len(corners)
    for index, corner in zip(jumps.tolist(), corners):
        assert curve.logd[index] <= corner < curve.logd[index + 1]
        assert curve.logd[index + 1] - curve.logd[index] < 1e-12
        assert curve.bound[index + 1] > curve.bound[index]
    assert curve.bound[jumps[0] + 1] - curve.bound[jumps[0]] > 0.2
    for corner in corners:
        for side in (-1, 1):
            near = case2_bound(corner + side * 1e-6, small_table)
            nearer = case2_bound(corner + side * 1e-9, small_table)
            assert abs(near - nearer) < 1e-7

def test_case2_scan_invalid(small_table) -> None:
    with pytest.raises(InvalidArgumentError):
        case2_scan(0.1, small_table)
    with pytest.raises(InvalidArgumentError):
        case2_scan(1e-3, small_table, 50.0, 45.0)


def test_case3_chain(bound_table) -> None:
    t = t_from_logd(CASE2_END)
    chain = case3_chain(t, bound_table)
    assert chain['k0'] == 16
    assert chain['esigma_over_k0'] < 0.778
    assert chain['ratio'] < 1.401
    assert chain['tail'] < 0.0003
    assert chain['denominator'] < 2.738
    assert case3_bound(t, bound_table) == pytest.approx(7.1588, abs=1e-3)
    with pytest.raises(InvalidArgumentError):
        case3_chain(24.0, bound_table)


def test_case3_corners() -> None:
    corners = case3_corners(25.0, 30.0)
    assert len(corners) == 2
    for k, corner in zip((16, 17), corners):
        assert 2 * corner / log(corner) == pytest.approx(k, abs=1e-9)


def test_case3_scan(bound_table) -> None:
    curve, report = case3_scan(bound_table, count=500)
    assert report.passed, report.message()
    assert curve.min_bound > 7
    assert CASE3_T_END == 500.0
    assert report.extra['t_range'][0] > 24.65
    assert report.extra['t_range'][1] == pytest.approx(500.0, rel=1e-15)
    assert curve.logd[-1] == pytest.approx(logd_from_t(500.0), rel=1e-15)
    assert curve.logd[-1] == pytest.approx(CASE3_END, rel=1e-15)
    assert report.extra['certified'] == len(curve.logd)
    assert curve.k0[-1] == 161
    assert case3_bound(500.0, bound_table) == pytest.approx(curve.bound[-1], rel=1e-12)


def test_case3_scan_no_point_certified(bound_table) -> None:
    constants = BoundConstants(case3_ratio=1.0)
    curve, report = case3_scan(bound_table, count=50, constants=constants)
    assert curve is None
    assert not report.passed
    assert report.extra['certified'] == 0
    assert report.extra['min_bound'] is None
    assert {item.quantity for item in report.failures} == {'(1 + k0) / (1 + k0 - sigma) < 1.401'}
    assert 'FAILED' in report.message()
    report = theorem1_certificate(bound_table, grid_step=1e-2, constants=constants, case3_count=50)
    assert not report.passed
    assert 'case3' not in report.extra['margins']
    assert report.extra['case3_certified'] == 0
    assert report.extra['argmin_case'] == 'case2'


def test_case3_scan_invalid(bound_table) -> None:
    with pytest.raises(InvalidArgumentError):
        case3_scan(bound_table, t_max=20.0)
    with pytest.raises(InvalidArgumentError):
        case3_scan(bound_table, count=1)


def test_theorem1_curves(bound_table) -> None:
    curves = theorem1_curves(bound_table, grid_step=1e-2, case3_count=50)
    rows = list(curves.rows())
    logd, order, sigma_value, bound, case = rows[0]
    assert (order, sigma_value, case) == (None, None, 'case1')
    assert logd == pytest.approx(LOG_D_MIN)
    assert bound == pytest.approx(20.984 - 0.341 * LOG_D_MIN)
    assert [row[4] for row in rows] == sorted(row[4] for row in rows)
    steps = np.diff([row[0] for row in rows])
    assert np.all(steps > -1e-12)
    assert rows[-1][0] == pytest.approx(CASE3_END)
    report = theorem1_certificate(bound_table, curves=curves)
    assert report.passed, report.message()
    assert report.extra['case3_certified'] == len(curves.case3.logd)


@pytest.mark.slow
def test_theorem1_certificate(bound_table) -> None:
    report = theorem1_certificate(bound_table)
    assert report.passed, report.message()
    assert report.extra['min_bound'] > 6.5
    assert report.extra['argmin_case'] == 'case2'
    assert abs(report.extra['argmin'] - CORNER) < 1e-3
    assert report.extra['margins']['case3'] > 0.5
    assert len(report.extra['constant_audit']) == len(BoundConstants().audit())


def test_theorem1_certificate_fails_large_constant(bound_table) -> None:
    report = theorem1_certificate(bound_table, grid_step=1e-2, constants=BoundConstants(assumption_const=8.0), case3_count=50)
    assert not report.passed
    assert any(item.quantity == 'constant numerator_b' for item in report.failures)


def test_sum_2w() -> None:
    assert sum_2w(1) == 1
    assert sum_2w(6) == 13
    assert sum_2w(34) == 101
    assert sum_2w_over_n(34) == pytest.approx(9.160983, abs=1e-6)
    assert sum_2w_over_n(34) < 9.161
    assert squarefree_count(10 ** 6) == 607926
    assert squarefree_count(10) == 7


def test_2w_squarefree_divisors() -> None:
    y = 10_000
    squarefree = np.zeros(y + 1, dtype=np.int64)
    for m in range(1, y + 1):
        squarefree[m] = all(power == 1 for power in factorint(m).values())
    counts = np.zeros(y + 1, dtype=np.int64)
    for m in np.flatnonzero(squarefree).tolist():
        counts[m::m] += 1
    np.testing.assert_array_equal(np.left_shift(1, omega_table(y)[1:]), counts[1:])
    assert sum_2w(y) == int(counts.sum())

def test_invert_h_to_y() -> None:
    assert invert_h_to_y(101) == 34
    assert invert_h_to_y(1) == 1
    for h in (2, 13, 14, 1000, 123_456):
        y = invert_h_to_y(h)
        assert sum_2w(y - 1) < h <= sum_2w(y)


def test_theorem2_ratio() -> None:
    ratios = [theorem2_ratio(h) / (2 * pi) for h in (1000, 10_000, 100_000)]
    assert ratios[0] == pytest.approx(0.839, abs=2e-3)
    assert ratios == sorted(ratios)
    with pytest.raises(InvalidArgumentError):
        theorem2_ratio(100)


@pytest.mark.slow
def test_check_theorem2() -> None:
    report = check_theorem2((1000, 10_000, 100_000, 1_000_000))
    assert report.passed, report.message()
    assert [row['h'] for row in report.extra['ratio_rows']] == [1000, 10_000, 100_000, 1_000_000]
    assert report.extra['ratio_rows'][-1]['ratio_over_2pi'] == pytest.approx(0.987, abs=2e-3)
    with pytest.raises(InvalidArgumentError):
        check_theorem2((10_000, 1000))
