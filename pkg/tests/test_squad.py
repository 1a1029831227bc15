# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-09
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Imaginary quadratic field arithmetic test methods.
"""


from math import fsum, isqrt, pi
import numpy as np
import pytest
from sympy import primerange
from sympy.ntheory import jacobi_symbol

from siegelmargin.sbase import InvalidArgumentError
from siegelmargin.squad import (
    LEMMA_H_D_MIN,
    FundamentalDiscriminant,
    KroneckerChar,
    NuOracle,
    check_class_number_formula,
    check_dedekind,
    check_lemma_h,
    check_nu_oracle,
    ideal_count_coefficient,
    ideal_norm_reciprocal_sum,
    is_fundamental,
    kronecker,
    lemma_h_chain,
    lemma_h_sample,
    nu,
    nu_bruteforce,
    nu_reciprocal_sum,
    reduced_forms
)


SAMPLE_D = (3, 4, 7, 8, 11, 15, 19, 20, 23, 24, 31, 35, 39, 40, 43, 47, 51, 52, 55, 56, 84, 163)
'Twenty two fundamental discriminants `-d`.'


def test_is_fundamental() -> None:
    fundamental = [d for d in range(1, 60) if is_fundamental(-d)]
    assert fundamental == [3, 4, 7, 8, 11, 15, 19, 20, 23, 24, 31, 35, 39, 40, 43, 47, 51, 52, 55, 56, 59]
    with pytest.raises(InvalidArgumentError):
        is_fundamental(5)
    with pytest.raises(InvalidArgumentError):
        FundamentalDiscriminant(12)


def test_units() -> None:
    assert FundamentalDiscriminant(3).units == 6
    assert FundamentalDiscriminant(4).units == 4
    assert FundamentalDiscriminant(23).units == 2
    assert FundamentalDiscriminant(23).D == -23


@pytest.mark.parametrize('d', SAMPLE_D)
def test_kronecker_odd(d: int) -> None:
    for n in range(1, 400, 2):
        assert kronecker(-d, n) == jacobi_symbol(-d % n, n)


@pytest.mark.parametrize('d', SAMPLE_D)
def test_kronecker_multiplicative(d: int) -> None:
    chi = KroneckerChar(FundamentalDiscriminant(d))
    values = chi.table(500)
    for m in range(1, 23):
        for n in range(1, 500 // m):
            assert values[m * n] == values[m] * values[n]
    for n in range(500):
        assert values[n] == chi(n)
    assert chi(2) == chi.prime_value(2)


@pytest.mark.parametrize('d', SAMPLE_D)
def test_kronecker_periodic(d: int) -> None:
    chi = KroneckerChar(FundamentalDiscriminant(d))
    values = chi.table(1001 + d)
    for n in range(1, 1001):
        assert chi(n + d) == chi(n)
        assert values[n + d] == values[n]
    assert chi(-1) == -1
    assert sum(values[1:d + 1].tolist()) == 0

def test_kronecker_values() -> None:
    assert kronecker(-23, 2) == 1
    assert kronecker(-3, 2) == -1
    assert kronecker(-4, 2) == 0
    assert kronecker(-4, 3) == -1
    assert kronecker(-7, 0) == 0
    assert kronecker(-1, 0) == 1
    assert kronecker(-23, -1) == -1


@pytest.mark.parametrize('d', SAMPLE_D)
def test_nu_oracle(d: int) -> None:
    report = check_nu_oracle(d, 2000)
    assert report.passed
    assert report.extra['rows'][0] == (1, 1, 1)


@pytest.fixture(scope='module')
def two_omega() -> np.ndarray:
    """
    Values `2^w(a)` at `0..100000`.
    """

    counts = np.zeros(100_001, dtype=np.int64)
    for p in primerange(2, 100_001):
        counts[p::p] += 1

    return np.left_shift(1, counts)


@pytest.mark.parametrize('d', (3, 4, 7, 23, 56, 84, 163, 2383747))
def test_nu_two_omega(two_omega, d: int) -> None:
    values = NuOracle(FundamentalDiscriminant(d)).table(100_001)
    assert np.all(values[1:] >= 0)
    assert np.all(values[1:] <= two_omega[1:])

def test_nu_table() -> None:
    oracle = NuOracle(FundamentalDiscriminant(23))
    values = oracle.table(300)
    assert values[0] == 0
    for a in range(1, 300):
        assert values[a] == nu(oracle, a) == nu_bruteforce(23, a)
    assert oracle.cache[6] == 4
    with pytest.raises(InvalidArgumentError):
        nu(oracle, 0)


def test_nu_ramified() -> None:
    oracle = NuOracle(FundamentalDiscriminant(20))
    assert nu(oracle, 2) == 1
    assert nu(oracle, 4) == 0
    assert nu(oracle, 5) == 1
    assert nu(oracle, 10) == 1
    assert nu(oracle, 25) == 0


@pytest.mark.parametrize(
    'd, h',
    [(3, 1), (4, 1), (7, 1), (8, 1), (15, 2), (20, 2), (23, 3), (47, 5), (56, 4), (71, 7), (84, 4), (163, 1), (167, 11), (199, 9)]
)
def test_class_number(d: int, h: int) -> None:
    forms = reduced_forms(d)
    assert forms.class_number == h
    for a, b, c in forms.forms:
        assert b * b - 4 * a * c == -d
        assert -a < b <= a <= c
        if a == c:
            assert b >= 0


def test_reduced_forms_order() -> None:
    forms = reduced_forms(23)
    assert forms.forms == ((1, 1, 6), (2, -1, 3), (2, 1, 3))
    assert forms.to_dict() == {'d': 23, 'h': 3, 'forms': [[1, 1, 6], [2, -1, 3], [2, 1, 3]]}


@pytest.mark.slow
def test_class_number_large() -> None:
    assert reduced_forms(2383747).class_number == 98


@pytest.mark.parametrize('d', (3, 4, 23, 163, 199))
def test_class_number_formula(d: int) -> None:
    report = check_class_number_formula(d, terms=100_000)
    assert report.passed
    assert report.extra['tail_heuristic']
    assert report.extra['series'] == pytest.approx(report.extra['formula'], abs=report.extra['tail_bound'] + 1e-9)


@pytest.mark.slow
def test_class_number_formula_sweep() -> None:
    ds = [d for d in range(4, 10_001) if is_fundamental(-d)]
    assert ds[:3] == [4, 7, 8]
    failed = []
    for d in ds:
        report = check_class_number_formula(d)
        if not report.passed:
            failed.append((d, report.extra['h'], report.min_slack))
    assert failed == []

@pytest.mark.parametrize('d', (23, 56, 163))
def test_dedekind(d: int) -> None:
    report = check_dedekind(d, 10_000)
    assert report.passed
    assert report.checked_range == (1, 10_000)


def test_ideal_count_coefficient() -> None:
    assert ideal_count_coefficient(23, 1) == 1
    assert ideal_count_coefficient(23, 6) == 4
    assert ideal_count_coefficient(23, 5) == 0
    assert ideal_count_coefficient(23, 25) == 1
    assert ideal_count_coefficient(23, 23) == 1


def test_reciprocal_sums() -> None:
    oracle = NuOracle(FundamentalDiscriminant(23))
    direct = sum(nu(oracle, a) / a for a in range(1, 101))
    assert nu_reciprocal_sum(oracle, 100.5) == pytest.approx(direct, abs=1e-12)
    ideal = sum(
        ideal_count_coefficient(23, n) / n
        for n in range(1, 101)
    )
    assert ideal_norm_reciprocal_sum(oracle, 100) == pytest.approx(ideal, abs=1e-12)


@pytest.mark.parametrize('d', (3, 4, 23, 163, 2383747))
def test_ideal_norm_below_nu_sum(d: int) -> None:
    oracle = NuOracle(FundamentalDiscriminant(d))
    for x in (1, 10, 100.5, 1000, 10_000):
        assert ideal_norm_reciprocal_sum(oracle, x) <= pi ** 2 / 6 * nu_reciprocal_sum(oracle, x)


def test_ideal_norm_divisor_sum() -> None:
    x = 10_000
    counts = np.zeros(x + 1, dtype=np.int64)
    for m in range(1, x + 1):
        counts[m::m] += kronecker(-23, m)
    assert np.all(counts[1:] >= 0)
    expected = fsum((counts[1:] / np.arange(1, x + 1)).tolist())
    oracle = NuOracle(FundamentalDiscriminant(23))
    assert ideal_norm_reciprocal_sum(oracle, x) == pytest.approx(expected, rel=1e-12)


def test_lemma_h_chain() -> None:
    lhs, rhs, judge = lemma_h_chain(101)
    assert lhs == pytest.approx(9.161)
    assert judge
    assert all(lemma_h_chain(h)[2] for h in range(101, 5000))
    with pytest.raises(InvalidArgumentError):
        lemma_h_chain(100)


def test_lemma_h_sample() -> None:
    sample = lemma_h_sample(seed=7, count=3)
    assert len(sample) == 6
    assert sample == sorted(set(sample))
    assert all(d > LEMMA_H_D_MIN and is_fundamental(-d) for d in sample)
    assert sample == lemma_h_sample(seed=7, count=3)
    assert sample[:3] == lemma_h_sample(seed=8, count=3)[:3]


def test_lemma_h_small() -> None:
    with pytest.raises(InvalidArgumentError):
        check_lemma_h(23)


@pytest.mark.slow
def test_lemma_h() -> None:
    for d in lemma_h_sample(seed=0, count=10):
        report = check_lemma_h(d)
        assert report.passed, report.message()
        assert report.extra['x'] == isqrt(d) // 2
        assert report.extra['sum_nu_over_a'] <= report.extra['h'] / 11
