# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-09
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Verification report test methods.
"""


import json
from math import inf
import numpy as np
import pytest

from siegelmargin.sbase import InvalidArgumentError
from siegelmargin.sreport import CLAIMS, VerificationReport, claim_text, format_number, to_csv, to_json


def test_record_strict() -> None:
    report = VerificationReport('case2', (42.0, 100.0))
    report.record(43.0, 'case2', 0.0)
    assert not report.passed
    assert report.failures[0].slack == 0.0

    report = VerificationReport('lemma-h-count', (1, 10))
    report.record(5, 'lemma-h-count', 0.0, strict=False)
    assert report.passed
    assert report.min_slack == 0.0


def test_record_marginal() -> None:
    report = VerificationReport('proposition', (2, 100))
    report.record(2, 'prop-upper', 1e-9, slack_floor=1e-7)
    report.record(3, 'prop-upper', 0.1, slack_floor=1e-7)
    assert report.passed
    assert [item.value for item in report.marginal] == [2]
    assert report.min_slack == 1e-9


def test_record_many() -> None:
    report = VerificationReport('case2', (42.0, 100.0))
    values = np.array([43.0, 44.0, 45.0, 46.0])
    slacks = np.array([0.5, -0.1, 1e-9, 0.0])
    report.record_many(values, 'case2', slacks, slack_floor=1e-6)
    assert [item.value for item in report.failures] == [44.0, 46.0]
    assert [item.value for item in report.marginal] == [45.0]
    assert report.min_slack == -0.1


def test_record_many_empty() -> None:
    report = VerificationReport('case2', (42.0, 100.0))
    report.record_many(np.array([]), 'case2', np.array([]))
    assert report.passed
    assert report.min_slack == inf


def test_merge_partition_independent() -> None:
    values = np.arange(1.0, 21.0)
    slacks = np.sin(values)
    whole = VerificationReport('proposition', (1.0, 20.0))
    whole.record_many(values, 'prop-upper', slacks)

    parts = []
    for chunk_values, chunk_slacks in zip(np.array_split(values, 3), np.array_split(slacks, 3)):
        part = VerificationReport('proposition', (float(chunk_values[0]), float(chunk_values[-1])))
        part.record_many(chunk_values, 'prop-upper', chunk_slacks)
        parts.append(part)
    left = parts[0].merge(parts[1]).merge(parts[2])
    right = parts[2].merge(parts[0].merge(parts[1]))

    for merged in (left, right):
        assert merged.failures == whole.failures
        assert merged.min_slack == whole.min_slack
        assert merged.checked_range == (1.0, 20.0)


def test_merge_other_claim() -> None:
    report = VerificationReport('case2', (42.0, 100.0))
    with pytest.raises(InvalidArgumentError):
        report.merge(VerificationReport('case3', (100.0, 1000.0)))


def test_message_cites_claim() -> None:
    report = VerificationReport('case2', (42.0, 100.0))
    report.record(45.0, 'case2', -0.25)
    text = report.message()
    location, statement = CLAIMS['case2']
    assert text.startswith(f'[case2] {location}: ')
    assert statement in text
    assert 'FAILED at 1 points' in text
    assert claim_text('nothing').endswith('unregistered claim')


@pytest.mark.parametrize('claim', sorted(CLAIMS))
def test_message_cites_location(claim: str) -> None:
    location, statement = CLAIMS[claim]
    assert location and statement
    report = VerificationReport(claim, (0.0, 1.0))
    report.record(0.5, claim, -1.0)
    text = report.message()
    assert text.startswith(f'[{claim}] {location}: {statement}: FAILED')
    assert location in VerificationReport(claim, (0.0, 1.0)).message()


def test_to_json_deterministic() -> None:
    report = VerificationReport('dedekind', (1, 10))
    report.extra = {'d': 23, 'array': np.array([1, 2])}
    first = to_json(report, timestamp=False)
    second = to_json(report, timestamp=False)
    assert first == second
    data = json.loads(first)
    assert list(data)[:4] == ['claim', 'checked_range', 'passed', 'min_slack']
    assert data['min_slack'] is None
    assert data['d'] == 23
    assert 'timestamp' not in data
    assert 'timestamp' in json.loads(to_json(report))


def test_to_csv() -> None:
    text = to_csv(('x', 'value', 'ok'), [(1, 1 / 3, True), (2, 1e-20, False)])
    assert text == 'x,value,ok\n1,0.333333333333,1\n2,1e-20,0\n'
    assert format_number(2278383) == '2278383'
    assert format_number(6.531271234567891) == '6.53127123457'
