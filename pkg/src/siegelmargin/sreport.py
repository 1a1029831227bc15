# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-02
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Verification report methods.
"""


from typing import Any, TypedDict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from io import StringIO
from math import isfinite, inf
import csv
import json
import numpy as np
from numpy.typing import NDArray
from reykit.rtime import now

from .sbase import SiegelBase, InvalidArgumentError


__all__ = (
    'CLAIMS',
    'claim_text',
    'Failure',
    'VerificationReport',
    'to_json',
    'to_csv',
    'format_number'
)


CLAIMS: dict[str, tuple[str, str]] = {
    'proposition': (
        'prime power window proposition',
        'prime-power reciprocal sums window: upper check q <= 2278383 and lower check q <= 2278421'
    ),
    'prop-upper': (
        'prime power window proposition, upper computer check',
        'prime-power reciprocal sums: eps(q) < 0 at every prime power q <= 2278383'
    ),
    'prop-lower': (
        'prime power window proposition, lower computer check',
        'prime-power reciprocal sums: eps(q) + 1.75/(log q)^2 - 1/q > 0 at every prime power q <= 2278421'
    ),
    'prop-window': (
        'prime power window proposition, square tail inequality',
        'prime-power reciprocal sums: Dusart window implies the stated window for x >= 2278383'
    ),
    'dusart': (
        'explicit prime reciprocal bound',
        'Dusart prime reciprocal bound |sum 1/p - log log x - B1| <= 0.2/(log x)^3 for x >= 2278383'
    ),
    'b2': (
        'prime power window proposition, constant B2',
        'prime power reciprocal constant B2 = B1 + C = 1.03465...'
    ),
    'lemma-h': (
        'ideal norm sum lemma',
        'ideal norm sum below sqrt(d)/2: sum nu(a)/a <= h(-d)/11 for d > 3e8'
    ),
    'lemma-h-count': (
        'ideal norm sum lemma, count form',
        'ideal norm sum below sqrt(d)/2: sum nu(a) <= h(-d)'
    ),
    'nu-oracle': (
        'norm count function, congruence definition',
        'nu formula agrees with congruence count brute force'
    ),
    'dedekind': (
        'Dedekind zeta factorisation',
        'Dedekind zeta coefficients: sum_{u^2 a = n} nu(a) = sum_{m | n} chi(m)'
    ),
    'class-number': (
        'class number, reduced forms',
        'class number by reduced form enumeration'
    ),
    'class-formula': (
        'class number formula',
        'class number formula against truncated L(1, chi) series'
    ),
    'j-values': (
        'line integral constants',
        'line integral constants J1..J4'
    ),
    'j-rounding': (
        'line integral constants, rounding',
        'rounded integral constants 0.354 and 1.067'
    ),
    'constants': (
        'case analysis constants',
        'rounded constants of the case analysis re-derived in the conservative direction'
    ),
    'case1': (
        'case analysis, first case',
        'case log d <= 42: (1 - beta) sqrt d > 20.984 - 0.341 log d > 6.6'
    ),
    'case2': (
        'case analysis, second case',
        'case 42 < log d <= 100: case-two lower bound > 6.5'
    ),
    'case3': (
        'case analysis, third case',
        'case log d > 100: case-three inequality chain and bound > 7'
    ),
    'theorem1': (
        'main lower bound theorem',
        'main theorem: 1 - beta > 6.5 / sqrt d for all d > 3e8'
    ),
    'theorem2': (
        'class number asymptotic theorem',
        'class number asymptotic: ratio tends to 2 pi'
    )
}
'Claim identifiers mapped to the location and statement they certify.'


def claim_text(claim: str) -> str:
    """
    Get claim citation text, `[id] location: statement`.

    Parameters
    ----------
    claim : Claim identifier.

    Returns
    -------
    Citation text.
    """

    # Get.
    location, statement = CLAIMS.get(claim, ('unregistered location', 'unregistered claim'))
    text = f'[{claim}] {location}: {statement}'

    return text


def format_number(value: float) -> str:
    """
    Format number with 12 significant digits for CSV output.

    Parameters
    ----------
    value : Number.

    Returns
    -------
    Text.
    """

    # Format.
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    text = f'{value:.12g}'

    return text


@dataclass(frozen=True)
class Failure(SiegelBase):
    """
    Verification failure record type.
    """

    value: float
    'Evaluation point.'
    quantity: str
    'Checked quantity name.'
    slack: float
    'Signed distance to the bound, positive means satisfied.'


    def to_dict(self) -> dict[str, Any]:
        """
        Convert to JSON dictionary.

        Returns
        -------
        Dictionary.
        """

        # Convert.
        data = {
            'value': _json_number(self.value),
            'quantity': self.quantity,
            'slack': _json_number(self.slack)
        }

        return data


ReportDict = TypedDict(
    'ReportDict',
    {
        'claim': str,
        'checked_range': list,
        'passed': bool,
        'min_slack': float | None,
        'failures': list,
        'marginal': list
    }
)


@dataclass
class VerificationReport(SiegelBase):
    """
    Verification report type.
    `passed` holds exactly when there are no failures.
    """

    claim: str
    'Claim identifier, see `CLAIMS`.'
    checked_range: tuple[float, float]
    'Interval of checked points.'
    failures: list[Failure] = field(default_factory=list)
    'Failed points.'
    marginal: list[Failure] = field(default_factory=list)
    'Passed points whose slack is below the marginal floor.'
    min_slack: float = inf
    'Minimum slack over all checked points.'
    extra: dict[str, Any] = field(default_factory=dict)
    'Additional report values.'


    @property
    def passed(self) -> bool:
        """
        Whether all checks passed.
        """

        # Judge.
        judge = not self.failures

        return judge


    def record(
        self,
        value: float,
        quantity: str,
        slack: float,
        slack_floor: float = 0.0,
        strict: bool = True
    ) -> None:
        """
        Record one checked point.

        Parameters
        ----------
        value : Evaluation point.
        quantity : Checked quantity name.
        slack : Signed distance to the bound.
        slack_floor : Passed points below this slack are flagged marginal.
        strict : Whether zero slack fails.
        """

        # Record.
        self.min_slack = min(self.min_slack, slack)
        if not (slack > 0 if strict else slack >= 0):
            self.failures.append(Failure(value, quantity, slack))
        elif abs(slack) < slack_floor:
            self.marginal.append(Failure(value, quantity, slack))


    def record_many(
        self,
        values: NDArray,
        quantity: str,
        slacks: NDArray,
        slack_floor: float = 0.0,
        strict: bool = True
    ) -> None:
        """
        Record checked points in batch.

        Parameters
        ----------
        values : Evaluation points.
        quantity : Checked quantity name.
        slacks : Signed distances to the bound.
        slack_floor : Passed points below this slack are flagged marginal.
        strict : Whether zero slack fails.
        """

        # Check.
        if len(values) == 0:
            return

        # Record.
        self.min_slack = min(self.min_slack, float(np.min(slacks)))
        failed = ~(slacks > 0) if strict else ~(slacks >= 0)
        marginal = ~failed & (np.abs(slacks) < slack_floor)
        for index in np.flatnonzero(failed):
            self.failures.append(Failure(float(values[index]), quantity, float(slacks[index])))
        for index in np.flatnonzero(marginal):
            self.marginal.append(Failure(float(values[index]), quantity, float(slacks[index])))


    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        """
        Merge two reports of same claim, associative and independent of partition order.

        Parameters
        ----------
        other : Other report.

        Returns
        -------
        Merged report.
        """

        # Check.
        if other.claim != self.claim:
            raise InvalidArgumentError(f'cannot merge claim "{other.claim}" into "{self.claim}"')

        # Merge.
        key = lambda item: (item.value, item.quantity)
        checked_range = (
            min(self.checked_range[0], other.checked_range[0]),
            max(self.checked_range[1], other.checked_range[1])
        )
        extra = {**self.extra, **other.extra}
        report = VerificationReport(
            self.claim,
            checked_range,
            sorted(self.failures + other.failures, key=key),
            sorted(self.marginal + other.marginal, key=key),
            min(self.min_slack, other.min_slack),
            extra
        )

        return report


    def message(self) -> str:
        """
        Summary message citing the claim.

        Returns
        -------
        Message.
        """

        # Build.
        status = 'passed' if self.passed else f'FAILED at {len(self.failures)} points'
        text = f'{claim_text(self.claim)}: {status}, min slack {self.min_slack!r}'
        if self.failures:
            first = self.failures[0]
            text += f', first failure {first.quantity} at {first.value!r} (slack {first.slack!r})'

        return text


    def to_dict(self) -> ReportDict:
        """
        Convert to JSON dictionary.

        Returns
        -------
        Dictionary.
        """

        # Convert.
        data = {
            'claim': self.claim,
            'checked_range': [_json_number(value) for value in self.checked_range],
            'passed': self.passed,
            'min_slack': _json_number(self.min_slack),
            'failures': [item.to_dict() for item in self.failures],
            'marginal': [item.to_dict() for item in self.marginal]
        }
        for key, value in self.extra.items():
            data[key] = _json_value(value)

        return data


def _json_number(value: float) -> float | None:
    """
    Map non finite number to `None`.

    Parameters
    ----------
    value : Number.

    Returns
    -------
    JSON number.
    """

    # Convert.
    if isinstance(value, float) and not isfinite(value):
        return None

    return value


def _json_value(value: Any) -> Any:
    """
    Convert value to JSON compatible value.

    Parameters
    ----------
    value : Value.

    Returns
    -------
    JSON value.
    """

    # Convert.
    match value:
        case bool() | str() | None:
            return value
        case int():
            return int(value)
        case float():
            return _json_number(float(value))
        case dict():
            return {str(key): _json_value(item) for key, item in value.items()}
        case list() | tuple():
            return [_json_value(item) for item in value]
        case np.ndarray():
            return _json_value(value.tolist())
        case _ if hasattr(value, 'to_dict'):
            return _json_value(value.to_dict())
        case _ if hasattr(value, 'item'):
            return _json_value(value.item())
        case _:
            return str(value)


def to_json(data: Any, timestamp: bool = True) -> str:
    """
    Serialize value to deterministic JSON text.

    Parameters
    ----------
    data : Value, dictionary or object with `to_dict` method.
    timestamp : Whether add `timestamp` field.

    Returns
    -------
    JSON text.
    """

    # Parameter.
    data = _json_value(data)
    if timestamp and isinstance(data, dict):
        data = {**data, 'timestamp': str(now())}

    # Serialize.
    text = json.dumps(data, indent=2, allow_nan=False)

    return text


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Serialize rows to CSV text, numbers with 12 significant digits.

    Parameters
    ----------
    header : Column names.
    rows : Rows.

    Returns
    -------
    CSV text.
    """

    # Serialize.
    buffer = StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([
            format_number(item) if isinstance(item, (int, float)) else item
            for item in row
        ])
    text = buffer.getvalue()

    return text
