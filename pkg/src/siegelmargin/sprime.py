# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-02
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Prime power sieve and reciprocal sum methods.
"""


from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil, fsum, isqrt, log, sqrt
import logging
import numpy as np
from numpy.typing import NDArray
from reykit.rbase import throw

from .sbase import SiegelBase, InvalidArgumentError
from .sreport import VerificationReport


__all__ = (
    'B1',
    'DUSART_START',
    'PROP_UPPER_END',
    'PROP_LOWER_END',
    'sieve_primes',
    'segmented_primes',
    'factorize',
    'kahan_cumsum',
    'PrimePowerTable',
    'MertensConstants',
    'build_prime_power_table',
    'prime_reciprocal_sum',
    'prime_power_reciprocal_sum',
    'compute_C',
    'epsilon',
    'epsilon_samples',
    'epsilon_variation_bound',
    'proposition_window',
    'verify_proposition',
    'check_dusart'
)


logger = logging.getLogger(__name__)


B1 = 0.26149721284764278375542683860869585
'Mertens constant, OEIS A077761.'
DUSART_START = 2278383
'Start point of Dusart prime reciprocal bound.'
PROP_UPPER_END = 2278383
'End point of upper bound computer check.'
PROP_LOWER_END = 2278421
'End point of lower bound computer check, the least prime power above `DUSART_START`.'


def sieve_primes(limit: int) -> NDArray[np.int64]:
    """
    Sieve of Eratosthenes.

    Parameters
    ----------
    limit : Inclusive upper bound.

    Returns
    -------
    Ascending primes.
    """

    # Check.
    if limit < 2:
        return np.array([], dtype=np.int64)

    # Sieve.
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    primes = np.flatnonzero(is_prime).astype(np.int64)

    return primes


def segmented_primes(limit: int, segment_size: int = 1 << 22) -> Iterator[NDArray[np.int64]]:
    """
    Odd only segmented sieve of Eratosthenes, stream primes by segment.

    Parameters
    ----------
    limit : Inclusive upper bound.
    segment_size : Count of odd numbers per segment.

    Returns
    -------
    Iterator of ascending prime arrays.
    """

    # Check.
    if limit < 2:
        return

    # Parameter.
    base = sieve_primes(isqrt(limit))[1:].tolist()
    yield np.array([2], dtype=np.int64)

    # Sieve.
    low = 3
    while low <= limit:
        high = min(low + 2 * segment_size, limit + 1)
        count = (high - low + 1) // 2
        mask = np.ones(count, dtype=bool)
        for p in base:
            square = p * p
            if square >= high:
                break
            start = max(square, (low + p - 1) // p * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2::p] = False
        primes = low + 2 * np.flatnonzero(mask).astype(np.int64)
        if len(primes):
            yield primes
        low = high if high % 2 else high + 1


@lru_cache
def _trial_primes(bound: int) -> tuple[int, ...]:
    """
    Primes for trial division, cached by power of two bound.

    Parameters
    ----------
    bound : Power of two bound.

    Returns
    -------
    Primes.
    """

    # Sieve.
    primes = tuple(sieve_primes(bound).tolist())

    return primes


def factorize(n: int) -> dict[int, int]:
    """
    Factorize by trial division.

    Parameters
    ----------
    n : Positive integer.

    Returns
    -------
    Prime to exponent mapping, empty for `1`.
    """

    # Check.
    if n < 1:
        throw(InvalidArgumentError, n)

    # Parameter.
    bound = 1 << max(isqrt(n), 2).bit_length()
    factors: dict[int, int] = {}

    # Divide.
    for p in _trial_primes(bound):
        if p * p > n:
            break
        if n % p == 0:
            exponent = 0
            while n % p == 0:
                n //= p
                exponent += 1
            factors[p] = exponent
    if n > 1:
        factors[n] = factors.get(n, 0) + 1

    return factors


def kahan_cumsum(terms: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Running sums with compensated summation.

    Parameters
    ----------
    terms : Summands in order.

    Returns
    -------
    Running sums.
    """

    # Sum.
    result = np.empty(len(terms), dtype=np.float64)
    total = 0.0
    compensation = 0.0
    for index, term in enumerate(terms.tolist()):
        adjusted = term - compensation
        new_total = total + adjusted
        compensation = (new_total - total) - adjusted
        total = new_total
        result[index] = total

    return result


@dataclass(frozen=True, eq=False)
class PrimePowerTable(SiegelBase):
    """
    Prime power table type, immutable after build.
    Entries ascend by value, each prime power below limit exactly once.
    """

    limit: int
    'Sieve bound.'
    values: NDArray[np.int64]
    'Prime power values.'
    primes: NDArray[np.int64]
    'Prime base of each value.'
    alphas: NDArray[np.int64]
    'Exponent of each value.'
    cumulative: NDArray[np.float64]
    'Running sums of reciprocal prime powers.'
    prime_cumulative: NDArray[np.float64] = field(repr=False)
    'Running sums of reciprocal primes, constant across higher powers.'


    def __post_init__(self) -> None:
        """
        Freeze arrays.
        """

        # Freeze.
        for array in (self.values, self.primes, self.alphas, self.cumulative, self.prime_cumulative):
            array.flags.writeable = False


    def __len__(self) -> int:
        """
        Count of entries.
        """

        return len(self.values)


    def index(self, x: float) -> int:
        """
        Index of the greatest prime power not exceeding `x`.

        Parameters
        ----------
        x : Real point in `[2, limit]`.

        Returns
        -------
        Entry index.
        """

        # Check.
        if not 2 <= x <= self.limit:
            throw(InvalidArgumentError, x)

        # Search.
        index = int(np.searchsorted(self.values, x, side='right')) - 1

        return index


def build_prime_power_table(limit: int) -> PrimePowerTable:
    """
    Sieve all prime powers not exceeding `limit`.

    Parameters
    ----------
    limit : Sieve bound, at least 2.

    Returns
    -------
    Prime power table.
    """

    # Check.
    if limit < 2:
        throw(InvalidArgumentError, limit)

    # Sieve.
    primes = np.concatenate(list(segmented_primes(limit)))
    values = [primes]
    bases = [primes]
    alphas = [np.ones(len(primes), dtype=np.int64)]
    for p in primes[primes <= isqrt(limit)].tolist():
        power, alpha = p * p, 2
        while power <= limit:
            values.append(np.array([power], dtype=np.int64))
            bases.append(np.array([p], dtype=np.int64))
            alphas.append(np.array([alpha], dtype=np.int64))
            power *= p
            alpha += 1

    # Sort.
    values = np.concatenate(values)
    order = np.argsort(values, kind='stable')
    values = values[order]
    bases = np.concatenate(bases)[order]
    alphas = np.concatenate(alphas)[order]

    # Sum.
    reciprocals = 1.0 / values.astype(np.float64)
    cumulative = kahan_cumsum(reciprocals)
    prime_cumulative = kahan_cumsum(np.where(alphas == 1, reciprocals, 0.0))
    table = PrimePowerTable(limit, values, bases, alphas, cumulative, prime_cumulative)
    logger.debug('prime power table to %d built, %d entries', limit, len(table))

    return table


def prime_reciprocal_sum(table: PrimePowerTable, x: float) -> float:
    """
    Sum of reciprocal primes not exceeding `x`.

    Parameters
    ----------
    table : Prime power table.
    x : Real point in `[2, table.limit]`.

    Returns
    -------
    Sum.
    """

    # Sum.
    index = table.index(x)
    value = float(table.prime_cumulative[index])

    return value


def prime_power_reciprocal_sum(table: PrimePowerTable, x: float) -> float:
    """
    Sum of reciprocal prime powers not exceeding `x`.

    Parameters
    ----------
    table : Prime power table.
    x : Real point in `[2, table.limit]`.

    Returns
    -------
    Sum.
    """

    # Sum.
    index = table.index(x)
    value = float(table.cumulative[index])

    return value


def compute_C(tolerance: float = 1e-9) -> float:
    """
    Sum over primes of `1 / (p^2 - p)`, truncated at prime bound `P` with tail at most `1 / (P - 1)`.

    Parameters
    ----------
    tolerance : Tail tolerance, in `(0, 1)`.

    Returns
    -------
    Truncated sum, below the true value by at most `tolerance`.
    """

    # Check.
    if not 0 < tolerance < 1:
        throw(InvalidArgumentError, tolerance)

    # Parameter.
    bound = ceil(1 / tolerance) + 1

    # Sum.
    partials = []
    for primes in segmented_primes(bound):
        p = primes.astype(np.float64)
        partials.append(float(np.sum(1.0 / (p * (p - 1.0)))))
    value = fsum(partials)
    logger.debug('C summed to prime bound %d: %r', bound, value)

    return value


@dataclass(frozen=True)
class MertensConstants(SiegelBase):
    """
    Mertens constants type.
    """

    C: float
    'Sum over primes of `1 / (p^2 - p)`.'
    B1: float = B1
    'Mertens constant.'
    B2: float = field(init=False)
    'Prime power reciprocal constant, `B1 + C`.'


    def __post_init__(self) -> None:
        """
        Derive `B2`.
        """

        # Build.
        object.__setattr__(self, 'B2', self.B1 + self.C)


    @classmethod
    def build(cls, tolerance: float = 1e-9) -> 'MertensConstants':
        """
        Build with computed `C`.

        Parameters
        ----------
        tolerance : Tail tolerance of `C`.

        Returns
        -------
        Constants.
        """

        # Build.
        constants = cls(compute_C(tolerance))

        return constants


    def cross_check(self, table: PrimePowerTable, x: float = 1e6) -> float:
        """
        Deviation of stored `B1` from the prime reciprocal sum at `x`.

        Parameters
        ----------
        table : Prime power table.
        x : Real point.

        Returns
        -------
        `sum_{p <= x} 1/p - log log x - B1`.
        """

        # Compute.
        deviation = prime_reciprocal_sum(table, x) - log(log(x)) - self.B1

        return deviation


def epsilon(table: PrimePowerTable, constants: MertensConstants, x: float) -> float:
    """
    Signed error `sum_{p^a <= x} p^-a - log log x - B2`.

    Parameters
    ----------
    table : Prime power table.
    constants : Mertens constants.
    x : Real point in `[2, table.limit]`.

    Returns
    -------
    Error.
    """

    # Compute.
    value = prime_power_reciprocal_sum(table, x) - log(log(x)) - constants.B2

    return value


def _epsilon_array(
    table: PrimePowerTable,
    constants: MertensConstants,
    sums: NDArray[np.float64],
    points: NDArray[np.float64]
) -> NDArray[np.float64]:
    """
    Vectorized signed error.

    Parameters
    ----------
    table : Prime power table.
    constants : Mertens constants.
    sums : Reciprocal prime power sums at points.
    points : Real points.

    Returns
    -------
    Errors.
    """

    # Compute.
    values = sums - np.log(np.log(points)) - constants.B2

    return values


def epsilon_samples(
    table: PrimePowerTable,
    constants: MertensConstants
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
    """
    Sample signed error at all prime powers and midpoints between consecutive prime powers.

    Parameters
    ----------
    table : Prime power table.
    constants : Mertens constants.

    Returns
    -------
    Points, errors and lower window `-1.75 / (log x)^2`, ascending by point.
    """

    # Parameter.
    values = table.values.astype(np.float64)
    midpoints = (values[:-1] + values[1:]) / 2

    # Sample.
    points = np.empty(2 * len(values) - 1)
    points[0::2] = values
    points[1::2] = midpoints
    sums = np.empty_like(points)
    sums[0::2] = table.cumulative
    sums[1::2] = table.cumulative[:-1]
    errors = _epsilon_array(table, constants, sums, points)
    lower = -1.75 / np.log(points) ** 2

    return points, errors, lower


def epsilon_variation_bound(ell: float) -> tuple[float, float]:
    """
    Bound of `max eps - min eps` over `y >= ell` from the stated window.

    Parameters
    ----------
    ell : Real point, at least 2.

    Returns
    -------
    Window width and simplified bound `1.8 / (log ell)^2`.
    """

    # Check.
    if ell < 2:
        throw(InvalidArgumentError, ell)

    # Compute.
    log_ell = log(ell)
    width = 1.75 / log_ell ** 2 + min(0.2 / log_ell ** 3, 1e-4)
    simplified = 1.8 / log_ell ** 2

    return width, simplified


def proposition_window(x: float) -> tuple[tuple[float, float], tuple[float, float], bool]:
    """
    Window implied by Dusart bound and the prime square tail for `x >= 2278383`, against stated window.

    Parameters
    ----------
    x : Real point.

    Returns
    -------
    Implied window, stated window and whether implied lies inside stated.
    """

    # Check.
    if x < DUSART_START:
        throw(InvalidArgumentError, x)

    # Compute.
    log_x = log(x)
    dusart = 0.2 / log_x ** 3
    implied = (-dusart - 1 / (ceil(sqrt(x)) - 1), dusart)
    stated = (-1.75 / log_x ** 2, min(dusart, 1e-4))
    inside = stated[0] <= implied[0] and implied[1] <= stated[1]

    return implied, stated, inside


def _verify_chunk(
    table: PrimePowerTable,
    constants: MertensConstants,
    start: int,
    stop: int,
    slack_floor: float
) -> VerificationReport:
    """
    Verify entries in index range.

    Parameters
    ----------
    table : Prime power table.
    constants : Mertens constants.
    start : Start index.
    stop : Stop index, exclusive.
    slack_floor : Marginal slack floor.

    Returns
    -------
    Partial report.
    """

    # Parameter.
    values = table.values[start:stop]
    points = values.astype(np.float64)
    errors = _epsilon_array(table, constants, table.cumulative[start:stop], points)
    report = VerificationReport('proposition', (float(points[0]), float(points[-1])))

    # Upper.
    upper = values <= PROP_UPPER_END
    report.record_many(points[upper], 'prop-upper', -errors[upper], slack_floor)

    # Lower.
    lower = values <= PROP_LOWER_END
    slacks = errors[lower] + 1.75 / np.log(points[lower]) ** 2 - 1.0 / points[lower]
    report.record_many(points[lower], 'prop-lower', slacks, slack_floor)

    return report


def verify_proposition(
    table: PrimePowerTable,
    constants: MertensConstants,
    slack_floor: float = 1e-7,
    workers: int = 1
) -> VerificationReport:
    """
    Computer checks of the prime power reciprocal window.
    Upper check `eps(q) < 0` for prime powers `q <= 2278383`,
    lower check `eps(q) + 1.75 / (log q)^2 - 1/q > 0` for prime powers `q <= 2278421`.

    Parameters
    ----------
    table : Prime power table, limit at least 2278421.
    constants : Mertens constants.
    slack_floor : Passed points with slack below are flagged marginal.
    workers : Count of threads over entry partitions.

    Returns
    -------
    Report, with minimum slack of each check in `extra`.
    """

    # Check.
    if table.limit < PROP_LOWER_END:
        throw(InvalidArgumentError, table.limit)
    if workers < 1:
        throw(InvalidArgumentError, workers)

    # Parameter.
    stop = int(np.searchsorted(table.values, PROP_LOWER_END, side='right'))
    bounds = np.linspace(0, stop, workers + 1).astype(int).tolist()
    chunks = [
        (start, end)
        for start, end in zip(bounds[:-1], bounds[1:])
        if end > start
    ]

    # Verify.
    with ThreadPoolExecutor(workers) as executor:
        reports = list(executor.map(
            lambda chunk: _verify_chunk(table, constants, *chunk, slack_floor),
            chunks
        ))
    report = reports[0]
    for other in reports[1:]:
        report = report.merge(other)
    key = lambda item: (item.value, item.quantity)
    report.failures.sort(key=key)
    report.marginal.sort(key=key)

    # Extra.
    values = table.values[:stop]
    points = values.astype(np.float64)
    errors = _epsilon_array(table, constants, table.cumulative[:stop], points)
    upper = values <= PROP_UPPER_END
    slacks_upper = -errors[upper]
    slacks_lower = errors + 1.75 / np.log(points) ** 2 - 1.0 / points
    report.extra = {
        'min_slack_upper': float(np.min(slacks_upper)),
        'argmin_upper': int(values[upper][np.argmin(slacks_upper)]),
        'min_slack_lower': float(np.min(slacks_lower)),
        'argmin_lower': int(values[np.argmin(slacks_lower)]),
        'slack_floor': slack_floor,
        'B2': constants.B2
    }
    logger.info(
        'proposition verified over %d prime powers: %s',
        stop,
        'passed' if report.passed else 'failed'
    )

    return report


def check_dusart(table: PrimePowerTable, constants: MertensConstants, x: float) -> bool:
    """
    Spot check of Dusart bound `|sum_{p <= x} 1/p - log log x - B1| <= 0.2 / (log x)^3`.

    Parameters
    ----------
    table : Prime power table.
    constants : Mertens constants.
    x : Real point, at least 2278383.

    Returns
    -------
    Whether bound holds at `x`.
    """

    # Check.
    if x < DUSART_START:
        throw(InvalidArgumentError, x)

    # Judge.
    deviation = abs(constants.cross_check(table, x))
    judge = deviation <= 0.2 / log(x) ** 3

    return judge
