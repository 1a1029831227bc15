# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-06
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Case analysis lower bound and class number asymptotic methods.
"""


from typing import Any, Literal
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import ceil, e, exp, fsum, isqrt, log, pi, sqrt
import logging
import numpy as np
from numpy.typing import NDArray
from reykit.rbase import throw
from scipy.optimize import brentq

from .sbase import SiegelBase, InvalidArgumentError, CertificationError
from .sprime import PrimePowerTable, build_prime_power_table, prime_power_reciprocal_sum, sieve_primes
from .sreport import VerificationReport


__all__ = (
    'LOG_D_MIN',
    'CASE1_END',
    'CASE2_END',
    'CASE3_END',
    'CASE3_T_END',
    'CASE2_ELL',
    'CASE3_T_MIN',
    'BoundConstants',
    'ConstantAudit',
    'CaseParams',
    'BoundCurve',
    'sigma',
    'k0',
    't_from_logd',
    'logd_from_t',
    'error_term',
    'case2_error_term',
    'case1_bound',
    'case2_bound',
    'case2_corners',
    'case2_scan',
    'case3_chain',
    'case3_bound',
    'case3_corners',
    'case3_scan',
    'Theorem1Curves',
    'theorem1_curves',
    'theorem1_certificate',
    'omega_table',
    'sum_2w',
    'sum_2w_over_n',
    'squarefree_count',
    'invert_h_to_y',
    'theorem2_ratio',
    'check_theorem2'
)


logger = logging.getLogger(__name__)


LOG_D_MIN = log(3e8)
'Least `log d` of the case analysis.'
CASE1_END = 42.0
'Upper end of case one in `log d`.'
CASE2_END = 100.0
'Upper end of case two in `log d`.'
CASE3_T_END = 500.0
'Upper end of the certified case three scan in `t`.'
CASE3_END = 4 * CASE3_T_END + log(4)
'Upper end of the certified case three scan in `log d`.'
CASE2_ELL = 16
'Auxiliary functions value of case two.'
CASE3_T_MIN = 24.65
'Lower bound of `t` in case three.'
_ROUNDING = 1e-12


@dataclass(frozen=True)
class ConstantAudit(SiegelBase):
    """
    Rounded constant audit record type.
    """

    name: str
    'Constant name.'
    expression_value: float
    'Value of defining expression.'
    stored_value: float
    'Stored rounded value.'
    direction: Literal['upper', 'lower']
    'Whether stored value must bound expression from above or below.'
    rounding: bool = False
    'Whether stored value must also equal expression rounded to 3 decimals.'


    @property
    def direction_ok(self) -> bool:
        """
        Whether stored value bounds expression in the conservative direction.
        """

        # Judge.
        match self.direction:
            case 'upper':
                judge = self.stored_value >= self.expression_value - _ROUNDING
            case 'lower':
                judge = self.stored_value <= self.expression_value + _ROUNDING
        if self.rounding:
            judge = judge and round(self.expression_value, 3) == self.stored_value

        return judge


    @property
    def slack(self) -> float:
        """
        Signed distance in the conservative direction.
        """

        # Compute.
        diff = self.stored_value - self.expression_value
        value = diff if self.direction == 'upper' else -diff

        return value


    def to_dict(self) -> dict[str, Any]:
        """
        Convert to JSON dictionary.

        Returns
        -------
        Dictionary.
        """

        return {
            'name': self.name,
            'expression_value': self.expression_value,
            'stored_value': self.stored_value,
            'direction': self.direction,
            'direction_ok': self.direction_ok
        }


@dataclass(frozen=True)
class BoundConstants(SiegelBase):
    """
    Rounded constants of the case analysis type.
    """

    beta_min: float = 0.999
    'Lower bound of `beta^2`.'
    pi_frac: float = 0.523
    'Lower bound of `pi / ((3 - beta)(4 - beta))`.'
    assumption_const: float = 6.5
    'Assumed constant of `1 - beta <= c / sqrt d`.'
    j_coeff: float = 0.132
    'Line integral coefficient, twice `0.066`.'
    numerator_a: float = 20.984
    'Bound numerator constant.'
    numerator_b: float = 0.341
    'Bound numerator `log d` coefficient.'
    h_min: int = 101
    'Least class number.'
    d_min: float = 3e8
    'Least discriminant.'
    j_half: float = 0.066
    'Bound of `(0.354 + 1.067 / log d) / 2 pi`.'
    j_log_coeff: float = 0.354
    'Rounded `J1 + J3`.'
    j_unit_coeff: float = 1.067
    'Rounded `J2 + J4`.'
    case2_log_coeff: float = 0.022
    'Case two numerator `log d` coefficient.'
    case2_unit: float = 2.387
    'Bound of `1 + 2 log 2`.'
    case2_error: float = 0.469
    'Bound of `3.6 / (log 16)^2`.'
    case2_base: float = 2.856
    'Case two denominator constant.'
    case2_tail_coeff: float = 0.044
    'Bound of `11 / (101 sqrt(2 pi))`.'
    sigma16: float = 3.786
    'Bound of `sigma(16)`.'
    esigma16: float = 10.3
    'Bound of `e sigma(16)`.'
    case3_k0_floor: float = 15.3
    'Lower bound of `2t / log t` at least `t`.'
    case3_esigma: float = 0.778
    'Bound of `e sigma / k0` in case three.'
    case3_ratio: float = 1.401
    'Bound of `(1 + k0) / (1 + k0 - sigma)` in case three.'
    case3_tail_coeff: float = 0.016
    'Bound of `11 * 1.401 / (101 sqrt(32 pi))`.'
    case3_tail: float = 0.0003
    'Bound of case three tail term.'
    case3_main: float = 2.737
    'Bound of `1 + 2 log 2 + 3.6 / (log t)^2`.'
    case3_denominator: float = 2.738
    'Case three denominator constant.'
    case3_first: float = 7.663
    'Bound of `20.984 / 2.738`.'
    case3_second: float = 0.125
    'Bound of `0.341 / 2.738`.'


    def beta_floor(self) -> tuple[float, float]:
        """
        Recompute `beta^2` floor and `pi / ((3 - beta)(4 - beta))` at `beta = beta_min`.

        Returns
        -------
        Floor of `beta^2` and the fraction.
        """

        # Compute.
        floor = (1 - self.assumption_const / sqrt(self.d_min)) ** 2
        fraction = pi / ((3 - self.beta_min) * (4 - self.beta_min))

        return floor, fraction


    def audit(self) -> list[ConstantAudit]:
        """
        Re-derive every rounded constant from its expression.

        Returns
        -------
        Audit records.
        """

        # Parameter.
        scale = 396 / pi ** 2
        floor, fraction = self.beta_floor()
        log16 = log(CASE2_ELL)
        log_t = log(CASE3_T_MIN)
        derived_b = scale * self.j_coeff * self.assumption_const / self.h_min
        sigma16 = 2 * fsum(
            1 / value
            for value in build_prime_power_table(CASE2_ELL).values.tolist()
        )
        variation = max(1.75 + 0.2 / 13, 1.75 + 13 ** 2 / 1e4)

        # Build.
        records = [
            ConstantAudit('numerator_a', scale * self.pi_frac, self.numerator_a, 'lower', True),
            ConstantAudit('numerator_b', derived_b, self.numerator_b, 'upper', True),
            ConstantAudit('beta_min', floor, self.beta_min, 'lower'),
            ConstantAudit('pi_frac', fraction, self.pi_frac, 'lower'),
            ConstantAudit('j_half', (self.j_log_coeff + self.j_unit_coeff / log(self.d_min)) / (2 * pi), self.j_half, 'upper'),
            ConstantAudit('j_coeff', 2 * self.j_half, self.j_coeff, 'upper'),
            ConstantAudit('case1_at_42', self.numerator_a - self.numerator_b * CASE1_END, 6.6, 'lower'),
            ConstantAudit('eps_variation', variation, 1.8, 'upper'),
            ConstantAudit('case2_log_coeff', self.numerator_b / CASE2_ELL, self.case2_log_coeff, 'upper'),
            ConstantAudit('case2_unit', 1 + 2 * log(2), self.case2_unit, 'upper'),
            ConstantAudit('case2_error', 3.6 / log16 ** 2, self.case2_error, 'upper'),
            ConstantAudit('case2_base', self.case2_unit + self.case2_error, self.case2_base, 'upper'),
            ConstantAudit('case2_tail_coeff', 11 / (101 * sqrt(2 * pi)), self.case2_tail_coeff, 'upper'),
            ConstantAudit('sigma16', sigma16, self.sigma16, 'upper'),
            ConstantAudit('esigma16', e * self.sigma16, self.esigma16, 'upper'),
            ConstantAudit('case3_k0_floor', 2 * CASE3_T_MIN / log_t, self.case3_k0_floor, 'lower'),
            ConstantAudit('case3_esigma', e * log_t * (2 * log(log_t) + 2.07) / (2 * CASE3_T_MIN), self.case3_esigma, 'upper'),
            ConstantAudit('case3_ratio', 1 / (1 - self.case3_esigma / e), self.case3_ratio, 'upper'),
            ConstantAudit('case3_tail_coeff', 11 * self.case3_ratio / (101 * sqrt(32 * pi)), self.case3_tail_coeff, 'upper'),
            ConstantAudit('case3_tail', self.case3_tail_coeff * self.case3_esigma ** 16, self.case3_tail, 'upper'),
            ConstantAudit('case3_main', 1 + 2 * log(2) + 3.6 / log_t ** 2, self.case3_main, 'upper'),
            ConstantAudit('case3_denominator', self.case3_main + self.case3_tail, self.case3_denominator, 'upper'),
            ConstantAudit('case3_first', self.numerator_a / self.case3_denominator, self.case3_first, 'lower'),
            ConstantAudit('case3_second', self.numerator_b / self.case3_denominator, self.case3_second, 'upper'),
            ConstantAudit(
                'case3_final',
                self.case3_first - self.case3_second * (4 * CASE3_T_MIN + log(4)) / CASE3_T_MIN,
                7.0,
                'lower'
            ),
            ConstantAudit('lemma_h_sum', sum_2w_over_n(34), 9.161, 'upper'),
            ConstantAudit('lemma_h_chain', self.h_min / 11, 9.161, 'lower'),
            ConstantAudit('gamma_ratio', sqrt(0.5 * (1 + 2 / 12390)), 0.708, 'upper'),
            ConstantAudit('gamma_exp', exp(3 * pi), 12391, 'lower'),
            ConstantAudit('l_line_coeff', 0.708 / sqrt(pi), 0.4, 'upper')
        ]

        return records


    def check(self) -> None:
        """
        Raise on the first audit record in the wrong direction.
        """

        # Check.
        for record in self.audit():
            if not record.direction_ok:
                raise CertificationError(f'constant {record.name}', record.expression_value, record.stored_value)


@dataclass(frozen=True)
class CaseParams(SiegelBase):
    """
    Auxiliary function values type.
    """

    f: float
    'Auxiliary `f(d)`.'
    ell: float
    'Auxiliary `l(d)`.'
    logd: float
    'Natural log of `d`.'


    def __post_init__(self) -> None:
        """
        Check parameters.
        """

        # Check.
        if not self.f >= 1:
            throw(InvalidArgumentError, self.f)
        if not self.ell >= self.f:
            throw(InvalidArgumentError, self.ell)


    @property
    def k0(self) -> int:
        """
        Smooth number tail order.
        """

        return k0(self.logd, self.ell)


    def check_sigma(self, table: PrimePowerTable) -> float:
        """
        Check `1 + k0 > sigma`.

        Parameters
        ----------
        table : Prime power table.

        Returns
        -------
        Value of `sigma`.
        """

        # Check.
        value = sigma(table, self.ell)
        if not 1 + self.k0 > value:
            raise CertificationError('1 + k0 > sigma', 1 + self.k0, value, self.logd)

        return value


@dataclass(frozen=True)
class BoundCurve(SiegelBase):
    """
    Sampled lower bound curve type, columns ascending by `logd`.
    """

    logd: NDArray[np.float64]
    k0: NDArray[np.int64]
    sigma: NDArray[np.float64]
    bound: NDArray[np.float64]


    def __post_init__(self) -> None:
        """
        Check samples.
        """

        # Check.
        if not len(self.bound) or not np.all(np.isfinite(self.bound) & (self.bound > 0)):
            raise InvalidArgumentError('bound samples must be finite and positive')


    @property
    def min_bound(self) -> float:
        """
        Minimum sampled bound.
        """

        return float(self.bound.min())


    @property
    def argmin_logd(self) -> float:
        """
        Abscissa of minimum sampled bound.
        """

        return float(self.logd[np.argmin(self.bound)])


    def rows(self) -> Iterator[tuple[float, int, float, float]]:
        """
        Iterate `(logd, k0, sigma, bound)` rows.
        """

        yield from zip(self.logd.tolist(), self.k0.tolist(), self.sigma.tolist(), self.bound.tolist())


def sigma(table: PrimePowerTable, ell: float) -> float:
    """
    Twice sum of reciprocal prime powers not exceeding `ell`.

    Parameters
    ----------
    table : Prime power table.
    ell : Real point in `[2, table.limit]`.

    Returns
    -------
    Value.
    """

    # Check.
    if ell < 2 or ell > table.limit:
        throw(InvalidArgumentError, ell)

    return 2 * prime_power_reciprocal_sum(table, ell)


def k0(logd: float, ell: float) -> int:
    """
    Smooth number tail order `ceil(log(sqrt(d) / 2) / log ell)`.

    Parameters
    ----------
    logd : Natural log of `d`, above `log 4`.
    ell : Auxiliary value, above 1.

    Returns
    -------
    Order.
    """

    # Check.
    if not logd > log(4):
        throw(InvalidArgumentError, logd)
    if not ell > 1:
        throw(InvalidArgumentError, ell)

    return ceil((logd / 2 - log(2)) / log(ell))


def t_from_logd(logd: float) -> float:
    """
    Case three variable `t = 0.5 log(sqrt(d) / 2)`.
    """

    return 0.5 * (logd / 2 - log(2))


def logd_from_t(t: float) -> float:
    """
    Inverse of `t_from_logd`, `log d = 4t + log 4`.
    """

    return 4 * t + log(4)


def error_term(k: int, sigma_value: float, ell: float) -> float:
    """
    Error term bound `3.6 / (log ell)^2 + 11 (1 + k0) / (101 (1 + k0 - sigma)) (e sigma / k0)^k0 / sqrt(2 pi k0)`.

    Parameters
    ----------
    k : Order `k0`.
    sigma_value : Value of `sigma`.
    ell : Auxiliary value.

    Returns
    -------
    Bound.
    """

    # Check.
    if not 1 + k > sigma_value:
        raise CertificationError('1 + k0 > sigma', 1 + k, sigma_value)

    # Compute.
    tail = 11 * (1 + k) / (101 * (1 + k - sigma_value)) / sqrt(2 * pi * k) * (e * sigma_value / k) ** k
    value = 3.6 / log(ell) ** 2 + tail

    return value


def case2_error_term(k: int | NDArray[np.int64], constants: BoundConstants | None = None) -> float | NDArray[np.float64]:
    """
    Case two error term with stated constants, `0.469 + 0.044 (1 + k0) / (1 + k0 - 3.786) (10.3 / k0)^k0 / sqrt k0`.

    Parameters
    ----------
    k : Order `k0`, scalar or array.
    constants : Rounded constants.

    Returns
    -------
    Error term.
    """

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    k = np.asarray(k, dtype=np.float64)

    # Compute.
    value = constants.case2_error + constants.case2_tail_coeff * (1 + k) / (1 + k - constants.sigma16) / np.sqrt(k) * (constants.esigma16 / k) ** k
    if not value.ndim:
        value = float(value)

    return value


def case1_bound(logd: float, constants: BoundConstants | None = None) -> float:
    """
    Case one bound `20.984 - 0.341 log d`.

    Parameters
    ----------
    logd : Natural log of `d` in `[log 3e8, 42]`.
    constants : Rounded constants.

    Returns
    -------
    Lower bound of `(1 - beta) sqrt d`.
    """

    # Check.
    if not LOG_D_MIN <= logd <= CASE1_END:
        throw(InvalidArgumentError, logd)

    # Parameter.
    if constants is None:
        constants = BoundConstants()

    return constants.numerator_a - constants.numerator_b * logd


def _case2_values(
    logd: NDArray[np.float64],
    constants: BoundConstants,
    orders: NDArray[np.int64] | None = None
) -> tuple[NDArray[np.int64], NDArray[np.float64]]:
    """
    Vectorized case two order and bound.

    Parameters
    ----------
    logd : Natural logs of `d`.
    constants : Rounded constants.
    orders : Orders `k0`.
        - `None`: Compute from `logd`.

    Returns
    -------
    Orders and bounds.
    """

    # Compute.
    if orders is None:
        orders = np.ceil((logd / 2 - log(2)) / log(CASE2_ELL)).astype(np.int64)
    numerator = constants.numerator_a - constants.case2_log_coeff * logd
    denominator = constants.case2_base + case2_error_term(orders, constants) - constants.case2_error
    bounds = numerator / denominator

    return orders, bounds


def case2_bound(logd: float, table: PrimePowerTable, constants: BoundConstants | None = None) -> float:
    """
    Case two bound
    `(20.984 - 0.022 log d) / (2.856 + 0.044 (1 + k0) / (1 + k0 - 3.786) (10.3 / k0)^k0 / sqrt k0)`
    with `k0 = k0(log d, 16)`.

    Parameters
    ----------
    logd : Natural log of `d` in `(42, 100]`.
    table : Prime power table, checks `sigma(16) < 3.786`.
    constants : Rounded constants.

    Returns
    -------
    Lower bound of `(1 - beta) sqrt d`.
    """

    # Check.
    if not CASE1_END < logd <= CASE2_END:
        throw(InvalidArgumentError, logd)

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    value = CaseParams(CASE2_ELL, CASE2_ELL, logd).check_sigma(table)
    if not value < constants.sigma16:
        raise CertificationError('sigma(16) < 3.786', value, constants.sigma16, logd)

    # Compute.
    _, bounds = _case2_values(np.array([logd]), constants)

    return float(bounds[0])


def case2_corners(start: float = CASE1_END, stop: float = CASE2_END) -> list[float]:
    """
    Abscissas `log 4 + 2k log 16` where case two order changes from `k` to `k + 1`.

    Parameters
    ----------
    start : Range start, exclusive.
    stop : Range stop, inclusive.

    Returns
    -------
    Ascending corners in range.
    """

    # Compute.
    step = 2 * log(CASE2_ELL)
    first = ceil((start - log(4)) / step)
    corners = [
        log(4) + k * step
        for k in range(first, int((stop - log(4)) / step) + 1)
        if start < log(4) + k * step <= stop
    ]

    return corners


def case2_scan(
    grid_step: float,
    table: PrimePowerTable,
    start: float = CASE1_END,
    stop: float = CASE2_END,
    constants: BoundConstants | None = None
) -> BoundCurve:
    """
    Sample case two bound on `(start, stop]` with every order corner sampled one ulp either side,
    a corner itself takes the order on its left.

    Parameters
    ----------
    grid_step : Grid step in `log d`, in `(0, 0.01]`.
    table : Prime power table.
    start : Range start, exclusive, at least 42.
    stop : Range stop, inclusive, at most 100.
    constants : Rounded constants.

    Returns
    -------
    Bound curve.
    """

    # Check.
    if not 0 < grid_step <= 0.01:
        throw(InvalidArgumentError, grid_step)
    if not CASE1_END <= start < stop <= CASE2_END:
        throw(InvalidArgumentError, (start, stop))

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    sigma16 = CaseParams(CASE2_ELL, CASE2_ELL, stop).check_sigma(table)
    if not sigma16 < constants.sigma16:
        raise CertificationError('sigma(16) < 3.786', sigma16, constants.sigma16)

    # Grid.
    count = max(ceil((stop - start) / grid_step - 1e-9), 1)
    grid = start + grid_step * np.arange(1, count + 1)
    grid[-1] = stop
    points = [grid]
    corners = case2_corners(start, stop)
    for corner in corners:
        points.append(np.array([np.nextafter(corner, -np.inf), corner, np.nextafter(corner, np.inf)]))
    logd = np.unique(np.concatenate(points))
    logd = logd[(logd > start) & (logd <= stop)]

    # Order.
    orders = np.ceil((logd / 2 - log(2)) / log(CASE2_ELL)).astype(np.int64)
    step = 2 * log(CASE2_ELL)
    for corner in corners:
        k = round((corner - log(4)) / step)
        orders[(logd <= corner) & (orders > k)] = k
        orders[(logd > corner) & (orders <= k)] = k + 1

    # Evaluate.
    orders, bounds = _case2_values(logd, constants, orders)
    curve = BoundCurve(logd, orders, np.full(len(logd), sigma16), bounds)
    logger.debug('case two scan: %d samples, min %r at %r', len(logd), curve.min_bound, curve.argmin_logd)

    return curve


def case3_chain(t: float, table: PrimePowerTable, constants: BoundConstants | None = None) -> dict[str, float]:
    """
    Evaluate every link of the case three inequality chain with exact `sigma(t)`.

    Parameters
    ----------
    t : Case three variable, above 24.65.
    table : Prime power table, limit at least `t`.
    constants : Rounded constants.

    Returns
    -------
    Link values.
    """

    # Check.
    if not t > CASE3_T_MIN:
        throw(InvalidArgumentError, t)

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    logd = logd_from_t(t)
    order = k0(logd, t)
    sigma_value = sigma(table, t)

    # Compute.
    esigma = e * sigma_value / order
    ratio = (1 + order) / (1 + order - sigma_value)
    tail = 11 * ratio / (101 * sqrt(2 * pi * order)) * esigma ** order
    main = 1 + 2 * log(2) + 3.6 / log(t) ** 2
    chain = {
        't': t,
        'logd': logd,
        'k0': order,
        'sigma': sigma_value,
        'sigma_bound': 2 * log(log(t)) + 2.07,
        'esigma_over_k0': esigma,
        'ratio': ratio,
        'tail': tail,
        'denominator': main + tail,
        'bound': (constants.numerator_a - constants.numerator_b * logd / t) / constants.case3_denominator,
        'second_bound': constants.case3_first - constants.case3_second * logd / t
    }

    return chain


def case3_bound(t: float, table: PrimePowerTable, constants: BoundConstants | None = None) -> float:
    """
    Case three bound `(20.984 - 0.341 log d / t) / 2.738`, after certifying each link of the chain.

    Parameters
    ----------
    t : Case three variable, above 24.65.
    table : Prime power table.
    constants : Rounded constants.

    Returns
    -------
    Lower bound of `(1 - beta) sqrt d`.
    """

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    chain = case3_chain(t, table, constants)

    # Check.
    links = (
        ('k0 >= 16', 16, chain['k0'], 'lower'),
        ('sigma <= 2 log log t + 2.07', chain['sigma_bound'], chain['sigma'], 'upper'),
        ('e sigma / k0 < 0.778', constants.case3_esigma, chain['esigma_over_k0'], 'upper'),
        ('(1 + k0) / (1 + k0 - sigma) < 1.401', constants.case3_ratio, chain['ratio'], 'upper'),
        ('tail < 0.0003', constants.case3_tail, chain['tail'], 'upper'),
        ('denominator < 2.738', constants.case3_denominator, chain['denominator'], 'upper'),
        ('bound > second bound', chain['second_bound'], chain['bound'], 'lower'),
        ('second bound > 7', 7.0, chain['second_bound'], 'lower')
    )
    for link, bound, value, direction in links:
        held = value <= bound if direction == 'upper' else value >= bound
        if not held:
            raise CertificationError(link, value, bound, t)

    return chain['bound']


def case3_corners(t_min: float, t_max: float) -> list[float]:
    """
    Points `t` where `2t / log t` crosses an integer, located by Brent method.

    Parameters
    ----------
    t_min : Range start, above `e`.
    t_max : Range stop.

    Returns
    -------
    Ascending corners in `(t_min, t_max)`.
    """

    # Check.
    if not e < t_min < t_max:
        throw(InvalidArgumentError, (t_min, t_max))

    # Search.
    func = lambda t, k: 2 * t / log(t) - k
    corners = [
        brentq(func, t_min, t_max, args=(k,), xtol=1e-14, rtol=8.9e-16)
        for k in range(ceil(2 * t_min / log(t_min)), ceil(2 * t_max / log(t_max)))
        if func(t_min, k) < 0 < func(t_max, k)
    ]

    return corners


def case3_scan(
    table: PrimePowerTable,
    t_max: float | None = None,
    count: int = 2000,
    constants: BoundConstants | None = None
) -> tuple[BoundCurve | None, VerificationReport]:
    """
    Evaluate case three chain on a geometric `t` grid and at every order corner one ulp either side.

    Parameters
    ----------
    table : Prime power table, limit at least `t_max`.
    t_max : Range stop in `t`.
        - `None`: Use `CASE3_T_END`.
    count : Count of geometric grid points, at least 2.
    constants : Rounded constants.

    Returns
    -------
    Bound curve of certified points, `None` when no point certifies, and link report.
    """

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    if t_max is None:
        t_max = CASE3_T_END
    t_min = t_from_logd(CASE2_END)

    # Check.
    if not t_max > t_min:
        throw(InvalidArgumentError, t_max)
    if count < 2:
        throw(InvalidArgumentError, count)

    # Grid.
    points = [np.geomspace(t_min, t_max, count)]
    for corner in case3_corners(t_min, t_max):
        points.append(np.array([np.nextafter(corner, -np.inf), corner, np.nextafter(corner, np.inf)]))
    ts = np.unique(np.concatenate(points))
    ts = ts[(ts > CASE3_T_MIN) & (ts <= t_max)]

    # Evaluate.
    report = VerificationReport('case3', (logd_from_t(float(ts[0])), logd_from_t(float(ts[-1]))))
    rows = []
    for t in ts.tolist():
        logd = logd_from_t(t)
        try:
            bound = case3_bound(t, table, constants)
        except CertificationError as error:
            report.record(logd, error.link, -abs(error.value - error.bound))
            continue
        chain = case3_chain(t, table, constants)
        rows.append((logd, chain['k0'], chain['sigma'], bound))
        report.record(logd, 'bound > 7', bound - 7)
    report.extra = {'t_range': [float(ts[0]), float(ts[-1])], 'certified': len(rows), 'min_bound': None, 'argmin_logd': None}

    ## Empty.
    if not rows:
        logger.warning('case three scan: no point of %d certified', len(ts))
        return None, report

    # Curve.
    logd, orders, sigmas, bounds = (np.array(column) for column in zip(*rows))
    curve = BoundCurve(logd.astype(np.float64), orders.astype(np.int64), sigmas.astype(np.float64), bounds.astype(np.float64))

    # Monotone.
    steps = np.diff(curve.bound)
    report.record(curve.logd[-1], 'monotone', float(steps.min()) + _ROUNDING if len(steps) else 0.0, strict=False)
    report.extra['min_bound'] = curve.min_bound
    report.extra['argmin_logd'] = curve.argmin_logd

    return curve, report


@dataclass(frozen=True)
class Theorem1Curves(SiegelBase):
    """
    Sampled bounds of all three cases type.
    """

    case1_logd: NDArray[np.float64]
    'Case one abscissas, `log 3e8` to 42.'
    case1_bound: NDArray[np.float64]
    'Case one bounds `20.984 - 0.341 log d`.'
    case2: BoundCurve
    'Case two curve.'
    case3: BoundCurve | None
    'Case three curve of certified points.'
    case3_report: VerificationReport
    'Case three link report.'


    def rows(self) -> Iterator[tuple[float, int | None, float | None, float, str]]:
        """
        Iterate `(logd, k0, sigma, bound, case)` rows ascending by `logd`, case one rows carry no order and sigma.
        """

        for logd, bound in zip(self.case1_logd.tolist(), self.case1_bound.tolist()):
            yield logd, None, None, bound, 'case1'
        for row in self.case2.rows():
            yield *row, 'case2'
        if self.case3 is not None:
            for row in self.case3.rows():
                yield *row, 'case3'


def theorem1_curves(
    table: PrimePowerTable,
    grid_step: float = 1e-3,
    constants: BoundConstants | None = None,
    case3_count: int = 2000
) -> Theorem1Curves:
    """
    Sample the bound of every case over the certified `log d` range.

    Parameters
    ----------
    table : Prime power table, limit at least `CASE3_T_END`.
    grid_step : Grid step in `log d` of case one and two.
    constants : Rounded constants.
    case3_count : Count of geometric grid points of case three.

    Returns
    -------
    Curves.
    """

    # Parameter.
    if constants is None:
        constants = BoundConstants()

    # Case one.
    count = max(ceil((CASE1_END - LOG_D_MIN) / grid_step), 1)
    logd1 = np.linspace(LOG_D_MIN, CASE1_END, count + 1)
    bounds1 = constants.numerator_a - constants.numerator_b * logd1

    # Case two and three.
    curve2 = case2_scan(grid_step, table, constants=constants)
    curve3, report3 = case3_scan(table, count=case3_count, constants=constants)
    curves = Theorem1Curves(logd1, bounds1, curve2, curve3, report3)

    return curves


def theorem1_certificate(
    table: PrimePowerTable,
    grid_step: float = 1e-3,
    constants: BoundConstants | None = None,
    case3_count: int = 2000,
    curves: Theorem1Curves | None = None
) -> VerificationReport:
    """
    Certify `(1 - beta) sqrt d` exceeds the assumed constant over `log d` in `[log 3e8, CASE3_END]`.
    Seams at 42 and 100 take the larger of both adjacent cases.

    Parameters
    ----------
    table : Prime power table.
    grid_step : Grid step in `log d` of case one and two.
    constants : Rounded constants.
    case3_count : Count of geometric grid points of case three.
    curves : Sampled curves.
        - `None`: Sample with `theorem1_curves`.

    Returns
    -------
    Report, with minimum, location, margins and constant audit in `extra`.
    """

    # Parameter.
    if constants is None:
        constants = BoundConstants()
    if curves is None:
        curves = theorem1_curves(table, grid_step, constants, case3_count)
    threshold = constants.assumption_const
    report = VerificationReport('theorem1', (LOG_D_MIN, CASE3_END))

    # Audit.
    audit = constants.audit()
    for record in audit:
        if not record.direction_ok:
            report.record(0.0, f'constant {record.name}', -abs(record.slack) if record.slack else -1.0)

    # Case.
    report.record_many(curves.case1_logd, 'case1', curves.case1_bound - threshold)
    report.record_many(curves.case2.logd, 'case2', curves.case2.bound - threshold)
    report.failures.extend(curves.case3_report.failures)
    if curves.case3 is not None:
        report.record_many(curves.case3.logd, 'case3', curves.case3.bound - threshold)

    # Seam.
    seam42 = max(float(curves.case1_bound[-1]), float(_case2_values(np.array([CASE1_END]), constants)[1][0]))
    seam100 = float(curves.case2.bound[-1])
    try:
        seam100 = max(seam100, case3_bound(t_from_logd(CASE2_END), table, constants))
    except CertificationError as error:
        logger.warning('seam at log d = 100 without case three: %s', error)
    report.record(CASE1_END, 'seam', seam42 - threshold)
    report.record(CASE2_END, 'seam', seam100 - threshold)

    # Extra.
    minima = {
        'case1': (float(curves.case1_bound.min()), float(curves.case1_logd[np.argmin(curves.case1_bound)])),
        'case2': (curves.case2.min_bound, curves.case2.argmin_logd)
    }
    if curves.case3 is not None:
        minima['case3'] = (curves.case3.min_bound, curves.case3.argmin_logd)
    case, (min_bound, argmin) = min(minima.items(), key=lambda item: item[1][0])
    report.extra = {
        'range': [LOG_D_MIN, CASE3_END],
        'threshold': threshold,
        'min_bound': min_bound,
        'argmin': argmin,
        'argmin_case': case,
        'margins': {
            name: value - threshold
            for name, (value, _) in minima.items()
        },
        'case3_certified': curves.case3_report.extra['certified'],
        'constant_audit': [record.to_dict() for record in audit]
    }
    logger.info('theorem one certificate: min %r at log d = %r (%s)', min_bound, argmin, case)

    return report


@lru_cache(maxsize=8)
def omega_table(y: int) -> NDArray[np.int64]:
    """
    Count of distinct prime divisors of `0..y`.

    Parameters
    ----------
    y : Bound.

    Returns
    -------
    Counts.
    """

    # Sieve.
    counts = np.zeros(y + 1, dtype=np.int64)
    for p in sieve_primes(y).tolist():
        counts[p::p] += 1
    counts.flags.writeable = False

    return counts


def sum_2w(y: int) -> int:
    """
    Sum of `2^w(n)` over `n <= y`.

    Parameters
    ----------
    y : Positive integer.

    Returns
    -------
    Sum.
    """

    # Check.
    if y < 1:
        throw(InvalidArgumentError, y)

    return int(np.sum(np.left_shift(1, omega_table(y)[1:])))


def sum_2w_over_n(y: int) -> float:
    """
    Sum of `2^w(n) / n` over `n <= y`.

    Parameters
    ----------
    y : Positive integer.

    Returns
    -------
    Sum.
    """

    # Check.
    if y < 1:
        throw(InvalidArgumentError, y)

    # Sum.
    terms = np.left_shift(1, omega_table(y)[1:]) / np.arange(1, y + 1)
    value = fsum(terms.tolist())

    return value


def squarefree_count(y: int) -> int:
    """
    Count of squarefree `n <= y`.

    Parameters
    ----------
    y : Positive integer.

    Returns
    -------
    Count.
    """

    # Check.
    if y < 1:
        throw(InvalidArgumentError, y)

    # Sieve.
    squarefree = np.ones(y + 1, dtype=bool)
    squarefree[0] = False
    for p in sieve_primes(isqrt(y)).tolist():
        squarefree[p * p::p * p] = False

    return int(np.count_nonzero(squarefree))


def invert_h_to_y(h: int) -> int:
    """
    Unique `y` with `sum_2w(y - 1) < h <= sum_2w(y)`.

    Parameters
    ----------
    h : Positive integer.

    Returns
    -------
    Bound `y`.
    """

    # Check.
    if h < 1:
        throw(InvalidArgumentError, h)

    # Search.
    y = 64
    while True:
        prefix = np.cumsum(np.left_shift(1, omega_table(y)[1:]))
        if prefix[-1] >= h:
            break
        y *= 2

    return int(np.searchsorted(prefix, h, side='left')) + 1


def theorem2_ratio(h: int) -> float:
    """
    Empirical ratio `(6 / pi) (log h)^2 / sum_2w_over_n(y(h))`, tends to `2 pi`.

    Parameters
    ----------
    h : Class number, at least 101.

    Returns
    -------
    Ratio.
    """

    # Check.
    if h < 101:
        throw(InvalidArgumentError, h)

    # Compute.
    y = invert_h_to_y(h)
    ratio = 6 / pi * log(h) ** 2 / sum_2w_over_n(y)

    return ratio


def check_theorem2(h_grid: Sequence[int], y_grid: Sequence[int] = (10_000, 100_000, 1_000_000)) -> VerificationReport:
    """
    Check trend of `theorem2_ratio / 2 pi` toward 1 over ascending `h_grid`,
    and decrease of `|sum_2w(y) / (y log y) - 6 / pi^2|` over ascending `y_grid`.

    Parameters
    ----------
    h_grid : Ascending class numbers.
    y_grid : Ascending bounds.

    Returns
    -------
    Report, with rows in `extra`.
    """

    # Check.
    if len(h_grid) < 2 or list(h_grid) != sorted(h_grid):
        throw(InvalidArgumentError, h_grid)

    # Ratio.
    report = VerificationReport('theorem2', (float(h_grid[0]), float(h_grid[-1])))
    ratios = [theorem2_ratio(h) / (2 * pi) for h in h_grid]
    gaps = [abs(ratio - 1) for ratio in ratios]
    for h, previous, current in zip(h_grid[1:], gaps[:-1], gaps[1:]):
        report.record(h, 'ratio trend', previous - current)

    # Density.
    deviations = [abs(sum_2w(y) / (y * log(y)) - 6 / pi ** 2) for y in y_grid]
    for y, previous, current in zip(y_grid[1:], deviations[:-1], deviations[1:]):
        report.record(y, 'density trend', previous - current)
    report.extra = {
        'ratio_rows': [
            {'h': h, 'y': invert_h_to_y(h), 'ratio': ratio * 2 * pi, 'ratio_over_2pi': ratio}
            for h, ratio in zip(h_grid, ratios)
        ],
        'density_rows': [
            {'y': y, 'sum_2w': sum_2w(y), 'deviation': deviation}
            for y, deviation in zip(y_grid, deviations)
        ]
    }

    return report
