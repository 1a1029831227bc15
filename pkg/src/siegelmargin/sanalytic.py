# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-05
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Zeta evaluation and line integral constant methods.
"""


from typing import Any
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache
from heapq import heappop, heappush
from math import ceil, e, fsum, isfinite, log, pi, sqrt
import logging
import numpy as np
from numpy.typing import NDArray
from reykit.rbase import throw
from sympy import bernoulli, factorial

from .sbase import SiegelBase, InvalidArgumentError, UnsupportedDomainError, PoleError, ConvergenceError
from .sreport import VerificationReport


__all__ = (
    'GAMMA0',
    'GAMMA1',
    'J_REFERENCE',
    'ZetaEvaluator',
    'QuadratureSpec',
    'JValues',
    'zeta',
    'pole_product',
    'j_integrand',
    'j_tail_bound',
    'j_samples',
    'integrate',
    'compute_J',
    'rounded_bound_constants',
    'check_j_values',
    'partial_fraction_residual',
    'perron_kernel_weight',
    'zeta_line_bound',
    'zeta_critical_bound'
)


logger = logging.getLogger(__name__)


GAMMA0 = 0.5772156649015329
'Euler constant, Stieltjes constant of order zero.'
GAMMA1 = -0.0728158454836767
'Stieltjes constant of order one.'
J_REFERENCE = (0.19692, 0.45203, 0.15661, 0.61360)
'Published values of the four line integral constants.'
_POLE_RADIUS = 1e-2
_DUDEK_SHIFT = 14 / 5
_BETA_SQUARE = 0.999

# Gauss Kronrod 15 point nodes on [-1, 1], non negative half.
_XGK = np.array((
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000
))
_WGK = np.array((
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714
))
_WG = np.array((
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327
))
_NODES = np.concatenate((-_XGK[:-1], _XGK[::-1]))
_KRONROD = np.concatenate((_WGK[:-1], _WGK[::-1]))
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate((_WG, _WG[-2::-1]))


@lru_cache
def _bernoulli_coefficients(order: int) -> tuple[float, ...]:
    """
    Coefficients `B_2k / (2k)!` up to `2k = order`.

    Parameters
    ----------
    order : Even correction order.

    Returns
    -------
    Coefficients.
    """

    # Compute.
    coefficients = tuple(
        float(bernoulli(2 * k) / factorial(2 * k))
        for k in range(1, order // 2 + 1)
    )

    return coefficients


@dataclass(frozen=True)
class ZetaEvaluator(SiegelBase):
    """
    Euler Maclaurin zeta evaluator type, stateless.
    """

    min_terms: int = 50
    'Least count of direct terms.'
    terms_per_height: float = 10.0
    'Direct terms per unit of `|Im s|`.'
    bernoulli_order: int = 12
    'Highest Bernoulli correction order, even.'
    max_height: float = 1e4
    'Largest supported `|Im s|`.'


    def __post_init__(self) -> None:
        """
        Check parameters.
        """

        # Check.
        if self.min_terms < 1:
            throw(InvalidArgumentError, self.min_terms)
        if self.bernoulli_order < 2 or self.bernoulli_order % 2:
            throw(InvalidArgumentError, self.bernoulli_order)


    def terms(self, t: float) -> int:
        """
        Count of direct terms at height `t`.

        Parameters
        ----------
        t : Imaginary part.

        Returns
        -------
        Count.
        """

        return max(self.min_terms, ceil(self.terms_per_height * abs(t)))


    def __call__(self, s: complex) -> complex:
        """
        Evaluate zeta.

        Parameters
        ----------
        s : Complex point.

        Returns
        -------
        Value.
        """

        return zeta(s, self)


def zeta(s: complex, evaluator: ZetaEvaluator | None = None) -> complex:
    """
    Riemann zeta function by Euler Maclaurin summation.

    Parameters
    ----------
    s : Complex point, `Re s >= 0`, `|Im s| <= 1e4`, not `1`.
    evaluator : Evaluation policy.
        - `None`: Use default policy.

    Returns
    -------
    Value.
    """

    # Parameter.
    if evaluator is None:
        evaluator = ZetaEvaluator()
    s = complex(s)

    # Check.
    if s == 1:
        raise PoleError('zeta has a pole at s = 1')
    if s.real < 0 or abs(s.imag) > evaluator.max_height:
        raise UnsupportedDomainError(f'zeta evaluation outside validated envelope at s = {s!r}')

    # Direct.
    n = evaluator.terms(s.imag)
    logs = np.log(np.arange(1, n, dtype=np.float64))
    direct = complex(np.sum(np.exp(-s * logs)))

    # Remainder.
    power = complex(n) ** -s
    value = direct + n * power / (s - 1) + power / 2
    rising = s
    term_power = power / n
    for index, coefficient in enumerate(_bernoulli_coefficients(evaluator.bernoulli_order)):
        if index:
            rising *= (s + 2 * index - 1) * (s + 2 * index)
            term_power /= n * n
        value += coefficient * rising * term_power

    return value


def pole_product(t: float, evaluator: ZetaEvaluator | None = None) -> float:
    """
    Modulus `|t zeta(1 - it)|`, Laurent expansion near `t = 0`.

    Parameters
    ----------
    t : Real height.
    evaluator : Evaluation policy.

    Returns
    -------
    Modulus, `1` at `t = 0`.
    """

    # Near pole.
    if abs(t) < _POLE_RADIUS:
        value = sqrt((GAMMA0 * t) ** 2 + (1 + GAMMA1 * t * t) ** 2)
        return value

    # Direct.
    value = abs(t * zeta(complex(1, -t), evaluator))

    return value


def _denominator(t: float) -> float:
    """
    Common integrand denominator `sqrt((0.999 + t^2)(1 + t^2)(4 + t^2))`.
    """

    square = t * t

    return sqrt((_BETA_SQUARE + square) * (1 + square) * (4 + square))


def j_integrand(index: int, t: float, evaluator: ZetaEvaluator | None = None) -> float:
    """
    Pointwise integrand of line integral constant.

    Parameters
    ----------
    index : Constant index in `1..4`.
    t : Real height, at least 3 for index 3 and 4.
    evaluator : Evaluation policy.

    Returns
    -------
    Value.
    """

    # Check.
    if index not in (1, 2, 3, 4):
        throw(InvalidArgumentError, index)
    if index in (3, 4) and t < 3:
        throw(InvalidArgumentError, t)

    # Compute.
    dudek = log(e * (abs(t) + _DUDEK_SHIFT))
    match index:
        case 1:
            value = pole_product(t, evaluator) / (2 * pi * _denominator(t))
        case 2:
            value = pole_product(t, evaluator) * dudek / (2 * pi * _denominator(t))
        case 3:
            value = 0.6 / sqrt(2 * pi) * t * log(t) / _denominator(t)
        case 4:
            value = 0.6 / sqrt(2 * pi) * t * log(t) * dudek / _denominator(t)

    return value


def j_tail_bound(index: int, cutoff: float) -> float:
    """
    Closed form bound of integral over `[cutoff, inf)` for index 3 and 4,
    from numerator over `t^3`.

    Parameters
    ----------
    index : Constant index, 3 or 4.
    cutoff : Cutoff `T`, at least 3.

    Returns
    -------
    Bound.
    """

    # Check.
    if index not in (3, 4):
        throw(InvalidArgumentError, index)
    if cutoff < 3:
        throw(InvalidArgumentError, cutoff)

    # Compute.
    log_t = log(cutoff)
    single = (log_t + 1) / cutoff
    match index:
        case 3:
            bound = single
        case 4:
            bound = (1 + log(2)) * single + (log_t * log_t + 2 * log_t + 2) / cutoff
    bound *= 0.6 / sqrt(2 * pi)

    return bound


def j_samples(
    t_max: float = 50.0,
    count: int = 501,
    evaluator: ZetaEvaluator | None = None
) -> list[tuple[float, float, float, float | None, float | None]]:
    """
    Sample the four integrands on a uniform grid of `[0, t_max]` for plotting.

    Parameters
    ----------
    t_max : Grid stop, at least 3.
    count : Count of grid points, at least 2.
    evaluator : Evaluation policy.

    Returns
    -------
    Rows `(t, j1, j2, j3, j4)`, `j3` and `j4` are `None` below 3.
    """

    # Check.
    if not t_max >= 3:
        throw(InvalidArgumentError, t_max)
    if count < 2:
        throw(InvalidArgumentError, count)

    # Sample.
    rows = []
    for t in np.linspace(0.0, t_max, count).tolist():
        values = [
            j_integrand(index, t, evaluator) if index < 3 or t >= 3 else None
            for index in (1, 2, 3, 4)
        ]
        rows.append((t, *values))

    return rows


@dataclass(frozen=True)
class QuadratureSpec(SiegelBase):
    """
    Adaptive quadrature specification type.
    Tail over `[T, inf)` is mapped to `(0, 1]` by the fixed rule `t = T / u`.
    """

    abs_tolerance: float = 1e-8
    'Absolute tolerance per integral.'
    max_depth: int = 50
    'Largest bisection depth of a panel.'
    tail_cutoff: float = 1e3
    'Cutoff `T` of infinite integrals.'


    def __post_init__(self) -> None:
        """
        Check parameters.
        """

        # Check.
        if not self.abs_tolerance > 0:
            throw(InvalidArgumentError, self.abs_tolerance)
        if self.max_depth < 1:
            throw(InvalidArgumentError, self.max_depth)
        if not self.tail_cutoff >= 3:
            throw(InvalidArgumentError, self.tail_cutoff)


    def halved(self) -> 'QuadratureSpec':
        """
        Same specification with half tolerance.

        Returns
        -------
        Specification.
        """

        return QuadratureSpec(self.abs_tolerance / 2, self.max_depth, self.tail_cutoff)


    def to_dict(self) -> dict[str, Any]:
        """
        Convert to JSON dictionary.

        Returns
        -------
        Dictionary.
        """

        return {
            'abs_tolerance': self.abs_tolerance,
            'max_depth': self.max_depth,
            'tail_cutoff': self.tail_cutoff
        }


def _gk15(func: Callable[[NDArray[np.float64]], NDArray[np.float64]], left: float, right: float) -> tuple[float, float]:
    """
    Gauss Kronrod 15 point rule on one panel.

    Parameters
    ----------
    func : Vectorized integrand.
    left : Left endpoint.
    right : Right endpoint.

    Returns
    -------
    Kronrod value and error estimate `|K15 - G7|`.
    """

    # Evaluate.
    center = (left + right) / 2
    half = (right - left) / 2
    values = func(center + half * _NODES)
    kronrod = half * float(np.dot(_KRONROD, values))
    gauss = half * float(np.dot(_GAUSS, values))

    return kronrod, abs(kronrod - gauss)


def integrate(
    func: Callable[[NDArray[np.float64]], NDArray[np.float64]],
    left: float,
    right: float,
    abs_tolerance: float,
    max_depth: int = 50
) -> tuple[float, float]:
    """
    Globally adaptive Gauss Kronrod 15 point quadrature, worst panel bisected first.

    Parameters
    ----------
    func : Vectorized integrand.
    left : Left endpoint.
    right : Right endpoint.
    abs_tolerance : Absolute tolerance of total error estimate.
    max_depth : Largest bisection depth of a panel.

    Returns
    -------
    Value and error estimate.
    """

    # Parameter.
    value, error = _gk15(func, left, right)
    heap = [(-error, left, right, 0, value)]

    # Refine.
    while True:
        errors = [-item[0] for item in heap]
        total_error = fsum(errors)
        if total_error <= abs_tolerance:
            break
        item = heappop(heap)
        _, a, b, depth, _ = item
        if depth >= max_depth:
            heappush(heap, item)
            panels = sorted(heap, key=lambda item: item[1])
            raise ConvergenceError(
                f'quadrature on [{left!r}, {right!r}] not converged within depth {max_depth}',
                fsum(item[4] for item in panels),
                total_error
            )
        middle = (a + b) / 2
        for sub_left, sub_right in ((a, middle), (middle, b)):
            sub_value, sub_error = _gk15(func, sub_left, sub_right)
            heappush(heap, (-sub_error, sub_left, sub_right, depth + 1, sub_value))

    # Sum.
    panels = sorted(heap, key=lambda item: item[1])
    value = fsum(item[4] for item in panels)

    return value, total_error


@dataclass(frozen=True)
class JValues(SiegelBase):
    """
    Line integral constants type.
    """

    J1: float
    J2: float
    J3: float
    J4: float
    error_estimates: tuple[float, float, float, float]
    'Quadrature error estimates of `J1..J4`.'
    tail_bounds: tuple[float, float] = field(default=(0.0, 0.0))
    'Closed form tail bounds of `J3`, `J4` beyond the cutoff.'


    @property
    def values(self) -> tuple[float, float, float, float]:
        """
        Four values in order.
        """

        return (self.J1, self.J2, self.J3, self.J4)


    def to_dict(self) -> dict[str, Any]:
        """
        Convert to JSON dictionary.

        Returns
        -------
        Dictionary.
        """

        # Convert.
        data = {
            f'J{index}': value
            for index, value in enumerate(self.values, 1)
        }
        for index, error in enumerate(self.error_estimates, 1):
            data[f'err{index}'] = error
        data['tail3'], data['tail4'] = self.tail_bounds

        return data


def compute_J(
    spec: QuadratureSpec | None = None,
    evaluator: ZetaEvaluator | None = None,
    fold: bool = True
) -> JValues:
    """
    Compute four line integral constants.

    Parameters
    ----------
    spec : Quadrature specification.
        - `None`: Use default specification.
    evaluator : Zeta evaluation policy.
    fold : Whether integrate even integrands over `[0, 3]` and double.

    Returns
    -------
    Constants with error estimates.
    """

    # Parameter.
    if spec is None:
        spec = QuadratureSpec()
    tolerance = spec.abs_tolerance
    cutoff = spec.tail_cutoff
    values = []
    errors = []

    # Finite line.
    for index in (1, 2):
        func = lambda ts, index=index: np.array([j_integrand(index, t, evaluator) for t in ts.tolist()])
        if fold:
            value, error = integrate(func, 0.0, 3.0, tolerance / 2, spec.max_depth)
            value, error = 2 * value, 2 * error
        else:
            value, error = integrate(func, -3.0, 3.0, tolerance, spec.max_depth)
        values.append(value)
        errors.append(error)

    # Half line.
    for index in (3, 4):
        func = lambda ts, index=index: np.array([j_integrand(index, t) for t in ts.tolist()])
        mapped = lambda us, func=func: func(cutoff / us) * cutoff / (us * us)
        head, head_error = integrate(func, 3.0, cutoff, tolerance / 2, spec.max_depth)
        tail, tail_error = integrate(mapped, 0.0, 1.0, tolerance / 2, spec.max_depth)
        values.append(head + tail)
        errors.append(head_error + tail_error)
    j = JValues(*values, tuple(errors), (j_tail_bound(3, cutoff), j_tail_bound(4, cutoff)))
    logger.debug('J values %r', j.values)

    return j


def rounded_bound_constants(j: JValues) -> tuple[float, float]:
    """
    Round each constant up at the third decimal, then sum `J1 + J3` and `J2 + J4`.

    Parameters
    ----------
    j : Line integral constants.

    Returns
    -------
    Coefficients of `log d` and of `1`.
    """

    # Check.
    if not all(isfinite(value) for value in j.values):
        throw(InvalidArgumentError, j.values)

    # Round.
    thousandths = [ceil(value * 1000) for value in j.values]
    log_coeff = (thousandths[0] + thousandths[2]) / 1000
    unit_coeff = (thousandths[1] + thousandths[3]) / 1000

    return log_coeff, unit_coeff


def check_j_values(j: JValues, tolerance: float = 1e-5) -> VerificationReport:
    """
    Check constants against published digits, their ordering and rounded coefficients.

    Parameters
    ----------
    j : Line integral constants.
    tolerance : Allowed deviation from published value.

    Returns
    -------
    Report.
    """

    # Parameter.
    report = VerificationReport('j-values', (1, 4))

    # Values.
    for index, (value, reference) in enumerate(zip(j.values, J_REFERENCE), 1):
        report.record(index, f'J{index}', tolerance - abs(value - reference), strict=False)
    report.record(2, 'J2 - J1', j.J2 - j.J1)
    report.record(4, 'J4 - J3', j.J4 - j.J3)

    # Rounding.
    log_coeff, unit_coeff = rounded_bound_constants(j)
    report.record(1, 'round(J1 + J3) = 0.354', 1.0 if log_coeff == 0.354 else -abs(log_coeff - 0.354))
    report.record(2, 'round(J2 + J4) = 1.067', 1.0 if unit_coeff == 1.067 else -abs(unit_coeff - 1.067))
    chain = (log_coeff + unit_coeff / log(3e8)) / (2 * pi)
    report.record(3e8, 'coefficient < 0.066', 0.066 - chain)
    report.extra = {
        **j.to_dict(),
        'raw_log_coeff': j.J1 + j.J3,
        'raw_unit_coeff': j.J2 + j.J4,
        'rounded': [log_coeff, unit_coeff],
        'coefficient': chain
    }

    return report


def partial_fraction_residual(s: complex) -> float:
    """
    Residual of `1 / (s (s + 2) (s + 3)) = 1 / 6s - 1 / 2(s + 2) + 1 / 3(s + 3)`.

    Parameters
    ----------
    s : Complex point, not a pole.

    Returns
    -------
    Absolute residual.
    """

    # Check.
    if s in (0, -2, -3):
        throw(InvalidArgumentError, s)

    # Compute.
    lhs = 1 / (s * (s + 2) * (s + 3))
    rhs = 1 / (6 * s) - 1 / (2 * (s + 2)) + 1 / (3 * (s + 3))
    residual = abs(lhs - rhs)

    return residual


def perron_kernel_weight(y: float) -> float:
    """
    Weight `1/6 - y^-2 / 2 + y^-3 / 3` of the kernel `1 / (s (s + 2) (s + 3))` for `y >= 1`, zero below.

    Parameters
    ----------
    y : Positive ratio.

    Returns
    -------
    Weight in `[0, 1/6)`.
    """

    # Check.
    if not y > 0:
        throw(InvalidArgumentError, y)

    # Compute.
    if y < 1:
        return 0.0
    weight = 1 / 6 - y ** -2 / 2 + y ** -3 / 3

    return weight


def zeta_line_bound(t: float, evaluator: ZetaEvaluator | None = None) -> tuple[float, float]:
    """
    Modulus `|zeta(1 + it)|` against bound `3/4 log |t|`.

    Parameters
    ----------
    t : Real height, `|t| >= 3`.
    evaluator : Evaluation policy.

    Returns
    -------
    Modulus and bound.
    """

    # Check.
    if abs(t) < 3:
        throw(InvalidArgumentError, t)

    # Compute.
    value = abs(zeta(complex(1, t), evaluator))
    bound = 0.75 * log(abs(t))

    return value, bound


def zeta_critical_bound(t: float, evaluator: ZetaEvaluator | None = None) -> tuple[float, float]:
    """
    Modulus `|zeta(it)|` against bound `3 / sqrt(32 pi) sqrt|t| log |t|`.

    Parameters
    ----------
    t : Real height, `|t| >= 3`.
    evaluator : Evaluation policy.

    Returns
    -------
    Modulus and bound.
    """

    # Check.
    if abs(t) < 3:
        throw(InvalidArgumentError, t)

    # Compute.
    value = abs(zeta(complex(0, t), evaluator))
    bound = 3 / sqrt(32 * pi) * sqrt(abs(t)) * log(abs(t))

    return value, bound
