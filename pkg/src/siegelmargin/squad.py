# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-04
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Imaginary quadratic field arithmetic methods.
"""


from dataclasses import dataclass, field
from math import fsum, isqrt, pi, sqrt
from threading import Lock
import logging
import numpy as np
from numpy.typing import NDArray
from reykit.rbase import throw
from scipy.special import digamma

from .sbase import SiegelBase, InvalidArgumentError
from .sprime import factorize, sieve_primes
from .sreport import VerificationReport


__all__ = (
    'LEMMA_H_D_MIN',
    'LEMMA_H_H_MIN',
    'is_fundamental',
    'kronecker',
    'FundamentalDiscriminant',
    'KroneckerChar',
    'NuOracle',
    'ReducedFormSet',
    'nu',
    'nu_bruteforce',
    'reduced_forms',
    'nu_reciprocal_sum',
    'ideal_norm_reciprocal_sum',
    'ideal_count_coefficient',
    'check_nu_oracle',
    'check_dedekind',
    'check_lemma_h',
    'lemma_h_chain',
    'lemma_h_sample',
    'check_class_number_formula'
)


logger = logging.getLogger(__name__)


LEMMA_H_D_MIN = 300_000_000
'Discriminant bound of ideal norm sum lemma.'
LEMMA_H_H_MIN = 101
'Class number bound of ideal norm sum lemma.'
_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)
'Kronecker symbol `(a/2)` by `a mod 8`.'


def _is_squarefree(n: int) -> bool:
    """
    Whether integer is squarefree.

    Parameters
    ----------
    n : Positive integer.

    Returns
    -------
    Judge.
    """

    # Judge.
    judge = all(
        exponent == 1
        for exponent in factorize(n).values()
    )

    return judge


def is_fundamental(D: int) -> bool:
    """
    Whether negative integer is a fundamental discriminant.

    Parameters
    ----------
    D : Negative integer.

    Returns
    -------
    Judge.
    """

    # Check.
    if D >= 0:
        throw(InvalidArgumentError, D)

    # Judge.
    d = -D
    match d % 4:
        case 3:
            judge = _is_squarefree(d)
        case 0:
            m = d // 4
            judge = m % 4 in (1, 2) and _is_squarefree(m)
        case _:
            judge = False

    return judge


def kronecker(D: int, n: int) -> int:
    """
    Kronecker symbol `(D/n)` by Jacobi symbol reduction.

    Parameters
    ----------
    D : Integer.
    n : Integer.

    Returns
    -------
    Symbol value in `{-1, 0, 1}`.
    """

    # Zero.
    if n == 0:
        return 1 if abs(D) == 1 else 0
    if D % 2 == 0 and n % 2 == 0:
        return 0

    # Two.
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    k = _TAB2[D & 7] if v % 2 else 1

    # Sign.
    if n < 0:
        n = -n
        if D < 0:
            k = -k

    # Reciprocity.
    a, b = D % n, n
    while a:
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2:
            k *= _TAB2[b & 7]
        if a & b & 2:
            k = -k
        a, b = b % a, a
    k = k if b == 1 else 0

    return k


@dataclass(frozen=True)
class FundamentalDiscriminant(SiegelBase):
    """
    Fundamental discriminant type, holds `d` with `-d` fundamental.
    """

    d: int
    'Absolute value of discriminant.'


    def __post_init__(self) -> None:
        """
        Check discriminant.
        """

        # Check.
        if self.d < 3 or not is_fundamental(-self.d):
            raise InvalidArgumentError(f'-{self.d} is not a fundamental discriminant')


    @property
    def D(self) -> int:
        """
        Signed discriminant.
        """

        return -self.d


    @property
    def units(self) -> int:
        """
        Count of units of the ring of integers.
        """

        # Get.
        match self.d:
            case 3:
                count = 6
            case 4:
                count = 4
            case _:
                count = 2

        return count


def _as_discriminant(d: 'int | FundamentalDiscriminant') -> FundamentalDiscriminant:
    """
    Convert to fundamental discriminant.

    Parameters
    ----------
    d : Absolute value or instance.

    Returns
    -------
    Instance.
    """

    # Convert.
    if not isinstance(d, FundamentalDiscriminant):
        d = FundamentalDiscriminant(d)

    return d


@dataclass(frozen=True)
class KroneckerChar(SiegelBase):
    """
    Real primitive character `n -> (-d/n)` type.
    """

    discriminant: FundamentalDiscriminant
    'Fundamental discriminant.'


    def __call__(self, n: int) -> int:
        """
        Character value.

        Parameters
        ----------
        n : Integer.

        Returns
        -------
        Value in `{-1, 0, 1}`.
        """

        return kronecker(self.discriminant.D, n)


    def prime_value(self, p: int) -> int:
        """
        Character value at prime, by Euler criterion for odd prime.

        Parameters
        ----------
        p : Prime.

        Returns
        -------
        Value in `{-1, 0, 1}`.
        """

        # Parameter.
        d = self.discriminant.d

        # Two.
        if p == 2:
            return _TAB2[-d & 7]

        # Odd.
        residue = pow(-d % p, (p - 1) // 2, p)
        value = -1 if residue == p - 1 else residue

        return value


    def table(self, length: int) -> NDArray[np.int64]:
        """
        Character values at `0..length-1` by completely multiplicative fill.

        Parameters
        ----------
        length : Count of values.

        Returns
        -------
        Values.
        """

        # Parameter.
        values = np.ones(length, dtype=np.int64)
        if length:
            values[0] = 0

        # Fill.
        for p in sieve_primes(length - 1).tolist():
            value = self.prime_value(p)
            if value == 1:
                continue
            power = p
            while power < length:
                values[power::power] *= value
                power *= p

        return values


@dataclass(eq=False)
class NuOracle(SiegelBase):
    """
    Ideal norm representation count type, `nu(a)` counts ideals of norm `a` not divisible by any rational integer above 1.
    """

    discriminant: FundamentalDiscriminant
    'Fundamental discriminant.'
    cache: dict[int, int] = field(default_factory=dict, repr=False)
    'Computed values.'
    _lock: Lock = field(default_factory=Lock, repr=False)


    def __post_init__(self) -> None:
        """
        Build character.
        """

        # Build.
        self.discriminant = _as_discriminant(self.discriminant)
        self.chi = KroneckerChar(self.discriminant)


    def table(self, length: int) -> NDArray[np.int64]:
        """
        Values at `0..length-1` by multiplicative sieve.

        Parameters
        ----------
        length : Count of values.

        Returns
        -------
        Values, zero at `0`.
        """

        # Parameter.
        d = self.discriminant.d
        values = np.ones(length, dtype=np.int64)
        if length:
            values[0] = 0

        # Sieve.
        for p in sieve_primes(length - 1).tolist():
            if d % p == 0:
                values[p * p::p * p] = 0
                continue
            match self.chi.prime_value(p):
                case 1:
                    values[p::p] *= 2
                case -1:
                    values[p::p] = 0

        return values


def nu(oracle: NuOracle, a: int) -> int:
    """
    Ideal norm representation count by factorization.

    Parameters
    ----------
    oracle : Representation count oracle.
    a : Positive integer.

    Returns
    -------
    Count.
    """

    # Check.
    if a < 1:
        throw(InvalidArgumentError, a)

    # Cache.
    with oracle._lock:
        value = oracle.cache.get(a)
    if value is not None:
        return value

    # Compute.
    d = oracle.discriminant.d
    value = 1
    for p, alpha in factorize(a).items():
        if d % p == 0:
            value *= 1 if alpha == 1 else 0
        else:
            value *= 1 + oracle.chi.prime_value(p)
    with oracle._lock:
        oracle.cache[a] = value

    return value


def nu_bruteforce(d: int, a: int) -> int:
    """
    Count `b` in `(-a, a]` with `b^2 = -d (mod 4a)`.

    Parameters
    ----------
    d : Absolute value of discriminant.
    a : Positive integer.

    Returns
    -------
    Count.
    """

    # Check.
    if a < 1:
        throw(InvalidArgumentError, a)

    # Count.
    b = np.arange(-a + 1, a + 1, dtype=np.int64)
    count = int(np.count_nonzero((b * b + d) % (4 * a) == 0))

    return count


@dataclass(frozen=True)
class ReducedFormSet(SiegelBase):
    """
    Reduced binary quadratic forms type, sorted by `(a, b)`.
    """

    discriminant: FundamentalDiscriminant
    'Fundamental discriminant.'
    forms: tuple[tuple[int, int, int], ...]
    'Forms `(a, b, c)` with `b^2 - 4ac = -d`.'


    @property
    def class_number(self) -> int:
        """
        Count of reduced forms.
        """

        return len(self.forms)


    def to_dict(self) -> dict:
        """
        Convert to JSON dictionary.

        Returns
        -------
        Dictionary.
        """

        # Convert.
        data = {
            'd': self.discriminant.d,
            'h': self.class_number,
            'forms': [list(form) for form in self.forms]
        }

        return data


def reduced_forms(d: int | FundamentalDiscriminant) -> ReducedFormSet:
    """
    Enumerate reduced forms, outer loop over `b`, inner over divisors of `(b^2 + d) / 4`.

    Parameters
    ----------
    d : Fundamental discriminant.

    Returns
    -------
    Form set.
    """

    # Parameter.
    discriminant = _as_discriminant(d)
    d = discriminant.d
    forms = []

    # Enumerate.
    for b in range(d % 2, isqrt(d // 3) + 1, 2):
        n = (b * b + d) // 4
        candidates = np.arange(max(b, 1), isqrt(n) + 1, dtype=np.int64)
        for a in candidates[n % candidates == 0].tolist():
            c = n // a
            forms.append((a, b, c))
            if 0 < b < a < c:
                forms.append((a, -b, c))
    forms.sort(key=lambda form: (form[0], form[1]))
    form_set = ReducedFormSet(discriminant, tuple(forms))
    logger.debug('h(-%d) = %d', d, form_set.class_number)

    return form_set


def nu_reciprocal_sum(oracle: NuOracle, x: float) -> float:
    """
    Sum of `nu(a) / a` over `a <= x`.

    Parameters
    ----------
    oracle : Representation count oracle.
    x : Real point, at least 1.

    Returns
    -------
    Sum.
    """

    # Check.
    if x < 1:
        throw(InvalidArgumentError, x)

    # Sum.
    length = int(x) + 1
    values = oracle.table(length)
    value = fsum((values[1:] / np.arange(1, length)).tolist())

    return value


def ideal_norm_reciprocal_sum(oracle: NuOracle, x: float) -> float:
    """
    Sum of `1 / N(a)` over ideals of norm at most `x`, as sum of `nu(a) / (u^2 a)` over `u^2 a <= x`.

    Parameters
    ----------
    oracle : Representation count oracle.
    x : Real point, at least 1.

    Returns
    -------
    Sum.
    """

    # Check.
    if x < 1:
        throw(InvalidArgumentError, x)

    # Parameter.
    bound = int(x)
    values = oracle.table(bound + 1)
    prefix = np.concatenate(([0.0], np.cumsum(values[1:] / np.arange(1, bound + 1))))

    # Sum.
    value = fsum(
        float(prefix[bound // (u * u)]) / (u * u)
        for u in range(1, isqrt(bound) + 1)
    )

    return value


def ideal_count_coefficient(d: int | FundamentalDiscriminant, n: int) -> int:
    """
    Count of ideals of norm `n`, sum of `chi(m)` over divisors `m` of `n`.

    Parameters
    ----------
    d : Fundamental discriminant.
    n : Positive integer.

    Returns
    -------
    Count.
    """

    # Check.
    if n < 1:
        throw(InvalidArgumentError, n)

    # Compute.
    chi = KroneckerChar(_as_discriminant(d))
    count = 1
    for p, exponent in factorize(n).items():
        value = chi.prime_value(p)
        count *= sum(value ** j for j in range(exponent + 1))

    return count


def check_nu_oracle(d: int | FundamentalDiscriminant, max_a: int) -> VerificationReport:
    """
    Check formula `nu` against congruence count brute force for all `a <= max_a`.

    Parameters
    ----------
    d : Fundamental discriminant.
    max_a : Largest checked `a`.

    Returns
    -------
    Report, with value rows in `extra`.
    """

    # Check.
    if max_a < 1:
        throw(InvalidArgumentError, max_a)

    # Parameter.
    oracle = NuOracle(_as_discriminant(d))
    d = oracle.discriminant.d
    report = VerificationReport('nu-oracle', (1, max_a))

    # Compare.
    rows = []
    for a in range(1, max_a + 1):
        formula = nu(oracle, a)
        brute = nu_bruteforce(d, a)
        rows.append((a, formula, brute))
        report.record(a, 'nu', 1.0 if formula == brute else -abs(formula - brute))
    report.extra = {'d': d, 'rows': rows}

    return report


def _dedekind_sides(d: int, max_n: int) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    """
    Both sides of coefficient identity for `n <= max_n`.

    Parameters
    ----------
    d : Fundamental discriminant.
    max_n : Largest `n`.

    Returns
    -------
    Sums of `nu(a)` over `u^2 a = n` and sums of `chi(m)` over divisors.
    """

    # Parameter.
    oracle = NuOracle(d)
    length = max_n + 1
    nu_values = oracle.table(length)
    chi_values = oracle.chi.table(length)

    # Decompose.
    lhs = np.zeros(length, dtype=np.int64)
    for u in range(1, isqrt(max_n) + 1):
        square = u * u
        lhs[square::square] += nu_values[1:max_n // square + 1]

    # Divisor sum.
    rhs = np.zeros(length, dtype=np.int64)
    for m in range(1, length):
        rhs[m::m] += chi_values[m]

    return lhs, rhs


def check_dedekind(d: int | FundamentalDiscriminant, max_n: int) -> VerificationReport:
    """
    Check Dedekind zeta coefficient identity, sum of `nu(a)` over `u^2 a = n` against sum of `chi(m)` over divisors.

    Parameters
    ----------
    d : Fundamental discriminant.
    max_n : Largest checked `n`.

    Returns
    -------
    Report.
    """

    # Check.
    if max_n < 1:
        throw(InvalidArgumentError, max_n)

    # Compare.
    discriminant = _as_discriminant(d)
    lhs, rhs = _dedekind_sides(discriminant, max_n)
    diff = np.abs(lhs[1:] - rhs[1:])
    report = VerificationReport('dedekind', (1, max_n))
    report.record_many(np.arange(1, max_n + 1), 'coefficient', np.where(diff == 0, 1.0, -diff.astype(np.float64)))
    report.extra = {'d': discriminant.d}

    return report


def check_lemma_h(d: int | FundamentalDiscriminant) -> VerificationReport:
    """
    Check ideal norm sum bounds below `sqrt(d) / 2`, `sum nu(a) / a <= h / 11` and `sum nu(a) <= h`.

    Parameters
    ----------
    d : Fundamental discriminant above `3e8` with class number at least 101.

    Returns
    -------
    Report, boundary case `4a^2 = d` flagged in `extra`.
    """

    # Check.
    discriminant = _as_discriminant(d)
    d = discriminant.d
    if d <= LEMMA_H_D_MIN:
        raise InvalidArgumentError(f'd = {d} not above {LEMMA_H_D_MIN}')
    h = reduced_forms(discriminant).class_number
    if h < LEMMA_H_H_MIN:
        raise InvalidArgumentError(f'h(-{d}) = {h} below {LEMMA_H_H_MIN}')

    # Sum.
    bound = isqrt(d) // 2
    values = NuOracle(discriminant).table(bound + 1)
    count = int(values.sum())
    total = fsum((values[1:] / np.arange(1, bound + 1)).tolist())

    # Record.
    report = VerificationReport('lemma-h', (1, bound))
    report.record(d, 'lemma-h', h / 11 - total)
    report.record(d, 'lemma-h-count', h - count, strict=False)
    report.extra = {
        'd': d,
        'h': h,
        'x': bound,
        'sum_nu': count,
        'sum_nu_over_a': total,
        'boundary': 4 * bound * bound == d
    }
    if report.extra['boundary']:
        logger.warning('norm %d equals sqrt(%d) / 2', bound, d)

    return report


def lemma_h_chain(h: int) -> tuple[float, float, bool]:
    """
    Final link of ideal norm sum lemma, `9.161 + (h - 101) / 35 <= h / 11`.

    Parameters
    ----------
    h : Class number, at least 101.

    Returns
    -------
    Left side, right side and judge.
    """

    # Check.
    if h < LEMMA_H_H_MIN:
        throw(InvalidArgumentError, h)

    # Compute.
    lhs = 9.161 + (h - LEMMA_H_H_MIN) / 35
    rhs = h / 11

    return lhs, rhs, lhs <= rhs


def lemma_h_sample(seed: int = 0, count: int = 10, upper: int = 1_000_000_000) -> list[int]:
    """
    Deterministic discriminant sample above `3e8`, smallest values then fixed seed draws.

    Parameters
    ----------
    seed : Random generator seed.
    count : Count of each part.
    upper : Bound of random draws.

    Returns
    -------
    Ascending distinct `d` values.
    """

    # Smallest.
    sample = []
    d = LEMMA_H_D_MIN + 1
    while len(sample) < count:
        if is_fundamental(-d):
            sample.append(d)
        d += 1

    # Random.
    rng = np.random.default_rng(seed)
    drawn = set()
    while len(drawn) < count:
        d = int(rng.integers(LEMMA_H_D_MIN + 1, upper))
        if d not in sample and is_fundamental(-d):
            drawn.add(d)
    sample = sorted(sample + list(drawn))

    return sample


def check_class_number_formula(d: int | FundamentalDiscriminant, terms: int = 1_000_000) -> VerificationReport:
    """
    Check `2 pi h / (w sqrt d)` against the truncated series of `L(1, chi)`.
    Tail bound `2M / (N + 1)` uses the maximal partial character sum `M` over one period, a heuristic bound.

    Parameters
    ----------
    d : Fundamental discriminant.
    terms : Truncation point `N`.

    Returns
    -------
    Report.
    """

    # Check.
    if terms < 1:
        throw(InvalidArgumentError, terms)

    # Parameter.
    discriminant = _as_discriminant(d)
    d = discriminant.d
    chi = KroneckerChar(discriminant).table(d)
    residues = np.arange(1, d)
    values = chi[1:]

    # Series.
    counts = np.where(residues <= terms, (terms - residues) // d + 1, 0)
    offsets = residues / d
    series = fsum((values * (digamma(counts + offsets) - digamma(offsets)) / d).tolist())
    partial = np.abs(np.cumsum(chi))
    tail = 2 * int(partial.max()) / (terms + 1)

    # Formula.
    h = reduced_forms(discriminant).class_number
    formula = 2 * pi * h / (discriminant.units * sqrt(d))

    # Record.
    report = VerificationReport('class-formula', (1, terms))
    report.record(d, 'L(1, chi)', tail + 1e-9 - abs(series - formula), strict=False)
    report.extra = {
        'd': d,
        'h': h,
        'series': series,
        'formula': formula,
        'tail_bound': tail,
        'tail_heuristic': True
    }

    return report
