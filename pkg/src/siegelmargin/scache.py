# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-03
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Prime power table binary cache methods.
"""


from os import environ, makedirs
import logging
import numpy as np
from numpy.typing import NDArray
from reykit.rbase import throw
from reykit.ros import File, Folder

from .sbase import InvalidArgumentError
from .sprime import PrimePowerTable, build_prime_power_table, kahan_cumsum


__all__ = (
    'MAGIC',
    'CACHE_ENV',
    'dump_table',
    'load_table',
    'get_cache_dir',
    'cached_table'
)


logger = logging.getLogger(__name__)


MAGIC = b'PPT1'
'Cache file magic bytes.'
CACHE_ENV = 'SIEGEL_MARGIN_CACHE'
'Environment variable naming the cache directory.'
_HEADER = np.dtype([('limit', '<u8'), ('count', '<u8')])
_RECORD = np.dtype([('value', '<u8'), ('cumulative', '<f8')])


def dump_table(table: PrimePowerTable) -> bytes:
    """
    Encode table to cache bytes.

    Parameters
    ----------
    table : Prime power table.

    Returns
    -------
    Bytes, magic then little endian limit, count and `(value, cumulative)` records.
    """

    # Build.
    header = np.array([(table.limit, len(table))], dtype=_HEADER)
    records = np.empty(len(table), dtype=_RECORD)
    records['value'] = table.values
    records['cumulative'] = table.cumulative
    data = MAGIC + header.tobytes() + records.tobytes()

    return data


def _decompose(values: NDArray[np.int64]) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    """
    Decompose prime powers into base and exponent by integer roots.

    Parameters
    ----------
    values : Prime powers.

    Returns
    -------
    Primes and exponents.
    """

    # Parameter.
    primes = values.copy()
    alphas = np.ones(len(values), dtype=np.int64)
    if not len(values):
        return primes, alphas
    top = int(values.max()).bit_length()

    # Search.
    for alpha in range(top, 1, -1):
        roots = np.round(values.astype(np.float64) ** (1 / alpha)).astype(np.int64)
        for shift in (-1, 0, 1):
            bases = roots + shift
            hit = (alphas == 1) & (bases > 1) & (bases ** alpha == values)
            primes[hit] = bases[hit]
            alphas[hit] = alpha

    return primes, alphas


def load_table(data: bytes) -> PrimePowerTable:
    """
    Decode table from cache bytes.

    Parameters
    ----------
    data : Cache bytes.

    Returns
    -------
    Prime power table.
    """

    # Check.
    if len(data) < 4 + _HEADER.itemsize or data[:4] != MAGIC:
        raise InvalidArgumentError('cache header not "PPT1"')
    header = np.frombuffer(data, dtype=_HEADER, count=1, offset=4)[0]
    limit, count = int(header['limit']), int(header['count'])
    if len(data) != 4 + _HEADER.itemsize + count * _RECORD.itemsize:
        raise InvalidArgumentError(f'cache size not match count {count}')

    # Decode.
    records = np.frombuffer(data, dtype=_RECORD, count=count, offset=4 + _HEADER.itemsize)
    values = records['value'].astype(np.int64)
    cumulative = records['cumulative'].astype(np.float64)
    primes, alphas = _decompose(values)
    reciprocals = np.where(alphas == 1, 1.0 / values.astype(np.float64), 0.0)
    prime_cumulative = kahan_cumsum(reciprocals)
    table = PrimePowerTable(limit, values, primes, alphas, cumulative, prime_cumulative)

    return table


def get_cache_dir() -> str | None:
    """
    Get cache directory from environment.

    Returns
    -------
    Directory path, `None` when unset.
    """

    # Get.
    path = environ.get(CACHE_ENV) or None

    return path


def cached_table(limit: int, cache_dir: str | None = None) -> PrimePowerTable:
    """
    Get table through the binary cache, build and store when absent.

    Parameters
    ----------
    limit : Sieve bound.
    cache_dir : Cache directory.
        - `None`: Use environment variable `SIEGEL_MARGIN_CACHE`, no cache when unset.

    Returns
    -------
    Prime power table.
    """

    # Check.
    if limit < 2:
        throw(InvalidArgumentError, limit)

    # Parameter.
    if cache_dir is None:
        cache_dir = get_cache_dir()
    if cache_dir is None:
        return build_prime_power_table(limit)
    makedirs(cache_dir, exist_ok=True)
    folder = Folder(cache_dir)
    file = File(folder + f'ppt_{limit}.bin')

    # Load.
    if file:
        try:
            table = load_table(file.bytes)
        except InvalidArgumentError:
            logger.warning('cache file "%s" invalid, rebuild', file.path)
        else:
            if table.limit == limit:
                logger.debug('prime power table loaded from "%s"', file.path)
                return table

    # Store.
    table = build_prime_power_table(limit)
    file(dump_table(table))
    logger.debug('prime power table stored to "%s"', file.path)

    return table
