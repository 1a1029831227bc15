# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-09
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Prime power table binary cache test methods.
"""


import numpy as np
import pytest

from siegelmargin.sbase import InvalidArgumentError
from siegelmargin.sprime import build_prime_power_table
from siegelmargin.scache import CACHE_ENV, MAGIC, cached_table, dump_table, get_cache_dir, load_table


def test_dump_load(small_table) -> None:
    data = dump_table(small_table)
    assert data[:4] == MAGIC
    assert len(data) == 4 + 16 + 16 * len(small_table)
    table = load_table(data)
    assert table.limit == small_table.limit
    np.testing.assert_array_equal(table.values, small_table.values)
    np.testing.assert_array_equal(table.primes, small_table.primes)
    np.testing.assert_array_equal(table.alphas, small_table.alphas)
    np.testing.assert_array_equal(table.cumulative, small_table.cumulative)
    np.testing.assert_allclose(table.prime_cumulative, small_table.prime_cumulative, rtol=0, atol=1e-15)


def test_decompose_large_powers() -> None:
    table = load_table(dump_table(build_prime_power_table(2 ** 20)))
    index = int(np.searchsorted(table.values, 2 ** 20))
    assert table.primes[index] == 2
    assert table.alphas[index] == 20
    index = int(np.searchsorted(table.values, 3 ** 12))
    assert table.primes[index] == 3
    assert table.alphas[index] == 12


def test_load_invalid(small_table) -> None:
    data = dump_table(small_table)
    with pytest.raises(InvalidArgumentError):
        load_table(b'PPT0' + data[4:])
    with pytest.raises(InvalidArgumentError):
        load_table(data[:-1])
    with pytest.raises(InvalidArgumentError):
        load_table(MAGIC)


def test_cached_table(tmp_path) -> None:
    path = tmp_path / 'cache'
    first = cached_table(1000, str(path))
    file = path / 'ppt_1000.bin'
    assert file.is_file()
    assert file.read_bytes() == dump_table(first)
    second = cached_table(1000, str(path))
    np.testing.assert_array_equal(second.values, first.values)
    np.testing.assert_array_equal(second.cumulative, first.cumulative)


def test_cached_table_rebuild_invalid(tmp_path) -> None:
    (tmp_path / 'ppt_1000.bin').write_bytes(b'broken')
    table = cached_table(1000, str(tmp_path))
    assert len(table) == len(build_prime_power_table(1000))
    assert (tmp_path / 'ppt_1000.bin').read_bytes()[:4] == MAGIC


def test_cache_environment(tmp_path, monkeypatch) -> None:
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert get_cache_dir() == str(tmp_path)
    cached_table(100)
    assert (tmp_path / 'ppt_100.bin').is_file()

    monkeypatch.delenv(CACHE_ENV)
    assert get_cache_dir() is None
    table = cached_table(50)
    assert table.limit == 50
    assert not (tmp_path / 'ppt_50.bin').exists()
