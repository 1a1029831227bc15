# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-09
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Shared test fixtures.
"""


import pytest

from siegelmargin.sprime import PrimePowerTable, MertensConstants, build_prime_power_table
from siegelmargin.scli import CERTIFY_TABLE_LIMIT


@pytest.fixture(scope='session')
def table() -> PrimePowerTable:
    """
    Prime power table covering every computer check.
    """

    return build_prime_power_table(CERTIFY_TABLE_LIMIT)


@pytest.fixture(scope='session')
def small_table() -> PrimePowerTable:
    """
    Prime power table to 1000.
    """

    return build_prime_power_table(1000)


@pytest.fixture(scope='session')
def constants() -> MertensConstants:
    """
    Mertens constants with tail tolerance `1e-9`.
    """

    return MertensConstants.build(1e-9)
