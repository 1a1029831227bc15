# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-02
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Base methods.
"""


from typing import Any, NoReturn
from reykit.rbase import Base, Exit, throw


__all__ = (
    'SiegelBase',
    'SiegelExit',
    'SiegelExitCLI',
    'InvalidArgumentError',
    'UnsupportedDomainError',
    'PoleError',
    'ConvergenceError',
    'CertificationError',
    'exit_cli'
)


class SiegelBase(Base):
    """
    Siegel margin base type.
    """


class SiegelExit(SiegelBase, Exit):
    """
    Siegel margin exit type.
    """


class SiegelExitCLI(SiegelExit, SystemExit):
    """
    Siegel margin exit command line type.
    """


    def __init__(self, code: int, text: str) -> None:
        """
        Build instance attributes.

        Parameters
        ----------
        code : Process exit status.
        text : Explain text.
        """

        # Build.
        SystemExit.__init__(self, code)
        self.text = text


class InvalidArgumentError(SiegelBase, ValueError):
    """
    Invalid argument error type.
    """


class UnsupportedDomainError(SiegelBase, ValueError):
    """
    Argument outside validated evaluation envelope error type.
    """


class PoleError(SiegelBase, ZeroDivisionError):
    """
    Evaluation at a pole error type.
    """


class ConvergenceError(SiegelBase, ArithmeticError):
    """
    Adaptive refinement not converged error type.
    """


    def __init__(self, text: str, partial: Any = None, errors: Any = None) -> None:
        """
        Build instance attributes.

        Parameters
        ----------
        text : Explain text.
        partial : Partial values reached before giving up.
        errors : Error estimates of partial values.
        """

        # Build.
        super().__init__(text)
        self.partial = partial
        self.errors = errors


class CertificationError(SiegelBase, AssertionError):
    """
    Inequality chain link failed error type.
    """


    def __init__(self, link: str, value: float, bound: float, at: Any = None) -> None:
        """
        Build instance attributes.

        Parameters
        ----------
        link : Name of failed link.
        value : Computed value of link.
        bound : Stated bound of link.
        at : Evaluation point.
        """

        # Build.
        text = f'link "{link}" failed: value {value!r} against bound {bound!r}'
        if at is not None:
            text += f' at {at!r}'
        super().__init__(text)
        self.link = link
        self.value = value
        self.bound = bound
        self.at = at


def exit_cli(code: int = 1, text: str | None = None) -> NoReturn:
    """
    Throw exception to exit command line.

    Parameters
    ----------
    code : Exit status.
        - `1`: Verification failure.
        - `2`: Invalid configuration, or a pole or non converged computation.
    text : Explain text.
        `None`: Use Default text.
    """

    # Parameter.
    if code not in (1, 2):
        throw(ValueError, code)
    if text is None:
        text = 'verification failed' if code == 1 else 'invalid configuration'

    # Throw exception.
    raise SiegelExitCLI(code, text)
