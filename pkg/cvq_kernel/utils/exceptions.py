"""
Exceptions module.
"""
from __future__ import annotations

import typing

if typing.TYPE_CHECKING:
    import numpy as np


class CvqError(Exception):
    """
    Base class for all package errors.
    """


class InvalidArgumentError(CvqError, ValueError):
    """
    Raised when an argument violates the preconditions of an operation.
    """


class OverflowGuardError(InvalidArgumentError):
    """
    Raised when a squeezing parameter exceeds the safe dynamic range.
    """


class DegenerateInputError(CvqError, ValueError):
    """
    Raised when input data has no spread along a coordinate.
    """


class ConfigError(CvqError):
    """
    Raised when incontered errors parsing or validating a configuration.
    """


class StoreError(CvqError):
    """
    Raised when incontered errors persisting outputs.
    """


class ConvergenceError(CvqError):
    """
    Raised when the dual solver exhausts its iteration budget.

    The best iterate is kept on the exception so callers can inspect it.
    """

    def __init__(self, message: str, alpha: np.ndarray, iterations: int, gap: float) -> None:
        """
        Constructor.

        Parameters
        ----------
        message : str
            Error message.
        alpha : np.ndarray
            Best dual iterate reached.
        iterations : int
            Number of pair updates performed.
        gap : float
            Maximal KKT violation at the best iterate.
        """
        super().__init__(message)
        self.alpha = alpha
        self.iterations = iterations
        self.gap = gap

    def report(self) -> dict:
        """
        Return a serializable convergence report.

        Returns
        -------
        dict
            Report with message, iterations, gap and best iterate.
        """
        return {
            "message": str(self),
            "iterations": self.iterations,
            "gap": self.gap,
            "alpha": [float(a) for a in self.alpha],
        }
