"""
Gaussian RBF baseline kernel module.
"""
from __future__ import annotations

import typing

import numpy as np
from sklearn.metrics.pairwise import rbf_kernel as sk_rbf_kernel

from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import check_finite

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

# Classical baseline settings used throughout the accuracy study.
DEFAULT_GAMMA = 3.0


def _check_gamma(gamma: float) -> None:
    check_finite("gamma", gamma)
    if gamma <= 0:
        raise InvalidArgumentError(f"RBF gamma must be positive, got {gamma}.")


def rbf_kernel(x: Sequence[float], y: Sequence[float], gamma: float = DEFAULT_GAMMA) -> float:
    """
    Gaussian RBF kernel exp(-gamma ||x - y||^2).

    Parameters
    ----------
    x : Sequence[float]
        First point.
    y : Sequence[float]
        Second point.
    gamma : float
        Inverse length scale, strictly positive.

    Returns
    -------
    float
        Kernel value in (0, 1].
    """
    _check_gamma(gamma)
    diff = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    return float(np.exp(-gamma * float(diff @ diff)))


def rbf_matrix(x: np.ndarray, y: np.ndarray | None = None, gamma: float = DEFAULT_GAMMA) -> np.ndarray:
    """
    RBF kernel matrix between two point sets.

    Parameters
    ----------
    x : np.ndarray
        Points of shape (n, d).
    y : np.ndarray
        Points of shape (m, d). Defaults to x.
    gamma : float
        Inverse length scale, strictly positive.

    Returns
    -------
    np.ndarray
        Matrix of shape (n, m).
    """
    _check_gamma(gamma)
    x = np.asarray(x, dtype=float)
    if y is None:
        values = sk_rbf_kernel(x, gamma=gamma)
        # exact symmetry and unit diagonal for the dual solver
        values = (values + values.T) / 2
        np.fill_diagonal(values, 1.0)
        return values
    return sk_rbf_kernel(x, np.asarray(y, dtype=float), gamma=gamma)
