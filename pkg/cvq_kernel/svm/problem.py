"""
Kernel SVM dual problem module.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cvq_kernel.utils.exceptions import InvalidArgumentError

DEFAULT_C = 1.0


@dataclass(frozen=True, eq=False)
class DualProblem:
    """
    min_a 1/2 a^T Q a - sum(a) s.t. y^T a = 0, 0 <= a_i <= C,
    with Q_ij = y_i y_j K_ij.

    Attributes
    ----------
    kernel : np.ndarray
        Symmetric n x n kernel matrix.
    labels : np.ndarray
        Labels in {-1, +1}.
    c : float
        Box bound.
    """

    kernel: np.ndarray
    labels: np.ndarray
    c: float = DEFAULT_C

    def __post_init__(self) -> None:
        kernel = np.asarray(self.kernel, dtype=float)
        labels = np.asarray(self.labels, dtype=float)
        if kernel.ndim != 2 or kernel.shape[0] != kernel.shape[1]:
            raise InvalidArgumentError(f"Kernel matrix must be square, got shape {kernel.shape}.")
        if labels.shape != (kernel.shape[0],):
            raise InvalidArgumentError(f"Expected {kernel.shape[0]} labels, got shape {labels.shape}.")
        if not np.all(np.abs(labels) == 1.0):
            raise InvalidArgumentError("Labels must be -1 or +1.")
        if not np.allclose(kernel, kernel.T, rtol=0.0, atol=1e-12):
            raise InvalidArgumentError("Kernel matrix must be symmetric.")
        if not self.c > 0:
            raise InvalidArgumentError(f"Box bound C must be positive, got {self.c}.")
        object.__setattr__(self, "kernel", kernel)
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        """Number of training points."""
        return self.labels.shape[0]

    @property
    def q(self) -> np.ndarray:
        """Label-signed kernel y_i y_j K_ij."""
        return np.outer(self.labels, self.labels) * self.kernel
