"""
Gaussian state module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cvq_kernel.utils.commons import DET_ROUNDOFF, UNCERTAINTY_TOL
from cvq_kernel.utils.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class GaussianState:
    """
    Single-mode Gaussian state in shot-noise units (vacuum variance is 1).

    The covariance is stored as three scalars so it is symmetric by
    construction.

    Attributes
    ----------
    q : float
        Mean of the q quadrature.
    p : float
        Mean of the p quadrature.
    vqq : float
        Variance of q.
    vpp : float
        Variance of p.
    vqp : float
        Symmetrized q-p covariance.
    """

    q: float = 0.0
    p: float = 0.0
    vqq: float = 1.0
    vpp: float = 1.0
    vqp: float = 0.0

    def __post_init__(self) -> None:
        for name in ("q", "p", "vqq", "vpp", "vqp"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"State entry '{name}' must be finite.")
        if self.vqq <= 0 or self.vpp <= 0:
            raise InvalidArgumentError(f"Variances must be positive, got vqq={self.vqq}, vpp={self.vpp}.")
        # det is a difference of two products; rounding grows with the larger one.
        slack = UNCERTAINTY_TOL + DET_ROUNDOFF * max(self.vqq * self.vpp, self.vqp * self.vqp)
        if self.determinant < 1.0 - slack:
            raise InvalidArgumentError(f"Covariance violates the uncertainty relation (det={self.determinant}).")

    @classmethod
    def vacuum(cls) -> "GaussianState":
        """
        Return the vacuum state.

        Returns
        -------
        GaussianState
            Zero mean, identity covariance.
        """
        return cls()

    @classmethod
    def squeezed_vacuum(cls, r: float) -> "GaussianState":
        """
        Return the q-squeezed vacuum with squeezing parameter r.

        Parameters
        ----------
        r : float
            Squeezing parameter in nats.

        Returns
        -------
        GaussianState
            State with covariance diag(e^{-2r}, e^{2r}).
        """
        return cls(vqq=math.exp(-2 * r), vpp=math.exp(2 * r))

    @classmethod
    def from_arrays(cls, mean: np.ndarray, cov: np.ndarray) -> "GaussianState":
        """
        Build a state from a mean vector and a 2x2 covariance matrix.

        Parameters
        ----------
        mean : np.ndarray
            Mean vector (q, p).
        cov : np.ndarray
            Covariance matrix. Off-diagonal entries are symmetrized.

        Returns
        -------
        GaussianState
            The state.
        """
        mean = np.asarray(mean, dtype=float)
        cov = np.asarray(cov, dtype=float)
        if mean.shape != (2,) or cov.shape != (2, 2):
            raise InvalidArgumentError("Expected a 2-vector mean and a 2x2 covariance.")
        return cls(
            q=float(mean[0]),
            p=float(mean[1]),
            vqq=float(cov[0, 0]),
            vpp=float(cov[1, 1]),
            vqp=float(0.5 * (cov[0, 1] + cov[1, 0])),
        )

    @property
    def mean(self) -> np.ndarray:
        """Mean vector (q, p)."""
        return np.array([self.q, self.p])

    @property
    def cov(self) -> np.ndarray:
        """Covariance matrix."""
        return np.array([[self.vqq, self.vqp], [self.vqp, self.vpp]])

    @property
    def determinant(self) -> float:
        """Covariance determinant."""
        return self.vqq * self.vpp - self.vqp**2

    def is_pure(self, tol: float = 1e-9) -> bool:
        """
        Check purity (determinant equal to one).

        Parameters
        ----------
        tol : float
            Relative tolerance.

        Returns
        -------
        bool
            True when the state is pure.
        """
        return abs(self.determinant - 1.0) <= tol * max(1.0, self.vqq * self.vpp)

    def to_dict(self) -> dict:
        """
        Return state as dict.

        Returns
        -------
        dict
            Mean and covariance entries.
        """
        return {"q": self.q, "p": self.p, "vqq": self.vqq, "vpp": self.vpp, "vqp": self.vqp}
