"""
Single-mode symplectic transforms module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cvq_kernel.gaussian.state import GaussianState
from cvq_kernel.utils.commons import MAX_SQUEEZE_NATS, SYMPLECTIC_TOL
from cvq_kernel.utils.exceptions import InvalidArgumentError, OverflowGuardError
from cvq_kernel.utils.generic_utils import check_finite


@dataclass(frozen=True)
class Symplectic2:
    """
    Real 2x2 matrix with unit determinant acting on (q, p).
    """

    m11: float
    m12: float
    m21: float
    m22: float

    def __post_init__(self) -> None:
        entries = (self.m11, self.m12, self.m21, self.m22)
        if not all(math.isfinite(x) for x in entries):
            raise InvalidArgumentError("Symplectic matrix entries must be finite.")
        scale = max(1.0, abs(self.m11 * self.m22), abs(self.m12 * self.m21))
        if abs(self.det - 1.0) > SYMPLECTIC_TOL * scale:
            raise InvalidArgumentError(f"Matrix is not symplectic (det={self.det}).")

    @classmethod
    def identity(cls) -> "Symplectic2":
        """
        Return the identity transform.

        Returns
        -------
        Symplectic2
            Identity.
        """
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> "Symplectic2":
        """
        Build from a 2x2 array.

        Parameters
        ----------
        matrix : np.ndarray
            The matrix.

        Returns
        -------
        Symplectic2
            The transform.
        """
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (2, 2):
            raise InvalidArgumentError(f"Expected a 2x2 matrix, got shape {matrix.shape}.")
        return cls(float(matrix[0, 0]), float(matrix[0, 1]), float(matrix[1, 0]), float(matrix[1, 1]))

    @property
    def det(self) -> float:
        """Determinant."""
        return self.m11 * self.m22 - self.m12 * self.m21

    def as_array(self) -> np.ndarray:
        """
        Return the matrix as a numpy array.

        Returns
        -------
        np.ndarray
            2x2 array.
        """
        return np.array([[self.m11, self.m12], [self.m21, self.m22]])

    def inverse(self) -> "Symplectic2":
        """
        Return the inverse, exact for unit determinant.

        Returns
        -------
        Symplectic2
            Inverse transform.
        """
        return Symplectic2(self.m22, -self.m12, -self.m21, self.m11)

    def transpose(self) -> "Symplectic2":
        """
        Return the transpose.

        Returns
        -------
        Symplectic2
            Transposed transform.
        """
        return Symplectic2(self.m11, self.m21, self.m12, self.m22)

    def __matmul__(self, other: "Symplectic2") -> "Symplectic2":
        if not isinstance(other, Symplectic2):
            return NotImplemented
        return Symplectic2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )


def rotation(phi: float) -> Symplectic2:
    """
    Quadrature action of the phase shift exp(-i phi a^dag a).

    Parameters
    ----------
    phi : float
        Angle in radians.

    Returns
    -------
    Symplectic2
        [[cos phi, sin phi], [-sin phi, cos phi]].
    """
    check_finite("phi", phi)
    c, s = math.cos(phi), math.sin(phi)
    return Symplectic2(c, s, -s, c)


def squeezer(r: float) -> Symplectic2:
    """
    Quadrature action of the squeezer; positive r squeezes q.

    Parameters
    ----------
    r : float
        Squeezing parameter in nats.

    Returns
    -------
    Symplectic2
        diag(e^{-r}, e^{r}).

    Raises
    ------
    OverflowGuardError
        If |r| exceeds the safe dynamic range.
    """
    check_finite("r", r)
    if abs(r) > MAX_SQUEEZE_NATS:
        raise OverflowGuardError(f"|r| = {abs(r)} exceeds the overflow guard of {MAX_SQUEEZE_NATS} nats.")
    return Symplectic2(math.exp(-r), 0.0, 0.0, math.exp(r))


def apply(state: GaussianState, s: Symplectic2) -> GaussianState:
    """
    Apply a symplectic transform: mean -> S mean, cov -> S cov S^T.

    Parameters
    ----------
    state : GaussianState
        Input state.
    s : Symplectic2
        Transform.

    Returns
    -------
    GaussianState
        Transformed state.
    """
    a, b, c, d = s.m11, s.m12, s.m21, s.m22
    return GaussianState(
        q=a * state.q + b * state.p,
        p=c * state.q + d * state.p,
        vqq=a * a * state.vqq + 2 * a * b * state.vqp + b * b * state.vpp,
        vpp=c * c * state.vqq + 2 * c * d * state.vqp + d * d * state.vpp,
        vqp=a * c * state.vqq + (a * d + b * c) * state.vqp + b * d * state.vpp,
    )
