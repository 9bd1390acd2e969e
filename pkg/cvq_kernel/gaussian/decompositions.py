"""
Bloch-Messiah decomposition module.

The kernel circuit S(-r_g) R(delta) S(r_g) factors into a rotation, one
squeezer and a rotation. Only the middle squeezer changes the vacuum
component, so the whole two-squeezer circuit reduces to S(r_total).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cvq_kernel.gaussian.symplectic import Symplectic2, rotation, squeezer
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import check_finite

# Singular values closer than this to one are treated as a pure rotation.
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class BlochMessiahFactors:
    """
    Factors of M = R(phi1) S(r) R(phi2).

    Attributes
    ----------
    phi1 : float
        Left rotation angle in (-pi, pi].
    r : float
        Squeezing parameter in nats, non-negative.
    phi2 : float
        Right rotation angle in (-pi, pi].
    """

    phi1: float
    r: float
    phi2: float

    @property
    def lambda_plus(self) -> float:
        """Larger eigenvalue of M M^T."""
        return math.exp(2 * self.r)

    @property
    def lambda_minus(self) -> float:
        """Smaller eigenvalue of M M^T."""
        return math.exp(-2 * self.r)

    def reconstruct(self) -> Symplectic2:
        """
        Multiply the factors back together.

        Returns
        -------
        Symplectic2
            R(phi1) S(r) R(phi2).
        """
        return rotation(self.phi1) @ squeezer(self.r) @ rotation(self.phi2)


def wrap_angle(phi: float) -> float:
    """
    Map an angle onto (-pi, pi].

    Parameters
    ----------
    phi : float
        Angle in radians.

    Returns
    -------
    float
        Equivalent angle in (-pi, pi].
    """
    wrapped = math.remainder(phi, 2 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2 * math.pi
    return wrapped


def _rotation_angle(matrix: np.ndarray) -> float:
    # rotation(phi) = [[cos, sin], [-sin, cos]]
    return wrap_angle(math.atan2(matrix[0, 1], matrix[0, 0]))


def bloch_messiah(m: Symplectic2) -> BlochMessiahFactors:
    """
    Decompose a single-mode symplectic matrix into rotation, squeezer, rotation.

    Parameters
    ----------
    m : Symplectic2
        Matrix to decompose.

    Returns
    -------
    BlochMessiahFactors
        Factors with r = ln(lambda_plus) / 2 >= 0.

    Raises
    ------
    InvalidArgumentError
        If the input is not symplectic.
    """
    if not isinstance(m, Symplectic2):
        raise InvalidArgumentError("bloch_messiah expects a Symplectic2 matrix.")

    u, sigma, vt = np.linalg.svd(m.as_array())
    s_max = float(sigma[0])

    if s_max - 1.0 <= DEGENERATE_TOL:
        return BlochMessiahFactors(phi1=_rotation_angle(m.as_array()), r=0.0, phi2=0.0)

    # SVD orders singular values descending; the squeezer puts the large one on p.
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    left = u @ swap
    right = swap @ vt
    if np.linalg.det(left) < 0:
        flip = np.diag([1.0, -1.0])
        left = left @ flip
        right = flip @ right

    return BlochMessiahFactors(
        phi1=_rotation_angle(left),
        r=math.log(s_max),
        phi2=_rotation_angle(right),
    )


def total_squeeze(r_g: float, delta: float) -> float:
    """
    Squeezing of the single squeezer equivalent to S(-r_g) R(delta) S(r_g).

    The larger eigenvalue of M M^T is
    cos^2 + cosh(4 r_g) sin^2 + sqrt(sinh^2(4 r_g) sin^4 + 4 sinh^2(2 r_g) sin^2 cos^2)
    and r_total = ln(lambda_plus) / 2.

    Parameters
    ----------
    r_g : float
        Gate-squeezing level in nats.
    delta : float
        Half the data difference, in radians.

    Returns
    -------
    float
        r_total in nats.
    """
    check_finite("r_g", r_g)
    check_finite("delta", delta)
    if r_g < 0:
        raise InvalidArgumentError(f"Gate squeezing must be non-negative, got {r_g}.")
    s2 = math.sin(delta) ** 2
    c2 = math.cos(delta) ** 2
    sh2 = math.sinh(2 * r_g) ** 2
    sh4 = math.sinh(4 * r_g) ** 2
    # lambda_plus - 1, with cosh(4 r) - 1 = 2 sinh^2(2 r) to keep precision near zero
    excess = 2 * sh2 * s2 + math.sqrt(sh4 * s2 * s2 + 4 * sh2 * s2 * c2)
    return 0.5 * math.log1p(excess)


def circuit_matrix(r_g: float, delta: float) -> Symplectic2:
    """
    Quadrature transform of S(-r_g) R(delta) S(r_g).

    Parameters
    ----------
    r_g : float
        Gate-squeezing level in nats.
    delta : float
        Half the data difference, in radians.

    Returns
    -------
    Symplectic2
        [[cos, e^{2 r_g} sin], [-e^{-2 r_g} sin, cos]].
    """
    return squeezer(-r_g) @ rotation(delta) @ squeezer(r_g)
