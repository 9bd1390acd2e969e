"""
Fock-basis reference evaluation of the squeezing-phase kernel.

The closed form 1 / cosh(r_total) is checked against a brute-force
computation of |<0|S^dag(r_g, a) S(r_g, b)|0>|^2 on a truncated number basis.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.logger import LOGGER

DEFAULT_CUTOFF = 80
MAX_CUTOFF = 1280


def _annihilation(cutoff: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), k=1)


def squeezed_vacuum_vector(r: float, theta: float = 0.0, cutoff: int = DEFAULT_CUTOFF) -> np.ndarray:
    """
    Number-basis amplitudes of S(r, theta)|0>.

    S(z) = exp((z* a^2 - z a^dag^2) / 2) with z = r e^{i theta}; real positive
    r squeezes q.

    Parameters
    ----------
    r : float
        Squeezing parameter in nats.
    theta : float
        Squeezing phase in radians.
    cutoff : int
        Number of Fock levels kept.

    Returns
    -------
    np.ndarray
        Complex amplitudes of length cutoff.
    """
    if cutoff < 2:
        raise InvalidArgumentError(f"Fock cutoff must be at least 2, got {cutoff}.")
    a = _annihilation(cutoff).astype(complex)
    z = r * np.exp(1j * theta)
    generator = 0.5 * (np.conj(z) * a @ a - z * a.T @ a.T)
    return expm(generator)[:, 0]


def fock_vacuum_probability(r: float, cutoff: int = DEFAULT_CUTOFF) -> float:
    """
    |<0|S(r)|0>|^2 on a truncated number basis.

    Parameters
    ----------
    r : float
        Squeezing parameter in nats.
    cutoff : int
        Number of Fock levels kept.

    Returns
    -------
    float
        Vacuum probability, approximately 1 / cosh(r).
    """
    return float(abs(squeezed_vacuum_vector(r, 0.0, cutoff)[0]) ** 2)


def fock_kappa(r_g: float, a: float, b: float, cutoff: int = DEFAULT_CUTOFF) -> float:
    """
    Brute-force per-coordinate kernel |<0|S^dag(r_g, a) S(r_g, b)|0>|^2.

    Parameters
    ----------
    r_g : float
        Gate-squeezing level in nats.
    a : float
        First coordinate, used as squeezing phase.
    b : float
        Second coordinate, used as squeezing phase.
    cutoff : int
        Number of Fock levels kept.

    Returns
    -------
    float
        Kernel value.
    """
    left = squeezed_vacuum_vector(r_g, a, cutoff)
    right = squeezed_vacuum_vector(r_g, b, cutoff)
    return float(abs(np.vdot(left, right)) ** 2)


def fock_kappa_converged(
    r_g: float,
    a: float,
    b: float,
    tol: float = 1e-12,
    cutoff: int = DEFAULT_CUTOFF,
    max_cutoff: int = MAX_CUTOFF,
) -> float:
    """
    Brute-force kernel, doubling the truncation until two successive values agree.

    Parameters
    ----------
    r_g : float
        Gate-squeezing level in nats.
    a : float
        First coordinate.
    b : float
        Second coordinate.
    tol : float
        Agreement required between successive truncations.
    cutoff : int
        Starting truncation.
    max_cutoff : int
        Largest truncation tried.

    Returns
    -------
    float
        Kernel value at the last truncation.
    """
    previous = fock_kappa(r_g, a, b, cutoff)
    while cutoff < max_cutoff:
        cutoff *= 2
        current = fock_kappa(r_g, a, b, cutoff)
        if abs(current - previous) <= tol:
            return current
        previous = current
    LOGGER.warning(f"Fock oracle not converged at cutoff {cutoff} for r_g={r_g}, a={a}, b={b}.")
    return previous
