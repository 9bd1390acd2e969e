"""
Squeezing-phase kernel module.

Each coordinate is encoded in the phase of a squeezed vacuum
S(r_g, x)|0>. The overlap of two encodings equals the vacuum component of
S(r_total)|0>, i.e. 1 / cosh(r_total), and
cosh^2(r_total) = 1 + sinh^2(2 r_g) sin^2((a - b) / 2).
"""
from __future__ import annotations

import typing

import numpy as np

from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import check_finite

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from cvq_kernel.kernels.units import GateLevel


def kappa_array(gate: GateLevel, differences: np.ndarray) -> np.ndarray:
    """
    Vectorized per-coordinate kernel over an array of differences.

    Saturates to zero instead of overflowing for very large gates.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    differences : np.ndarray
        Data differences in radians.

    Returns
    -------
    np.ndarray
        Kernel values in [0, 1], same shape as differences.
    """
    sin_half = np.abs(np.sin(np.asarray(differences, dtype=float) / 2))
    with np.errstate(over="ignore", invalid="ignore"):
        spread = np.sinh(2 * gate.nats) * sin_half
    spread = np.where(sin_half == 0.0, 0.0, spread)
    return 1.0 / np.hypot(1.0, spread)


def kappa_of_difference(gate: GateLevel, difference: float) -> float:
    """
    Per-coordinate kernel as a function of |a - b|.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    difference : float
        Absolute data difference in radians.

    Returns
    -------
    float
        Kernel value in [0, 1].
    """
    check_finite("difference", difference)
    return float(kappa_array(gate, np.asarray(difference, dtype=float)))


def kappa(gate: GateLevel, a: float, b: float) -> float:
    """
    Per-coordinate squeezing-phase kernel |<0|S^dag(r_g, a) S(r_g, b)|0>|^2.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    a : float
        First coordinate.
    b : float
        Second coordinate.

    Returns
    -------
    float
        Kernel value in (0, 1], even and 2 pi periodic in a - b.
    """
    check_finite("a", a)
    check_finite("b", b)
    return kappa_of_difference(gate, abs(a - b))


def kernel(gate: GateLevel, x: Sequence[float], y: Sequence[float]) -> float:
    """
    Two-dimensional squeezing-phase kernel, product of per-coordinate kernels.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    x : Sequence[float]
        First point.
    y : Sequence[float]
        Second point.

    Returns
    -------
    float
        Kernel value in (0, 1].
    """
    if len(x) != len(y):
        raise InvalidArgumentError(f"Points must have the same dimension, got {len(x)} and {len(y)}.")
    value = 1.0
    for a, b in zip(x, y):
        value *= kappa(gate, float(a), float(b))
    return value
