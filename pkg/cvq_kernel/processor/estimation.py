"""
Covariance and kernel estimation module.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

import numpy as np

from cvq_kernel.gaussian.channels import vacuum_overlap
from cvq_kernel.processor.homodyne import HomodyneBatch, sample_angles
from cvq_kernel.utils.commons import HOMODYNE_ANGLES, SAMPLES_PER_ANGLE
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import build_rng
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from cvq_kernel.gaussian.state import GaussianState
    from cvq_kernel.processor.noise import NoiseModel

BOOTSTRAP_RESAMPLES = 20


@dataclass(frozen=True)
class CovEstimate:
    """
    Covariance reconstructed from three homodyne angles.

    Attributes
    ----------
    vqq : float
        Estimated variance of q.
    vpp : float
        Estimated variance of p.
    vqp : float
        Estimated q-p covariance.
    n_per_angle : int
        Samples used per angle.
    q : float
        Sample mean of q.
    p : float
        Sample mean of p.
    """

    vqq: float
    vpp: float
    vqp: float
    n_per_angle: int
    q: float = 0.0
    p: float = 0.0

    def __post_init__(self) -> None:
        if not self.vqq > 0 or not self.vpp > 0:
            raise InvalidArgumentError(f"Estimated variances must be positive, got ({self.vqq}, {self.vpp}).")


def covariance_from_variances(var_0: float, var_45: float, var_90: float) -> tuple[float, float, float]:
    """
    Invert V(phi) = V_qq cos^2 + V_pp sin^2 + 2 V_qp sin cos at 0, pi/4, pi/2.

    Parameters
    ----------
    var_0 : float
        Variance at phi = 0.
    var_45 : float
        Variance at phi = pi/4.
    var_90 : float
        Variance at phi = pi/2.

    Returns
    -------
    tuple[float, float, float]
        (V_qq, V_pp, V_qp).
    """
    return var_0, var_90, var_45 - (var_0 + var_90) / 2


def _by_angle(batches: Sequence[HomodyneBatch]) -> list[np.ndarray]:
    found = []
    for angle in HOMODYNE_ANGLES:
        match = [b for b in batches if math.isclose(b.angle, angle, rel_tol=0.0, abs_tol=1e-12)]
        if not match:
            raise InvalidArgumentError(f"Missing homodyne batch at angle {angle}.")
        found.append(np.asarray(match[0].samples, dtype=float))
    return found


def _estimate(samples: list[np.ndarray]) -> CovEstimate:
    s0, s45, s90 = samples
    if min(len(s) for s in samples) < 2:
        raise InvalidArgumentError("Variance estimation needs at least two samples per angle.")
    vqq, vpp, vqp = covariance_from_variances(
        float(np.var(s0, ddof=1)),
        float(np.var(s45, ddof=1)),
        float(np.var(s90, ddof=1)),
    )
    return CovEstimate(
        vqq=vqq,
        vpp=vpp,
        vqp=vqp,
        n_per_angle=min(len(s) for s in samples),
        q=float(np.mean(s0)),
        p=float(np.mean(s90)),
    )


def estimate_covariance(batches: Sequence[HomodyneBatch]) -> CovEstimate:
    """
    Reconstruct mean and covariance from batches at 0, pi/4 and pi/2.

    Parameters
    ----------
    batches : Sequence[HomodyneBatch]
        Batches covering the three angles.

    Returns
    -------
    CovEstimate
        Unbiased covariance estimate.
    """
    return _estimate(_by_angle(batches))


def estimate_kappa(estimate: CovEstimate) -> float:
    """
    Vacuum component of the estimated state, without clipping.

    Parameters
    ----------
    estimate : CovEstimate
        Covariance estimate.

    Returns
    -------
    float
        Estimated kernel value; may exceed one by sampling error.
    """
    return vacuum_overlap(estimate.vqq, estimate.vpp, estimate.vqp, estimate.q, estimate.p)


def output_levels(state: GaussianState | CovEstimate) -> tuple[float, float]:
    """
    Output squeezing and antisqueezing levels.

    Parameters
    ----------
    state : GaussianState | CovEstimate
        State or covariance estimate.

    Returns
    -------
    tuple[float, float]
        (10 log10 V_qq, 10 log10 V_pp) in dB.
    """
    if not state.vqq > 0 or not state.vpp > 0:
        raise InvalidArgumentError(f"Variances must be positive, got ({state.vqq}, {state.vpp}).")
    return 10.0 * math.log10(state.vqq), 10.0 * math.log10(state.vpp)


def sample_estimate(
    r_total: float,
    noise: NoiseModel,
    n: int = SAMPLES_PER_ANGLE,
    seed: int = 0,
    keys: tuple = (),
) -> tuple[list[HomodyneBatch], CovEstimate]:
    """
    Sample the three angles and estimate the covariance.

    Parameters
    ----------
    r_total : float
        Target squeezing in nats.
    noise : NoiseModel
        Gate imperfections.
    n : int
        Samples per angle.
    seed : int
        Master seed.
    keys : tuple
        Cell keys.

    Returns
    -------
    tuple[list[HomodyneBatch], CovEstimate]
        Raw batches and the estimate.
    """
    batches = sample_angles(r_total, noise, n, seed, keys)
    return batches, estimate_covariance(batches)


def kappa_from_gate(
    r_total: float,
    noise: NoiseModel,
    n: int = SAMPLES_PER_ANGLE,
    seed: int = 0,
    keys: tuple = (),
) -> float:
    """
    Kernel value measured on the simulated processor.

    Parameters
    ----------
    r_total : float
        Target squeezing in nats.
    noise : NoiseModel
        Gate imperfections.
    n : int
        Samples per angle.
    seed : int
        Master seed.
    keys : tuple
        Cell keys.

    Returns
    -------
    float
        Vacuum component of the estimated output state, clipped to 1.
    """
    _, estimate = sample_estimate(r_total, noise, n, seed, keys)
    value = estimate_kappa(estimate)
    if value > 1.0:
        LOGGER.warning(f"Sampled kernel {value:.6f} exceeds 1 at r_total={r_total:.6f}, clipping.")
        return 1.0
    return value


def bootstrap_kappa_stderr(
    batches: Sequence[HomodyneBatch],
    n_resamples: int = BOOTSTRAP_RESAMPLES,
    seed: int = 0,
    keys: tuple = (),
) -> float:
    """
    Bootstrap standard error of a sampled kernel value.

    Parameters
    ----------
    batches : Sequence[HomodyneBatch]
        Batches at the three angles.
    n_resamples : int
        Number of bootstrap resamples.
    seed : int
        Master seed.
    keys : tuple
        Cell keys of the resampling generator.

    Returns
    -------
    float
        Sample standard deviation of the resampled kernel values.
    """
    if n_resamples < 2:
        raise InvalidArgumentError(f"Bootstrap needs at least two resamples, got {n_resamples}.")
    samples = _by_angle(batches)
    rng = build_rng(seed, *keys)
    values = []
    for _ in range(n_resamples):
        resampled = [s[rng.integers(0, len(s), size=len(s))] for s in samples]
        values.append(estimate_kappa(_estimate(resampled)))
    return float(np.std(values, ddof=1))
