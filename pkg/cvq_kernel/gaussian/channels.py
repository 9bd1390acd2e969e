"""
Loss channel and vacuum overlap module.
"""
from __future__ import annotations

import math

from cvq_kernel.gaussian.state import GaussianState
from cvq_kernel.utils.exceptions import InvalidArgumentError


def loss_channel(state: GaussianState, eta: float) -> GaussianState:
    """
    Pure-loss channel with efficiency eta (vacuum admixture).

    cov -> eta cov + (1 - eta) I and mean -> sqrt(eta) mean.

    Parameters
    ----------
    state : GaussianState
        Input state.
    eta : float
        Transmission efficiency in [0, 1].

    Returns
    -------
    GaussianState
        Attenuated state.
    """
    if not 0.0 <= eta <= 1.0:
        raise InvalidArgumentError(f"Efficiency must be in [0, 1], got {eta}.")
    amp = math.sqrt(eta)
    # Written as I + eta (V - I) so that vacuum maps to vacuum exactly.
    return GaussianState(
        q=amp * state.q,
        p=amp * state.p,
        vqq=1.0 + eta * (state.vqq - 1.0),
        vpp=1.0 + eta * (state.vpp - 1.0),
        vqp=eta * state.vqp,
    )


def vacuum_overlap(vqq: float, vpp: float, vqp: float = 0.0, q: float = 0.0, p: float = 0.0) -> float:
    """
    Vacuum component of a Gaussian state given its raw moments.

    F = 2 / sqrt(det(V + I)) * exp(-mu^T (V + I)^{-1} mu / 2).
    Moments are not checked against the uncertainty relation, so estimated
    covariances can be passed directly.

    Parameters
    ----------
    vqq : float
        Variance of q.
    vpp : float
        Variance of p.
    vqp : float
        q-p covariance.
    q : float
        Mean of q.
    p : float
        Mean of p.

    Returns
    -------
    float
        Overlap with the vacuum.
    """
    a = vqq + 1.0
    d = vpp + 1.0
    det = a * d - vqp * vqp
    if det <= 0:
        raise InvalidArgumentError(f"V + I must be positive definite, got det={det}.")
    quad = (d * q * q - 2 * vqp * q * p + a * p * p) / det
    return 2.0 / math.sqrt(det) * math.exp(-0.5 * quad)


def vacuum_fidelity(state: GaussianState) -> float:
    """
    Probability that the state is found in the vacuum.

    Parameters
    ----------
    state : GaussianState
        State to test.

    Returns
    -------
    float
        Value in (0, 1], equal to one only for the vacuum.
    """
    return vacuum_overlap(state.vqq, state.vpp, state.vqp, state.q, state.p)
