"""
Measurement-induced squeezing gate module.

The gate mixes the input with a q-squeezed ancilla on a beam splitter of
transmissivity T, measures p of the reflected mode and feeds g times the
outcome forward onto p of the transmitted mode. With T = exp(-2 r) and
g = sqrt((1 - T) / T) it acts as S(r) plus ancilla noise on q.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

from cvq_kernel.gaussian.channels import loss_channel
from cvq_kernel.gaussian.state import GaussianState
from cvq_kernel.utils.commons import MAX_SQUEEZE_NATS
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import check_finite

if typing.TYPE_CHECKING:
    from cvq_kernel.processor.noise import NoiseModel


@dataclass(frozen=True)
class GateSetting:
    """
    Optical parameters realizing S(r_total).

    Attributes
    ----------
    transmissivity : float
        Beam-splitter transmissivity T in (0, 1].
    gain : float
        Feedforward gain g.
    r_total : float
        Target squeezing in nats.
    """

    transmissivity: float
    gain: float
    r_total: float


def gate_setting(r_total: float) -> GateSetting:
    """
    Beam-splitter transmissivity and feedforward gain for a target squeezing.

    Parameters
    ----------
    r_total : float
        Target squeezing in nats, in [0, 25].

    Returns
    -------
    GateSetting
        T = exp(-2 r_total), g = sqrt((1 - T) / T).
    """
    check_finite("r_total", r_total)
    if r_total < 0:
        raise InvalidArgumentError(f"Gate squeezing must be non-negative, got {r_total}.")
    if r_total > MAX_SQUEEZE_NATS:
        raise InvalidArgumentError(f"Gate squeezing {r_total} exceeds {MAX_SQUEEZE_NATS} nats.")
    t = math.exp(-2 * r_total)
    return GateSetting(transmissivity=t, gain=math.sqrt((1.0 - t) / t), r_total=r_total)


def output_state_analytic(r_total: float, noise: NoiseModel) -> GaussianState:
    """
    Exact output of the noisy gate acting on vacuum.

    V_qq = e^{-2r} + (1 - e^{-2r}) v_a,qq and V_pp = e^{2r} before the
    detection loss; the ancilla p noise is cancelled by the feedforward.

    Parameters
    ----------
    r_total : float
        Target squeezing in nats.
    noise : NoiseModel
        Gate imperfections.

    Returns
    -------
    GaussianState
        Zero-mean output state as seen by the homodyne detector.
    """
    setting = gate_setting(r_total)
    t = setting.transmissivity
    v_aqq, _ = noise.ancilla_variances()
    state = GaussianState(vqq=t + (1.0 - t) * v_aqq, vpp=math.exp(2 * r_total), vqp=0.0)
    return loss_channel(state, noise.detection_efficiency)
