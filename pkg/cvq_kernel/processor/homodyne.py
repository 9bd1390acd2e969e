"""
Homodyne sampling module.

Quadratures of the input vacuum, the lossy ancilla and the detection-loss
vacuum are drawn directly; the beam-splitter and feedforward algebra is
applied sample by sample.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

import numpy as np

from cvq_kernel.processor.gate import gate_setting
from cvq_kernel.utils.commons import HOMODYNE_ANGLES
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import build_rng

if typing.TYPE_CHECKING:
    from cvq_kernel.processor.noise import NoiseModel


@dataclass(frozen=True, eq=False)
class ModeSamples:
    """
    Per-sample quadratures of both beam-splitter outputs.

    Mode 2 already includes the detection loss; the gain is rescaled by
    sqrt(eta_d) so that feeding p1 forward reproduces the lossy gate output.

    Attributes
    ----------
    q1, p1 : np.ndarray
        Reflected (measured) mode.
    q2, p2 : np.ndarray
        Transmitted mode after detection loss.
    gain : float
        Effective feedforward gain.
    """

    q1: np.ndarray
    p1: np.ndarray
    q2: np.ndarray
    p2: np.ndarray
    gain: float


@dataclass(frozen=True, eq=False)
class HomodyneBatch:
    """
    Post-processed homodyne outcomes at one local-oscillator angle.

    Attributes
    ----------
    angle : float
        Measurement angle phi.
    samples : np.ndarray
        Outcomes q_out,phi.
    seed : int
        Master seed.
    keys : tuple[int, ...]
        Cell keys the generator was derived from.
    """

    angle: float
    samples: np.ndarray
    seed: int
    keys: tuple = ()

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.samples)):
            raise InvalidArgumentError("Homodyne samples must be finite.")

    @property
    def size(self) -> int:
        """Number of samples."""
        return int(self.samples.shape[0])


def angle_trig(angle: float) -> tuple[float, float]:
    """
    Cosine and sine of a measurement angle, exact at 0 and pi/2.

    Parameters
    ----------
    angle : float
        Angle in radians.

    Returns
    -------
    tuple[float, float]
        (cos, sin).
    """
    if angle == 0.0:
        return 1.0, 0.0
    if angle == math.pi / 2:
        return 0.0, 1.0
    return math.cos(angle), math.sin(angle)


def sample_modes(r_total: float, noise: NoiseModel, n: int, rng: np.random.Generator) -> ModeSamples:
    """
    Draw the quadratures of both gate output modes.

    Parameters
    ----------
    r_total : float
        Target squeezing in nats.
    noise : NoiseModel
        Gate imperfections.
    n : int
        Number of samples.
    rng : np.random.Generator
        Random generator.

    Returns
    -------
    ModeSamples
        Quadratures of modes 1 and 2.
    """
    if n < 1:
        raise InvalidArgumentError(f"Number of samples must be positive, got {n}.")
    setting = gate_setting(r_total)
    t = setting.transmissivity
    v_aqq, v_app = noise.ancilla_variances()

    # Rows: q_in, p_in, q_a, p_a, q_v, p_v
    draws = rng.standard_normal((6, n))
    q_in, p_in = draws[0], draws[1]
    q_a = math.sqrt(v_aqq) * draws[2]
    # An unbounded ancilla p-variance is cancelled exactly by the feedforward.
    p_a = np.zeros(n) if math.isinf(v_app) else math.sqrt(v_app) * draws[3]

    st, sr = math.sqrt(t), math.sqrt(1.0 - t)
    q1 = sr * q_in + st * q_a
    p1 = sr * p_in + st * p_a
    q2 = st * q_in - sr * q_a
    p2 = st * p_in - sr * p_a

    eta = noise.detection_efficiency
    amp, vac = math.sqrt(eta), math.sqrt(1.0 - eta)
    return ModeSamples(
        q1=q1,
        p1=p1,
        q2=amp * q2 + vac * draws[4],
        p2=amp * p2 + vac * draws[5],
        gain=amp * setting.gain,
    )


def _quadrature(q: np.ndarray, p: np.ndarray, c: float, s: float) -> np.ndarray:
    return q * c + p * s


def feedforward_optical(modes: ModeSamples, angle: float) -> np.ndarray:
    """
    Outcome when g p1 is displaced onto p2 before the homodyne measurement.

    The detector reads the undisplaced quadrature plus the displacement
    projected on the measured axis.

    Parameters
    ----------
    modes : ModeSamples
        Gate output quadratures.
    angle : float
        Measurement angle.

    Returns
    -------
    np.ndarray
        q2 cos phi + p2 sin phi + (g p1) sin phi.
    """
    c, s = angle_trig(angle)
    displacement = modes.gain * modes.p1
    return _quadrature(modes.q2, modes.p2, c, s) + displacement * s


def feedforward_postprocessed(modes: ModeSamples, angle: float) -> np.ndarray:
    """
    Outcome when g sin(phi) p1 is added to the measured q2,phi afterwards.

    Parameters
    ----------
    modes : ModeSamples
        Gate output quadratures.
    angle : float
        Measurement angle.

    Returns
    -------
    np.ndarray
        q2,phi + g sin phi p1.
    """
    c, s = angle_trig(angle)
    q2_phi = _quadrature(modes.q2, modes.p2, c, s)
    correction = modes.gain * modes.p1 * s
    return q2_phi + correction


def sample_gate(
    r_total: float,
    noise: NoiseModel,
    angle: float,
    n: int,
    seed: int,
    keys: tuple = (),
    angles: tuple = HOMODYNE_ANGLES,
) -> HomodyneBatch:
    """
    Sample the post-processed gate output at one homodyne angle.

    Parameters
    ----------
    r_total : float
        Target squeezing in nats.
    noise : NoiseModel
        Gate imperfections.
    angle : float
        Measurement angle, one of `angles`.
    n : int
        Number of samples.
    seed : int
        Master seed.
    keys : tuple
        Cell keys; the angle index is appended to derive the generator.
    angles : tuple
        Allowed measurement angles.

    Returns
    -------
    HomodyneBatch
        Post-processed outcomes.
    """
    matches = [i for i, a in enumerate(angles) if math.isclose(a, angle, rel_tol=0.0, abs_tol=1e-12)]
    if not matches:
        raise InvalidArgumentError(f"Unknown homodyne angle {angle}, expected one of {angles}.")
    index = matches[0]
    cell = tuple(keys) + (index,)
    modes = sample_modes(r_total, noise, n, build_rng(seed, *cell))
    return HomodyneBatch(
        angle=angles[index],
        samples=feedforward_postprocessed(modes, angles[index]),
        seed=seed,
        keys=cell,
    )


def sample_angles(
    r_total: float,
    noise: NoiseModel,
    n: int,
    seed: int,
    keys: tuple = (),
    angles: tuple = HOMODYNE_ANGLES,
) -> list[HomodyneBatch]:
    """
    Sample the gate output at every homodyne angle.

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
    angles : tuple
        Measurement angles.

    Returns
    -------
    list[HomodyneBatch]
        One batch per angle.
    """
    return [sample_gate(r_total, noise, a, n, seed, keys, angles) for a in angles]
