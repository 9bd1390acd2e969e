import math

import numpy as np
import pytest

from cvq_kernel.gaussian import GaussianState, vacuum_fidelity
from cvq_kernel.processor.gate import gate_setting, output_state_analytic
from cvq_kernel.processor.homodyne import (
    HomodyneBatch,
    feedforward_optical,
    feedforward_postprocessed,
    sample_angles,
    sample_gate,
    sample_modes,
)
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.utils.commons import HOMODYNE_ANGLES
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import build_rng

R_8DB_HALF_TURN = 1.84207


########################
# Noise model
########################


def test_default_noise_model():
    noise = NoiseModel()
    assert noise == NoiseModel.calibrated()
    v_qq, v_pp = noise.ancilla_variances()
    assert v_qq == pytest.approx(0.325)
    assert v_pp == pytest.approx(7.75)


def test_ideal_noise_model():
    noise = NoiseModel.ideal()
    assert noise.is_ideal_ancilla
    v_qq, v_pp = noise.ancilla_variances()
    assert v_qq == 0.0
    assert math.isinf(v_pp)


def test_no_ancilla_means_vacuum():
    assert NoiseModel(ancilla_efficiency=0.0).ancilla_variances() == (1.0, 1.0)


@pytest.mark.parametrize(
    "fields",
    [
        {"ancilla_efficiency": 1.5},
        {"detection_efficiency": -0.1},
        {"ancilla_pure_db": -3.0},
        {"ancilla_pure_db": 4000.0},
        {"ancilla_pure_db": float("nan")},
    ],
)
def test_noise_model_validation(fields):
    with pytest.raises(ValueError):
        NoiseModel(**fields)


def test_noise_model_is_frozen():
    noise = NoiseModel()
    with pytest.raises(TypeError):
        noise.detection_efficiency = 1.0


def test_squeeze_floor():
    assert NoiseModel().squeeze_floor_db() == pytest.approx(10 * math.log10(0.77 * 0.325 + 0.23))


########################
# Gate setting and analytic output
########################


def test_gate_setting_values():
    setting = gate_setting(0.0)
    assert (setting.transmissivity, setting.gain) == (1.0, 0.0)
    setting = gate_setting(math.log(2) / 2)
    assert setting.transmissivity == pytest.approx(0.5)
    assert setting.gain == pytest.approx(1.0)


def test_gate_setting_8db():
    setting = gate_setting(R_8DB_HALF_TURN)
    assert setting.transmissivity == pytest.approx(0.025119, abs=1e-6)
    assert setting.gain == pytest.approx(6.2297, abs=1e-3)
    assert setting.gain**2 == pytest.approx((1 - setting.transmissivity) / setting.transmissivity)


@pytest.mark.parametrize("r", [-0.1, float("nan"), 26.0])
def test_gate_setting_rejects(r):
    with pytest.raises(InvalidArgumentError):
        gate_setting(r)


def test_analytic_output_vacuum():
    state = output_state_analytic(0.0, NoiseModel())
    assert state == GaussianState.vacuum()


def test_analytic_output_ideal_limit():
    state = output_state_analytic(0.5, NoiseModel.ideal())
    assert state.vqq == pytest.approx(math.exp(-1.0))
    assert state.vpp == pytest.approx(math.exp(1.0))


def test_analytic_output_ancilla_noise():
    noise = NoiseModel(ancilla_pure_db=10.0, ancilla_efficiency=0.75, detection_efficiency=1.0)
    state = output_state_analytic(3.0, noise)
    assert state.vqq == pytest.approx(math.exp(-6) + (1 - math.exp(-6)) * 0.325)
    assert state.vqq == pytest.approx(0.32668, abs=1e-5)


def test_analytic_output_saturates():
    noise = NoiseModel()
    floor = NoiseModel().squeeze_floor_db()
    levels = [10 * math.log10(output_state_analytic(r, noise).vqq) for r in np.linspace(0.0, 3.0, 40)]
    assert np.all(np.diff(levels) < 0)
    assert min(levels) >= floor


@pytest.mark.parametrize("ancilla_db", [0.0, 3.0, 10.0, 40.0, math.inf])
@pytest.mark.parametrize("ancilla_efficiency", [0.0, 0.5, 1.0])
def test_antisqueezed_quadrature_ignores_ancilla(ancilla_db, ancilla_efficiency):
    noise = NoiseModel(ancilla_pure_db=ancilla_db, ancilla_efficiency=ancilla_efficiency, detection_efficiency=1.0)
    for r in (0.3, 1.0, R_8DB_HALF_TURN):
        assert output_state_analytic(r, noise).vpp == pytest.approx(math.exp(2 * r), rel=1e-12)


def test_antisqueezed_samples_ignore_ancilla():
    reference = sample_modes(1.0, NoiseModel.ideal(), 1000, build_rng(0, 4))
    for ancilla_db in (0.0, 10.0, 40.0):
        noise = NoiseModel(ancilla_pure_db=ancilla_db, ancilla_efficiency=1.0, detection_efficiency=1.0)
        modes = sample_modes(1.0, noise, 1000, build_rng(0, 4))
        np.testing.assert_allclose(
            feedforward_postprocessed(modes, math.pi / 2),
            feedforward_postprocessed(reference, math.pi / 2),
            atol=1e-9,
        )


########################
# Homodyne sampling
########################


def test_sample_determinism():
    noise = NoiseModel()
    first = sample_gate(1.0, noise, math.pi / 4, 1000, seed=7, keys=(1, 2))
    second = sample_gate(1.0, noise, math.pi / 4, 1000, seed=7, keys=(1, 2))
    np.testing.assert_array_equal(first.samples, second.samples)
    other = sample_gate(1.0, noise, math.pi / 4, 1000, seed=8, keys=(1, 2))
    assert not np.array_equal(first.samples, other.samples)
    cell = sample_gate(1.0, noise, math.pi / 4, 1000, seed=7, keys=(1, 3))
    assert not np.array_equal(first.samples, cell.samples)


def test_sample_records_cell():
    batch = sample_gate(0.3, NoiseModel(), math.pi / 2, 10, seed=1, keys=(4,))
    assert batch.keys == (4, 2)
    assert batch.size == 10


def test_sample_rejects_unknown_angle():
    with pytest.raises(InvalidArgumentError):
        sample_gate(0.3, NoiseModel(), 0.3, 10, seed=1)


def test_sample_rejects_empty_batch():
    with pytest.raises(InvalidArgumentError):
        sample_gate(0.3, NoiseModel(), 0.0, 0, seed=1)


def test_batch_rejects_non_finite():
    with pytest.raises(InvalidArgumentError):
        HomodyneBatch(angle=0.0, samples=np.array([0.0, np.nan]), seed=0)


@pytest.mark.parametrize("noise", [NoiseModel(), NoiseModel.ideal()])
def test_feedforward_postprocessing_identity(noise):
    modes = sample_modes(R_8DB_HALF_TURN, noise, 10_000, build_rng(0, 9))
    for angle in HOMODYNE_ANGLES:
        np.testing.assert_array_equal(feedforward_optical(modes, angle), feedforward_postprocessed(modes, angle))


@pytest.mark.parametrize("r", [0.25, 0.5, 1.0, 1.84])
def test_ideal_gate_reproduces_squeezer(r):
    batches = sample_angles(r, NoiseModel.ideal(), 100_000, seed=3)
    variances = {b.angle: np.var(b.samples, ddof=1) for b in batches}
    assert variances[0.0] == pytest.approx(math.exp(-2 * r), rel=0.02)
    assert variances[math.pi / 2] == pytest.approx(math.exp(2 * r), rel=0.02)
    for batch in batches:
        assert abs(np.mean(batch.samples)) < 5 * math.sqrt(variances[math.pi / 2] / batch.size)


def test_noisy_samples_match_analytic_variances():
    noise = NoiseModel()
    state = output_state_analytic(1.2, noise)
    batches = sample_angles(1.2, noise, 100_000, seed=5)
    expected = {0.0: state.vqq, math.pi / 4: (state.vqq + state.vpp) / 2, math.pi / 2: state.vpp}
    for batch in batches:
        assert np.var(batch.samples, ddof=1) == pytest.approx(expected[batch.angle], rel=0.03)
    assert vacuum_fidelity(state) < 1.0
    assert len(batches) == len(HOMODYNE_ANGLES)
