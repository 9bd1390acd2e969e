import numpy as np
import pytest
from pydantic import ValidationError

from cvq_kernel.data.datasets import DatasetParams
from cvq_kernel.data.protocol import (
    DATASET_REPORT_COLUMNS,
    REPORT_COLUMNS,
    AccuracyCell,
    AccuracyReport,
    ProtocolParams,
    evaluate_dataset,
    run_protocol,
)
from cvq_kernel.kernels.table import build_table
from cvq_kernel.kernels.units import GateLevel
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.processor.sweep import noisy_analytic_table
from cvq_kernel.utils.commons import BLOBS, CIRCLES, CLOSED_FORM, MOONS, NOISY_ANALYTIC, RBF


@pytest.fixture
def tables(gate8):
    return {
        (8.0, "closed-form"): build_table(gate8),
        (8.0, "noisy-analytic"): noisy_analytic_table(gate8, NoiseModel()),
    }


@pytest.fixture
def small_params():
    return ProtocolParams(n_datasets=2, n_shuffles=1, k_folds=4, sources=["closed-form", "noisy-analytic"])


@pytest.fixture
def tight_blobs():
    return DatasetParams(kind="blobs", n_samples=40, blobs_sd=0.0)


def test_report_layout(tables, small_params, tight_blobs):
    report = run_protocol("blobs", tables, small_params, tight_blobs, master_seed=1)
    frame = report.to_frame()
    assert list(frame.columns) == REPORT_COLUMNS
    assert [c.kernel_source for c in report.cells] == ["closed-form", "noisy-analytic", "rbf"]
    assert report.get("blobs", "rbf").gate_db is None
    for cell in report.cells:
        assert cell.n_evals == 2 * 1 * 4
        assert len(cell.per_dataset) == 2
    datasets = report.datasets_frame()
    assert list(datasets.columns) == DATASET_REPORT_COLUMNS
    assert len(datasets) == 3 * 2


def test_separable_blobs_are_perfect(tables, small_params, tight_blobs):
    report = run_protocol("blobs", tables, small_params, tight_blobs, master_seed=1)
    for cell in report.cells:
        assert cell.mean_acc == 1.0
        assert cell.sd_acc == 0.0


def test_protocol_is_deterministic(tables, small_params):
    dataset_params = DatasetParams(n_samples=40)
    a = run_protocol("moons", tables, small_params, dataset_params, master_seed=4)
    b = run_protocol("moons", tables, small_params, dataset_params, master_seed=4)
    assert a == b


def test_workers_do_not_change_results(tables, small_params):
    dataset_params = DatasetParams(n_samples=40)
    serial = run_protocol("circles", tables, small_params, dataset_params, master_seed=2)
    parallel = run_protocol("circles", tables, small_params.copy(update={"workers": 2}), dataset_params, 2)
    assert serial == parallel


def test_continuous_evaluation(tables, small_params, tight_blobs):
    params = small_params.copy(update={"lattice": False})
    report = run_protocol("blobs", tables, params, tight_blobs, master_seed=1)
    assert report.get("blobs", "closed-form", 8.0).mean_acc == 1.0


def test_evaluate_dataset_keys(tables, small_params, tight_blobs):
    result = evaluate_dataset("blobs", 0, 1, tight_blobs, tables, small_params)
    assert set(result) == {(8.0, "closed-form"), (8.0, "noisy-analytic"), (None, "rbf"), "seed"}
    assert 0 <= result["seed"] < 2**32


def test_single_dataset_has_zero_spread():
    cell = AccuracyCell("moons", 8.0, "closed-form", (0.9,), 40, (1,))
    assert cell.sd_acc == 0.0
    assert cell.n_evals == 40
    cell = AccuracyCell("moons", 8.0, "closed-form", (0.8, 1.0), 40, (1, 2))
    assert cell.mean_acc == pytest.approx(0.9)
    assert cell.sd_acc == pytest.approx(np.std([0.8, 1.0], ddof=1))


def test_report_merge_and_lookup():
    a = AccuracyReport(cells=(AccuracyCell("moons", 8.0, "closed-form", (1.0,), 4),))
    b = AccuracyReport(cells=(AccuracyCell("circles", None, "rbf", (0.5,), 4),))
    merged = AccuracyReport.merge([a, b])
    assert merged.get("circles", "rbf").mean_acc == 0.5
    with pytest.raises(KeyError):
        merged.get("moons", "closed-form", 2.0)


def test_params_validation():
    with pytest.raises(ValidationError):
        ProtocolParams(sources=["measured"])
    with pytest.raises(ValidationError):
        ProtocolParams(k_folds=1)
    with pytest.raises(ValidationError):
        ProtocolParams(workers=0)


@pytest.fixture(scope="module")
def trend_reports():
    tables = {}
    for db in (2.0, 8.0):
        gate = GateLevel.from_db(db)
        tables[(db, CLOSED_FORM)] = build_table(gate)
        tables[(db, NOISY_ANALYTIC)] = noisy_analytic_table(gate, NoiseModel())
    params = ProtocolParams(n_datasets=3, n_shuffles=2, sources=[CLOSED_FORM, NOISY_ANALYTIC])
    kinds = (MOONS, CIRCLES, BLOBS)
    return {kind: run_protocol(kind, tables, params, DatasetParams(), master_seed=7) for kind in kinds}


def test_blobs_accurate_at_every_gate(trend_reports):
    report = trend_reports[BLOBS]
    for db in (2.0, 8.0):
        for source in (CLOSED_FORM, NOISY_ANALYTIC):
            assert report.get(BLOBS, source, db).mean_acc >= 0.95
    assert report.get(BLOBS, RBF).mean_acc >= 0.95


def test_stronger_gate_helps_nonlinear_boundaries(trend_reports):
    moons = trend_reports[MOONS]
    assert moons.get(MOONS, CLOSED_FORM, 8.0).mean_acc > moons.get(MOONS, CLOSED_FORM, 2.0).mean_acc + 0.05
    circles = trend_reports[CIRCLES]
    assert circles.get(CIRCLES, CLOSED_FORM, 8.0).mean_acc >= circles.get(CIRCLES, CLOSED_FORM, 2.0).mean_acc - 0.02


@pytest.mark.parametrize("kind", [MOONS, CIRCLES, BLOBS])
def test_noisy_kernel_tracks_closed_form_and_rbf(trend_reports, kind):
    report = trend_reports[kind]
    noisy = report.get(kind, NOISY_ANALYTIC, 8.0).mean_acc
    assert noisy == pytest.approx(report.get(kind, CLOSED_FORM, 8.0).mean_acc, abs=0.03)
    assert noisy == pytest.approx(report.get(kind, RBF).mean_acc, abs=0.05)
