import math

import pytest

from cvq_kernel.config import ExperimentConfig, build_config, dump_config, load_config
from cvq_kernel.utils.exceptions import ConfigError
from cvq_kernel.utils.generic_utils import SEED_ENV, set_cvq_env


def _write(tmp_path, text, name="config.yaml"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_defaults():
    config = build_config()
    assert config.master_seed == 0
    assert config.gates_db == [2.0, 4.0, 6.0, 8.0]
    assert config.samples_per_angle == 10_000
    assert config.noise.ancilla_pure_db == 10.0
    assert config.protocol.n_datasets == 10
    assert config.dataset.n_samples == 300


def test_file_values(tmp_path):
    path = _write(
        tmp_path,
        "master_seed: 7\ngates_db: [8.0]\nnoise:\n  detection_efficiency: 0.9\nprotocol:\n  n_shuffles: 2\n",
    )
    config = load_config(path)
    assert config.master_seed == 7
    assert config.gates_db == [8.0]
    assert config.noise.detection_efficiency == 0.9
    assert config.noise.ancilla_efficiency == 0.75
    assert config.protocol.n_shuffles == 2


def test_precedence(tmp_path, monkeypatch):
    path = _write(tmp_path, "master_seed: 7\nsamples_per_angle: 500\n")
    config = build_config(path, overrides={"master_seed": 9, "samples_per_angle": None})
    assert config.master_seed == 9
    assert config.samples_per_angle == 500

    monkeypatch.setenv(SEED_ENV, "")
    set_cvq_env(42)
    assert build_config(path, overrides={"master_seed": 9}).master_seed == 42
    assert build_config(path, use_env=False).master_seed == 7


def test_nested_overrides_merge(tmp_path):
    path = _write(tmp_path, "dataset:\n  kind: circles\n  n_samples: 40\n")
    config = build_config(path, overrides={"dataset": {"kind": "blobs"}})
    assert config.dataset.kind == "blobs"
    assert config.dataset.n_samples == 40


def test_bad_env_seed(monkeypatch):
    monkeypatch.setenv(SEED_ENV, "seven")
    with pytest.raises(ConfigError):
        build_config()


def test_syntax_error_reports_line(tmp_path):
    path = _write(tmp_path, "master_seed: 1\ngates_db: [2.0, 4.0\nnoise: {}\n")
    with pytest.raises(ConfigError, match="line"):
        build_config(path)


def test_invalid_value_reports_line(tmp_path):
    path = _write(tmp_path, "master_seed: 1\nsamples_per_angle: 1\n")
    with pytest.raises(ConfigError, match="line 2"):
        build_config(path)


@pytest.mark.parametrize(
    "text",
    [
        "colour: red\n",
        "noise:\n  ancilla_efficiency: 1.5\n",
        "noise:\n  ancilla_pure_db: 4000\n",
        "gates_db: [-1.0]\n",
        "dataset:\n  kind: spirals\n",
        "- 1\n- 2\n",
    ],
)
def test_invalid_files(tmp_path, text):
    with pytest.raises(ConfigError):
        build_config(_write(tmp_path, text))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        build_config(tmp_path / "absent.yaml")


def test_empty_file_gives_defaults(tmp_path):
    assert build_config(_write(tmp_path, "")) == ExperimentConfig()


def test_dump_and_load(tmp_path):
    config = ExperimentConfig(master_seed=3, gates_db=[4.0], noise={"ancilla_pure_db": math.inf})
    path = tmp_path / "dumped.yaml"
    dump_config(config, path)
    loaded = load_config(path)
    assert loaded == config
    assert math.isinf(loaded.noise.ancilla_pure_db)


def test_infinite_ancilla_accepted(tmp_path):
    config = build_config(_write(tmp_path, "noise:\n  ancilla_pure_db: .inf\n  ancilla_efficiency: 1.0\n"))
    assert config.noise.is_ideal_ancilla
    assert math.isinf(config.noise.ancilla_variances()[1])
