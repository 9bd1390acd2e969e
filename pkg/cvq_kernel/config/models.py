"""
Experiment configuration models.
"""
from __future__ import annotations

from pydantic import BaseModel, validator

from cvq_kernel.data.datasets import DatasetParams
from cvq_kernel.data.protocol import ProtocolParams
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.processor.sweep import DEFAULT_GATES_DB
from cvq_kernel.utils.commons import SAMPLES_PER_ANGLE


class ExperimentConfig(BaseModel):
    """
    Configuration shared by all commands.
    """

    master_seed: int = 0
    """Master seed every random stream is derived from."""

    gates_db: list[float] = list(DEFAULT_GATES_DB)
    """Gate-squeezing levels in dB."""

    samples_per_angle: int = SAMPLES_PER_ANGLE
    """Homodyne samples per angle for simulated kernels."""

    output_dir: str = "output"
    """Directory receiving CSV and JSON outputs."""

    noise: NoiseModel = NoiseModel()
    """Processor imperfections."""

    dataset: DatasetParams = DatasetParams()
    """Dataset generator parameters."""

    protocol: ProtocolParams = ProtocolParams()
    """K-fold protocol settings."""

    class Config:
        extra = "forbid"

    @validator("master_seed")
    def check_seed(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"must be non-negative, got {value}")
        return value

    @validator("gates_db", each_item=True)
    def check_gate(cls, value: float) -> float:
        if not 0 <= value < float("inf"):
            raise ValueError(f"gate level must be finite and non-negative, got {value}")
        return value

    @validator("samples_per_angle")
    def check_samples(cls, value: int) -> int:
        if value < 2:
            raise ValueError(f"must be at least 2, got {value}")
        return value
