"""
Processor noise model module.
"""
from __future__ import annotations

import math

from pydantic import BaseModel, validator

# Loss placement reproducing the ancilla and output homodyne calibrations.
CALIBRATED_ANCILLA_DB = 10.0
CALIBRATED_ANCILLA_EFFICIENCY = 0.75
CALIBRATED_DETECTION_EFFICIENCY = 0.77

# Finite ancilla levels stay far below the float overflow of 10^(dB/10).
MAX_FINITE_ANCILLA_DB = 300.0


class NoiseModel(BaseModel):
    """
    Imperfections of the measurement-induced squeezing gate.
    """

    ancilla_pure_db: float = CALIBRATED_ANCILLA_DB
    """Pure squeezing of the ancilla source in dB, inf for an ideal ancilla."""

    ancilla_efficiency: float = CALIBRATED_ANCILLA_EFFICIENCY
    """Efficiency of the ancilla path before the beam splitter."""

    detection_efficiency: float = CALIBRATED_DETECTION_EFFICIENCY
    """Efficiency of the gate output path before homodyne detection."""

    class Config:
        allow_mutation = False
        extra = "forbid"

    @validator("ancilla_pure_db")
    def check_db(cls, value: float) -> float:
        if math.isnan(value) or value < 0:
            raise ValueError(f"ancilla_pure_db must be non-negative, got {value}")
        if math.isfinite(value) and value > MAX_FINITE_ANCILLA_DB:
            raise ValueError(f"ancilla_pure_db must be at most {MAX_FINITE_ANCILLA_DB} or inf, got {value}")
        return value

    @validator("ancilla_efficiency", "detection_efficiency")
    def check_efficiency(cls, value: float) -> float:
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"efficiency must be in [0, 1], got {value}")
        return value

    @classmethod
    def ideal(cls) -> "NoiseModel":
        """
        Infinitely squeezed ancilla and lossless optics.

        Returns
        -------
        NoiseModel
            Ideal noise model.
        """
        return cls(ancilla_pure_db=math.inf, ancilla_efficiency=1.0, detection_efficiency=1.0)

    @classmethod
    def calibrated(cls) -> "NoiseModel":
        """
        10 dB ancilla with 25 % ancilla-path loss and 23 % output loss.

        Returns
        -------
        NoiseModel
            Calibrated noise model.
        """
        return cls()

    @property
    def is_ideal_ancilla(self) -> bool:
        """Whether the ancilla p-variance is unbounded."""
        return math.isinf(self.ancilla_pure_db) and self.ancilla_efficiency > 0

    def ancilla_variances(self) -> tuple[float, float]:
        """
        Quadrature variances of the ancilla as seen at the beam splitter.

        v = 1 + eta_a (10^{-+dB/10} - 1).

        Returns
        -------
        tuple[float, float]
            (v_qq, v_pp); v_pp is inf for an ideal ancilla.
        """
        eta = self.ancilla_efficiency
        if eta == 0.0:
            return 1.0, 1.0
        squeezed = 10.0 ** (-self.ancilla_pure_db / 10.0)
        antisqueezed = 10.0 ** (self.ancilla_pure_db / 10.0)
        return 1.0 + eta * (squeezed - 1.0), 1.0 + eta * (antisqueezed - 1.0)

    def squeeze_floor_db(self) -> float:
        """
        Output squeezing level reached as r_total grows without bound.

        Returns
        -------
        float
            10 log10(eta_d v_a,qq + 1 - eta_d) in dB, -inf when that is zero.
        """
        v_qq, _ = self.ancilla_variances()
        eta = self.detection_efficiency
        floor = eta * v_qq + 1.0 - eta
        return 10.0 * math.log10(floor) if floor > 0 else -math.inf
