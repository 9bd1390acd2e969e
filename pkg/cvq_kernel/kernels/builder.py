"""
Kernel table factory module.
"""
from __future__ import annotations

import typing

from cvq_kernel.kernels.table import build_table, read_table_csv
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.processor.sweep import noisy_analytic_table, simulated_table
from cvq_kernel.utils.commons import CLOSED_FORM, MEASURED, NOISY_ANALYTIC, SAMPLES_PER_ANGLE, SIMULATED
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from pathlib import Path

    from cvq_kernel.kernels.table import KernelTable
    from cvq_kernel.kernels.units import GateLevel


def _closed_form(gate: GateLevel, **kwargs) -> KernelTable:
    return build_table(gate)


def _noisy_analytic(gate: GateLevel, noise: NoiseModel, **kwargs) -> KernelTable:
    return noisy_analytic_table(gate, noise)


def _simulated(gate: GateLevel, noise: NoiseModel, n_per_angle: int, seed: int, **kwargs) -> KernelTable:
    return simulated_table(gate, noise, n_per_angle, seed)


def _measured(gate: GateLevel, path: str | Path | None = None, **kwargs) -> KernelTable:
    if path is None:
        raise InvalidArgumentError("A measured kernel table needs a CSV path.")
    return read_table_csv(path, gate)


REGISTRY = {
    CLOSED_FORM: _closed_form,
    NOISY_ANALYTIC: _noisy_analytic,
    SIMULATED: _simulated,
    MEASURED: _measured,
}


def build_kernel_table(
    gate: GateLevel,
    source: str,
    noise: NoiseModel | None = None,
    n_per_angle: int = SAMPLES_PER_ANGLE,
    seed: int = 0,
    path: str | Path | None = None,
) -> KernelTable:
    """
    Build a kernel table from any source.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    source : str
        One of closed-form, noisy-analytic, simulated, measured-import.
    noise : NoiseModel
        Gate imperfections for processor sources. Defaults to the calibrated model.
    n_per_angle : int
        Samples per homodyne angle for the simulated source.
    seed : int
        Master seed for the simulated source.
    path : str | Path
        CSV file for the measured-import source.

    Returns
    -------
    KernelTable
        The table.
    """
    try:
        builder = REGISTRY[source]
    except KeyError:
        msg = f"Unknown kernel source '{source}', expected one of {list(REGISTRY)}."
        LOGGER.error(msg)
        raise InvalidArgumentError(msg)
    noise = NoiseModel.calibrated() if noise is None else noise
    return builder(gate, noise=noise, n_per_angle=n_per_angle, seed=seed, path=path)
