"""
Helpers shared by experiments.
"""
from __future__ import annotations

import typing

from cvq_kernel.kernels.builder import build_kernel_table
from cvq_kernel.kernels.units import GateLevel
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from cvq_kernel.config.models import ExperimentConfig
    from cvq_kernel.kernels.table import KernelTable


def table_for(config: ExperimentConfig, gate_db: float, source: str, path: str | None = None) -> KernelTable:
    """
    Build one kernel table with the configured noise, sample count and seed.

    Parameters
    ----------
    config : ExperimentConfig
        Resolved configuration.
    gate_db : float
        Gate level in dB.
    source : str
        Table source.
    path : str
        CSV file for the measured-import source.

    Returns
    -------
    KernelTable
        The table.
    """
    LOGGER.info(f"Building {source} kernel table at {gate_db} dB.")
    return build_kernel_table(
        GateLevel.from_db(gate_db),
        source,
        noise=config.noise,
        n_per_angle=config.samples_per_angle,
        seed=config.master_seed,
        path=path,
    )


def format_db(gate_db: float) -> str:
    """
    Compact gate label used in output file names, e.g. 8 -> "8dB", 2.5 -> "2.5dB".

    Parameters
    ----------
    gate_db : float
        Gate level in dB.

    Returns
    -------
    str
        Label.
    """
    return f"{float(gate_db):g}dB"
