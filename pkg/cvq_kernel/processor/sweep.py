"""
Gate sweep module.

Runs the simulated processor over gate levels and the 26 lattice
differences, producing output squeezing levels and kernel values both
analytically and from homodyne samples.
"""
from __future__ import annotations

import math
import typing

import numpy as np
import pandas as pd

from cvq_kernel.gaussian.channels import vacuum_fidelity
from cvq_kernel.gaussian.decompositions import total_squeeze
from cvq_kernel.kernels.table import KernelTable
from cvq_kernel.kernels.units import GateLevel
from cvq_kernel.processor.estimation import (
    BOOTSTRAP_RESAMPLES,
    bootstrap_kappa_stderr,
    estimate_kappa,
    kappa_from_gate,
    output_levels,
    sample_estimate,
)
from cvq_kernel.processor.gate import output_state_analytic
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.utils.commons import (
    HOMODYNE_ANGLES,
    LATTICE_POINTS,
    LATTICE_STEP,
    NOISY_ANALYTIC,
    SAMPLES_PER_ANGLE,
    SIMULATED,
)
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

DEFAULT_GATES_DB = (2.0, 4.0, 6.0, 8.0)

SWEEP_COLUMNS = [
    "gate_db",
    "diff_index",
    "diff_rad",
    "kappa_analytic",
    "kappa_sampled",
    "sq_db_analytic",
    "sq_db_sampled",
    "antisq_db_analytic",
    "antisq_db_sampled",
    "n_per_angle",
    "seed",
    "kappa_ideal",
    "sq_db_ideal",
    "antisq_db_ideal",
    "kappa_sampled_se",
]


def gate_key(gate: GateLevel) -> int:
    """
    Integer cell key of a gate level (milli-dB).

    Cells keyed by level rather than by list position give the same
    samples whatever gate list they are run in.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.

    Returns
    -------
    int
        round(1000 dB).
    """
    return int(round(gate.db * 1000))


def difference_squeeze(gate: GateLevel, index: int) -> float:
    """
    r_total for the lattice difference index * pi / 25.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    index : int
        Lattice difference index in 0..25.

    Returns
    -------
    float
        r_total in nats.
    """
    return total_squeeze(gate.nats, index * LATTICE_STEP / 2)


def noisy_analytic_table(gate: GateLevel, noise: NoiseModel) -> KernelTable:
    """
    Kernel table of the noisy processor, computed exactly.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    noise : NoiseModel
        Gate imperfections.

    Returns
    -------
    KernelTable
        Table tagged noisy-analytic.
    """
    values = tuple(
        vacuum_fidelity(output_state_analytic(difference_squeeze(gate, m), noise)) for m in range(LATTICE_POINTS)
    )
    return KernelTable(gate=gate, values=values, source=NOISY_ANALYTIC)


def simulated_table(
    gate: GateLevel,
    noise: NoiseModel,
    n_per_angle: int = SAMPLES_PER_ANGLE,
    seed: int = 0,
) -> KernelTable:
    """
    Kernel table estimated from homodyne samples of the noisy processor.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    noise : NoiseModel
        Gate imperfections.
    n_per_angle : int
        Samples per homodyne angle.
    seed : int
        Master seed.

    Returns
    -------
    KernelTable
        Table tagged simulated, recording sample count and seed.
    """
    LOGGER.info(f"Sampling kernel table at {gate.db} dB ({n_per_angle} samples per angle).")
    key = gate_key(gate)
    values = tuple(
        kappa_from_gate(difference_squeeze(gate, m), noise, n_per_angle, seed, keys=(key, m))
        for m in range(LATTICE_POINTS)
    )
    return KernelTable(gate=gate, values=values, source=SIMULATED, n_per_angle=n_per_angle, seed=seed)


def sweep_gates(
    gates_db: Sequence[float] = DEFAULT_GATES_DB,
    noise: NoiseModel | None = None,
    n_per_angle: int = SAMPLES_PER_ANGLE,
    seed: int = 0,
    n_bootstrap: int = BOOTSTRAP_RESAMPLES,
) -> pd.DataFrame:
    """
    Output levels and kernel values over gate levels and lattice differences.

    Sampled kernel values are reported unclipped.

    Parameters
    ----------
    gates_db : Sequence[float]
        Gate-squeezing levels in dB.
    noise : NoiseModel
        Gate imperfections. Defaults to the calibrated model.
    n_per_angle : int
        Samples per homodyne angle.
    seed : int
        Master seed.
    n_bootstrap : int
        Bootstrap resamples for the kernel standard error.

    Returns
    -------
    pd.DataFrame
        One row per (gate, difference), columns as SWEEP_COLUMNS.
    """
    noise = NoiseModel.calibrated() if noise is None else noise
    ideal = NoiseModel.ideal()
    rows = []
    for db in gates_db:
        gate = GateLevel.from_db(db)
        key = gate_key(gate)
        LOGGER.info(f"Sweeping gate level {gate.db} dB.")
        for m in range(LATTICE_POINTS):
            r_total = difference_squeeze(gate, m)
            analytic = output_state_analytic(r_total, noise)
            ideal_state = output_state_analytic(r_total, ideal)
            batches, estimate = sample_estimate(r_total, noise, n_per_angle, seed, keys=(key, m))
            sq_a, anti_a = output_levels(analytic)
            sq_s, anti_s = output_levels(estimate)
            sq_i, anti_i = output_levels(ideal_state)
            rows.append(
                {
                    "gate_db": gate.db,
                    "diff_index": m,
                    "diff_rad": m * LATTICE_STEP,
                    "kappa_analytic": vacuum_fidelity(analytic),
                    "kappa_sampled": estimate_kappa(estimate),
                    "sq_db_analytic": sq_a,
                    "sq_db_sampled": sq_s,
                    "antisq_db_analytic": anti_a,
                    "antisq_db_sampled": anti_s,
                    "n_per_angle": n_per_angle,
                    "seed": seed,
                    "kappa_ideal": 1.0 / math.cosh(r_total),
                    "sq_db_ideal": sq_i,
                    "antisq_db_ideal": anti_i,
                    "kappa_sampled_se": (
                        bootstrap_kappa_stderr(batches, n_bootstrap, seed, keys=(key, m, len(HOMODYNE_ANGLES)))
                        if n_bootstrap >= 2
                        else np.nan
                    ),
                }
            )
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
