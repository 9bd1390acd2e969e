"""
Kernel table module.

Discretized data only ever needs the kernel at the 26 lattice differences
m pi / 25, m = 0..25, so a table of those values replaces kernel evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from cvq_kernel.kernels.squeezing import kappa_of_difference
from cvq_kernel.kernels.units import GateLevel
from cvq_kernel.utils.commons import CLOSED_FORM, LATTICE_POINTS, LATTICE_STEP, MEASURED, SIMULATED, TABLE_SOURCES
from cvq_kernel.utils.exceptions import InvalidArgumentError

TABLE_COLUMNS = ["difference_index", "difference_rad", "kappa"]


@dataclass(frozen=True)
class KernelTable:
    """
    Kernel values at the 26 lattice differences for one gate level.

    Attributes
    ----------
    gate : GateLevel
        Gate-squeezing level.
    values : tuple[float, ...]
        kappa_m for differences m pi / 25.
    source : str
        Provenance tag.
    n_per_angle : int | None
        Homodyne samples per angle, for simulated tables.
    seed : int | None
        Master seed, for simulated tables.
    """

    gate: GateLevel
    values: tuple
    source: str = CLOSED_FORM
    n_per_angle: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.source not in TABLE_SOURCES:
            raise InvalidArgumentError(f"Unknown kernel source '{self.source}'.")
        if len(self.values) != LATTICE_POINTS:
            raise InvalidArgumentError(f"Kernel table needs {LATTICE_POINTS} values, got {len(self.values)}.")
        arr = np.asarray(self.values, dtype=float)
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0) or np.any(arr > 1):
            raise InvalidArgumentError("Kernel table values must lie in (0, 1].")
        if self.source == CLOSED_FORM:
            if abs(arr[0] - 1.0) > 1e-12:
                raise InvalidArgumentError("Closed-form table must start at 1.")
            if np.any(np.diff(arr) > 1e-15):
                raise InvalidArgumentError("Closed-form table must be non-increasing.")

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def as_array(self) -> np.ndarray:
        """
        Return the values as an array.

        Returns
        -------
        np.ndarray
            26 kernel values.
        """
        return np.asarray(self.values, dtype=float)

    def to_frame(self) -> pd.DataFrame:
        """
        Return the table as a DataFrame in CSV column order.

        Returns
        -------
        pd.DataFrame
            One row per lattice difference.
        """
        index = np.arange(LATTICE_POINTS)
        frame = pd.DataFrame(
            {
                "difference_index": index,
                "difference_rad": index * LATTICE_STEP,
                "kappa": self.as_array(),
            }
        )
        if self.source == SIMULATED:
            frame["n_per_angle"] = self.n_per_angle
            frame["seed"] = self.seed
        return frame


def build_table(gate: GateLevel) -> KernelTable:
    """
    Closed-form kernel table.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.

    Returns
    -------
    KernelTable
        26 values of 1 / cosh(r_total).
    """
    values = tuple(kappa_of_difference(gate, m * LATTICE_STEP) for m in range(LATTICE_POINTS))
    return KernelTable(gate=gate, values=values, source=CLOSED_FORM)


def read_table_csv(path: str | Path, gate: GateLevel) -> KernelTable:
    """
    Import a kernel table from CSV (e.g. measured values).

    Parameters
    ----------
    path : str | Path
        CSV file with columns difference_index, difference_rad, kappa.
        Lines starting with '#' are ignored.
    gate : GateLevel
        Gate-squeezing level the table was measured at.

    Returns
    -------
    KernelTable
        Table tagged as measured-import.
    """
    frame = pd.read_csv(path, comment="#")
    missing = [c for c in TABLE_COLUMNS if c not in frame.columns]
    if missing:
        raise InvalidArgumentError(f"Kernel table CSV is missing columns {missing}.")
    frame = frame.sort_values("difference_index")
    if list(frame["difference_index"]) != list(range(LATTICE_POINTS)):
        raise InvalidArgumentError(f"Kernel table CSV must list difference indices 0..{LATTICE_POINTS - 1}.")
    return KernelTable(gate=gate, values=tuple(float(v) for v in frame["kappa"]), source=MEASURED)
