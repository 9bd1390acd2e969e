"""
Kernel matrix assembly module.
"""
from __future__ import annotations

import typing
from dataclasses import dataclass

import numpy as np

from cvq_kernel.kernels.squeezing import kappa_array
from cvq_kernel.utils.commons import LATTICE_MAX
from cvq_kernel.utils.exceptions import InvalidArgumentError

if typing.TYPE_CHECKING:
    from cvq_kernel.data.preprocessing import LatticeDataset
    from cvq_kernel.kernels.table import KernelTable
    from cvq_kernel.kernels.units import GateLevel


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """
    Dense symmetric kernel matrix.

    Attributes
    ----------
    values : np.ndarray
        n x n matrix.
    provenance : str
        Kernel source tag (table source or "rbf").
    """

    values: np.ndarray
    provenance: str

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise InvalidArgumentError(f"Kernel matrix must be square, got shape {values.shape}.")
        if not np.allclose(values, values.T, rtol=0.0, atol=1e-12):
            raise InvalidArgumentError("Kernel matrix must be symmetric.")
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        """Number of data points."""
        return self.values.shape[0]

    def min_eigenvalue(self) -> float:
        """
        Smallest eigenvalue.

        Returns
        -------
        float
            Minimum eigenvalue of the symmetric matrix.
        """
        return float(np.linalg.eigvalsh(self.values)[0])


def _check_coords(coords: np.ndarray) -> np.ndarray:
    coords = np.asarray(coords)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise InvalidArgumentError(f"Lattice coordinates must have shape (n, 2), got {coords.shape}.")
    if np.any(coords < 0) or np.any(coords > LATTICE_MAX):
        raise InvalidArgumentError(f"Lattice coordinates must lie in 0..{LATTICE_MAX}.")
    return coords.astype(int)


def _lookup(rows: np.ndarray, cols: np.ndarray, table: KernelTable) -> np.ndarray:
    values = table.as_array()
    d1 = np.abs(rows[:, None, 0] - cols[None, :, 0])
    d2 = np.abs(rows[:, None, 1] - cols[None, :, 1])
    return values[d1] * values[d2]


def kernel_matrix_from_table(data: LatticeDataset, table: KernelTable) -> KernelMatrix:
    """
    Assemble the kernel matrix of lattice data by table lookup.

    Entry (i, j) is table[|m_i1 - m_j1|] * table[|m_i2 - m_j2|].

    Parameters
    ----------
    data : LatticeDataset
        Lattice points.
    table : KernelTable
        Kernel values at the 26 lattice differences.

    Returns
    -------
    KernelMatrix
        Symmetric kernel matrix.
    """
    coords = _check_coords(data.coords)
    return KernelMatrix(values=_lookup(coords, coords, table), provenance=table.source)


def cross_matrix_from_table(rows: LatticeDataset, cols: LatticeDataset, table: KernelTable) -> np.ndarray:
    """
    Kernel values between two lattice datasets (e.g. test versus train).

    Parameters
    ----------
    rows : LatticeDataset
        Query points.
    cols : LatticeDataset
        Training points.
    table : KernelTable
        Kernel table.

    Returns
    -------
    np.ndarray
        Matrix of shape (len(rows), len(cols)).
    """
    return _lookup(_check_coords(rows.coords), _check_coords(cols.coords), table)


def kernel_matrix_continuous(gate: GateLevel, x: np.ndarray, y: np.ndarray | None = None) -> np.ndarray:
    """
    Closed-form kernel between continuous points, without discretization.

    Parameters
    ----------
    gate : GateLevel
        Gate-squeezing level.
    x : np.ndarray
        Points of shape (n, 2).
    y : np.ndarray
        Points of shape (m, 2). Defaults to x.

    Returns
    -------
    np.ndarray
        Matrix of shape (n, m).
    """
    x = np.asarray(x, dtype=float)
    y = x if y is None else np.asarray(y, dtype=float)
    out = np.ones((x.shape[0], y.shape[0]))
    for k in range(x.shape[1]):
        out *= kappa_array(gate, np.abs(x[:, None, k] - y[None, :, k]))
    return out
