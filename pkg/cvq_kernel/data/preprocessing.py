"""
Standardization and lattice discretization module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from cvq_kernel.data.datasets import LabeledDataset
from cvq_kernel.utils.commons import HALF_PI, LATTICE_MAX, LATTICE_STEP
from cvq_kernel.utils.exceptions import DegenerateInputError, InvalidArgumentError

LATTICE_COLUMNS = ["m1", "m2", "label"]


@dataclass(frozen=True, eq=False)
class LatticeDataset:
    """
    Integer images of standardized points on the 26 x 26 lattice.

    Attributes
    ----------
    coords : np.ndarray
        Integer coordinates of shape (n, 2) in 0..25.
    labels : np.ndarray
        Labels in {-1, +1}.
    source : LabeledDataset | None
        Continuous dataset the lattice was built from.
    source_rows : np.ndarray | None
        Row of `source` behind each lattice point; None means every row in order.
    """

    coords: np.ndarray
    labels: np.ndarray
    source: LabeledDataset | None = None
    source_rows: np.ndarray | None = None

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords)
        labels = np.asarray(self.labels).astype(int)
        if coords.ndim != 2 or coords.shape[1] != 2:
            raise InvalidArgumentError(f"Lattice coordinates must have shape (n, 2), got {coords.shape}.")
        if labels.shape != (coords.shape[0],):
            raise InvalidArgumentError("Coordinates and labels must have the same length.")
        if np.any(coords != np.round(coords)) or np.any(coords < 0) or np.any(coords > LATTICE_MAX):
            raise InvalidArgumentError(f"Lattice coordinates must be integers in 0..{LATTICE_MAX}.")
        object.__setattr__(self, "coords", coords.astype(int))
        object.__setattr__(self, "labels", labels)
        if self.source is None:
            object.__setattr__(self, "source_rows", None)
            return
        rows = np.arange(self.source.size) if self.source_rows is None else np.asarray(self.source_rows, dtype=int)
        if rows.shape != labels.shape or np.any(rows < 0) or np.any(rows >= self.source.size):
            raise InvalidArgumentError("Source rows must index the source dataset, one per lattice point.")
        if np.any(self.source.labels[rows] != labels):
            raise InvalidArgumentError("Lattice labels disagree with the source dataset.")
        object.__setattr__(self, "source_rows", rows)

    @property
    def size(self) -> int:
        """Number of points."""
        return self.labels.shape[0]

    def subset(self, indices: np.ndarray) -> "LatticeDataset":
        """
        Return the rows at the given indices.

        Parameters
        ----------
        indices : np.ndarray
            Row indices.

        Returns
        -------
        LatticeDataset
            Subset linked to the same source rows.
        """
        rows = None if self.source is None else self.source_rows[indices]
        return LatticeDataset(self.coords[indices], self.labels[indices], self.source, rows)

    def source_points(self) -> np.ndarray | None:
        """
        Continuous points behind the lattice points.

        Returns
        -------
        np.ndarray | None
            Points of shape (n, 2), or None without a source.
        """
        return None if self.source is None else self.source.points[self.source_rows]

    def to_frame(self) -> pd.DataFrame:
        """
        Return the lattice in CSV column order.

        Returns
        -------
        pd.DataFrame
            Columns m1, m2, label.
        """
        return pd.DataFrame(
            {"m1": self.coords[:, 0], "m2": self.coords[:, 1], "label": self.labels}, columns=LATTICE_COLUMNS
        )


def _standardize_column(column: np.ndarray) -> np.ndarray:
    lo, hi = column.min(), column.max()
    if hi - lo == 0:
        raise DegenerateInputError("A coordinate has zero spread and cannot be standardized.")
    if lo == -HALF_PI and hi == HALF_PI:
        return column.copy()
    out = -HALF_PI + (column - lo) / (hi - lo) * math.pi
    out = np.clip(out, -HALF_PI, HALF_PI)
    out[column == lo] = -HALF_PI
    out[column == hi] = HALF_PI
    return out


def standardize(ds: LabeledDataset) -> LabeledDataset:
    """
    Affine map of each coordinate onto exactly [-pi/2, pi/2].

    Parameters
    ----------
    ds : LabeledDataset
        Input dataset.

    Returns
    -------
    LabeledDataset
        Dataset whose coordinate differences are all within [0, pi].

    Raises
    ------
    DegenerateInputError
        If a coordinate has zero spread.
    """
    points = np.column_stack([_standardize_column(ds.points[:, k]) for k in range(ds.points.shape[1])])
    return LabeledDataset(points, ds.labels, ds.kind, ds.seed, ds.params)


def discretize(ds: LabeledDataset) -> LatticeDataset:
    """
    Map standardized points onto the 26 x 26 lattice.

    m = round((x + pi/2) / (pi/25)), rounding halves away from zero, so x = 0
    maps to 13.

    Parameters
    ----------
    ds : LabeledDataset
        Standardized dataset.

    Returns
    -------
    LatticeDataset
        Lattice image linked to its source.
    """
    if np.any(np.abs(ds.points) > HALF_PI):
        raise InvalidArgumentError("Discretization needs standardized points in [-pi/2, pi/2].")
    shifted = ds.points / LATTICE_STEP + LATTICE_MAX / 2
    coords = np.clip(np.floor(shifted + 0.5), 0, LATTICE_MAX).astype(int)
    return LatticeDataset(coords, ds.labels, ds)


def lattice_to_continuous(coords: np.ndarray) -> np.ndarray:
    """
    Continuous coordinates of lattice points.

    Parameters
    ----------
    coords : np.ndarray
        Integer coordinates in 0..25.

    Returns
    -------
    np.ndarray
        -pi/2 + m pi / 25.
    """
    return -HALF_PI + np.asarray(coords, dtype=float) * LATTICE_STEP
