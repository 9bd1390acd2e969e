"""
Synthetic dataset module.

Labels are mapped from {0, 1} to {-1, +1}; for circles the inner circle
is class +1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from pydantic import BaseModel, validator
from sklearn.datasets import make_blobs, make_circles, make_moons

from cvq_kernel.utils.commons import BLOBS, CIRCLES, DATASET_KINDS, MOONS
from cvq_kernel.utils.exceptions import InvalidArgumentError

DATASET_COLUMNS = ["x1", "x2", "label"]

# Blob midpoints are drawn uniformly from this box.
BLOBS_MIDPOINT_BOX = (-2.0, 2.0)
BLOBS_SEPARATION_SDS = 6.0
BLOBS_MIN_SEPARATION = 1.0


@dataclass(frozen=True, eq=False)
class LabeledDataset:
    """
    Two-dimensional points with labels in {-1, +1}.

    Attributes
    ----------
    points : np.ndarray
        Coordinates of shape (n, 2).
    labels : np.ndarray
        Integer labels of shape (n,).
    kind : str
        Generator name.
    seed : int | None
        Generator seed.
    params : dict
        Generator parameters.
    """

    points: np.ndarray
    labels: np.ndarray
    kind: str = "custom"
    seed: int | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=float)
        labels = np.asarray(self.labels).astype(int)
        if points.ndim != 2 or points.shape[1] != 2:
            raise InvalidArgumentError(f"Points must have shape (n, 2), got {points.shape}.")
        if labels.shape != (points.shape[0],):
            raise InvalidArgumentError("Points and labels must have the same length.")
        if points.shape[0] < 2:
            raise InvalidArgumentError("A dataset needs at least two points.")
        if not np.all(np.isin(labels, (-1, 1))):
            raise InvalidArgumentError("Labels must be -1 or +1.")
        if not (np.any(labels == 1) and np.any(labels == -1)):
            raise InvalidArgumentError("Both classes must be present.")
        if not np.all(np.isfinite(points)):
            raise InvalidArgumentError("Points must be finite.")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        """Number of points."""
        return self.labels.shape[0]

    def subset(self, indices: np.ndarray) -> "LabeledDataset":
        """
        Return the rows at the given indices.

        Parameters
        ----------
        indices : np.ndarray
            Row indices.

        Returns
        -------
        LabeledDataset
            Subset with the same metadata.
        """
        return LabeledDataset(self.points[indices], self.labels[indices], self.kind, self.seed, self.params)

    def to_frame(self) -> pd.DataFrame:
        """
        Return the dataset in CSV column order.

        Returns
        -------
        pd.DataFrame
            Columns x1, x2, label.
        """
        return pd.DataFrame(
            {"x1": self.points[:, 0], "x2": self.points[:, 1], "label": self.labels}, columns=DATASET_COLUMNS
        )


class DatasetParams(BaseModel):
    """
    Generator parameters of the synthetic datasets.
    """

    kind: str = MOONS
    """Dataset kind used by single-dataset commands."""

    n_samples: int = 300
    """Number of points, even."""

    moons_noise: float = 0.15
    """Gaussian noise standard deviation of the moons."""

    circles_factor: float = 0.5
    """Inner over outer radius of the circles."""

    circles_noise: float = 0.08
    """Gaussian noise standard deviation of the circles."""

    blobs_centers: int = 2
    """Number of blobs."""

    blobs_sd: float = 0.8
    """Cluster standard deviation of the blobs."""

    class Config:
        extra = "forbid"

    @validator("kind")
    def check_kind(cls, value: str) -> str:
        if value not in DATASET_KINDS:
            raise ValueError(f"unknown dataset kind '{value}'")
        return value


def _check_size(n: int) -> None:
    if n < 4 or n % 2:
        raise InvalidArgumentError(f"Dataset size must be an even number >= 4, got {n}.")


def _check_sd(name: str, value: float) -> None:
    if not value >= 0:
        raise InvalidArgumentError(f"{name} must be non-negative, got {value}.")


def _to_signed(labels: np.ndarray) -> np.ndarray:
    return 2 * labels.astype(int) - 1


def gen_moons(n: int = 300, noise_sd: float = 0.15, seed: int = 0) -> LabeledDataset:
    """
    Two interleaving half circles.

    Parameters
    ----------
    n : int
        Number of points, even.
    noise_sd : float
        Standard deviation of the isotropic Gaussian noise.
    seed : int
        Generator seed.

    Returns
    -------
    LabeledDataset
        n / 2 points per class.
    """
    _check_size(n)
    _check_sd("noise_sd", noise_sd)
    points, labels = make_moons(n_samples=n, noise=noise_sd, random_state=seed)
    return LabeledDataset(points, _to_signed(labels), MOONS, seed, {"noise_sd": noise_sd})


def gen_circles(n: int = 300, factor: float = 0.5, noise_sd: float = 0.08, seed: int = 0) -> LabeledDataset:
    """
    Two concentric circles; the inner one is class +1.

    Parameters
    ----------
    n : int
        Number of points, even.
    factor : float
        Inner over outer radius, in (0, 1).
    noise_sd : float
        Standard deviation of the isotropic Gaussian noise.
    seed : int
        Generator seed.

    Returns
    -------
    LabeledDataset
        n / 2 points per class.
    """
    _check_size(n)
    _check_sd("noise_sd", noise_sd)
    if not 0 < factor < 1:
        raise InvalidArgumentError(f"Circle factor must be in (0, 1), got {factor}.")
    points, labels = make_circles(n_samples=n, factor=factor, noise=noise_sd, random_state=seed)
    return LabeledDataset(points, _to_signed(labels), CIRCLES, seed, {"factor": factor, "noise_sd": noise_sd})


def blob_centers(cluster_sd: float, seed: int) -> np.ndarray:
    """
    Two cluster centers, symmetric about a seed-chosen midpoint.

    The centers lie BLOBS_SEPARATION_SDS cluster standard deviations apart
    (at least BLOBS_MIN_SEPARATION) along a seed-chosen direction.

    Parameters
    ----------
    cluster_sd : float
        Cluster standard deviation.
    seed : int
        Generator seed.

    Returns
    -------
    np.ndarray
        Centers of shape (2, 2).
    """
    rng = np.random.default_rng(seed)
    midpoint = rng.uniform(*BLOBS_MIDPOINT_BOX, size=2)
    angle = rng.uniform(0.0, np.pi)
    half = 0.5 * max(BLOBS_SEPARATION_SDS * cluster_sd, BLOBS_MIN_SEPARATION)
    offset = half * np.array([np.cos(angle), np.sin(angle)])
    return np.stack([midpoint - offset, midpoint + offset])


def gen_blobs(n: int = 300, centers: int = 2, cluster_sd: float = 0.8, seed: int = 0) -> LabeledDataset:
    """
    Two isotropic Gaussian clusters at well separated, seed-chosen centers.

    Parameters
    ----------
    n : int
        Number of points, even.
    centers : int
        Number of clusters; binary classification needs two.
    cluster_sd : float
        Cluster standard deviation.
    seed : int
        Generator seed.

    Returns
    -------
    LabeledDataset
        n / 2 points per class.
    """
    _check_size(n)
    _check_sd("cluster_sd", cluster_sd)
    if centers != 2:
        raise InvalidArgumentError(f"Blobs need exactly two centers, got {centers}.")
    points, labels = make_blobs(
        n_samples=n,
        centers=blob_centers(cluster_sd, seed),
        cluster_std=cluster_sd,
        random_state=seed,
    )
    return LabeledDataset(points, _to_signed(labels), BLOBS, seed, {"centers": centers, "cluster_sd": cluster_sd})


def generate_dataset(kind: str, params: DatasetParams, seed: int) -> LabeledDataset:
    """
    Generate a dataset by name.

    Parameters
    ----------
    kind : str
        One of moons, circles, blobs.
    params : DatasetParams
        Generator parameters.
    seed : int
        Generator seed.

    Returns
    -------
    LabeledDataset
        The dataset.
    """
    if kind == MOONS:
        return gen_moons(params.n_samples, params.moons_noise, seed)
    if kind == CIRCLES:
        return gen_circles(params.n_samples, params.circles_factor, params.circles_noise, seed)
    if kind == BLOBS:
        return gen_blobs(params.n_samples, params.blobs_centers, params.blobs_sd, seed)
    raise InvalidArgumentError(f"Unknown dataset kind '{kind}'.")
