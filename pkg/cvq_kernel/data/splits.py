"""
Train/test splitting and K-fold planning module.
"""
from __future__ import annotations

import typing
from dataclasses import dataclass

import numpy as np
from sklearn.model_selection import KFold, train_test_split

from cvq_kernel.utils.exceptions import InvalidArgumentError

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

    from cvq_kernel.data.datasets import LabeledDataset
    from cvq_kernel.data.preprocessing import LatticeDataset

    Dataset = typing.Union[LabeledDataset, LatticeDataset]

N_TRAIN = 225
N_TEST = 75
K_FOLDS = 4


@dataclass(frozen=True, eq=False)
class FoldPlan:
    """
    Partition of 0..n-1 into K test folds.

    Attributes
    ----------
    folds : tuple[np.ndarray, ...]
        Test indices of each fold.
    seed : int
        Shuffle seed.
    repetition : int
        Repetition index of the shuffle.
    """

    folds: tuple
    seed: int
    repetition: int = 0

    @property
    def n(self) -> int:
        """Number of points covered."""
        return int(sum(len(f) for f in self.folds))

    def splits(self) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """
        Iterate over (train, test) index pairs, one per fold.

        Returns
        -------
        Iterator[tuple[np.ndarray, np.ndarray]]
            Train on K-1 folds, test on the remaining one.
        """
        for k, test in enumerate(self.folds):
            train = np.concatenate([f for i, f in enumerate(self.folds) if i != k])
            yield np.sort(train), test


def split_indices(n: int, n_train: int = N_TRAIN, n_test: int = N_TEST, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """
    Seeded disjoint train/test index split.

    Parameters
    ----------
    n : int
        Number of points.
    n_train : int
        Training size.
    n_test : int
        Test size.
    seed : int
        Shuffle seed.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        Train and test indices.
    """
    if n_train < 1 or n_test < 1 or n != n_train + n_test:
        raise InvalidArgumentError(f"Cannot split {n} points into {n_train} training and {n_test} test points.")
    train, test = train_test_split(np.arange(n), train_size=n_train, test_size=n_test, random_state=seed, shuffle=True)
    return train, test


def split_train_test(
    ds: Dataset,
    n_train: int = N_TRAIN,
    n_test: int = N_TEST,
    seed: int = 0,
) -> tuple[Dataset, Dataset]:
    """
    Split a dataset into training and test parts.

    Parameters
    ----------
    ds : LabeledDataset | LatticeDataset
        Dataset to split.
    n_train : int
        Training size.
    n_test : int
        Test size.
    seed : int
        Shuffle seed.

    Returns
    -------
    tuple
        (train, test) datasets.
    """
    train, test = split_indices(ds.size, n_train, n_test, seed)
    return ds.subset(train), ds.subset(test)


def kfold_plan(n: int, k: int = K_FOLDS, shuffle_seed: int = 0, repetition: int = 0) -> FoldPlan:
    """
    Shuffled K-fold partition.

    Parameters
    ----------
    n : int
        Number of points.
    k : int
        Number of folds.
    shuffle_seed : int
        Shuffle seed.
    repetition : int
        Repetition index recorded on the plan.

    Returns
    -------
    FoldPlan
        Fold sizes differ by at most one.
    """
    if k < 2:
        raise InvalidArgumentError(f"K-fold needs at least two folds, got {k}.")
    if n < k:
        raise InvalidArgumentError(f"Cannot split {n} points into {k} folds.")
    splitter = KFold(n_splits=k, shuffle=True, random_state=shuffle_seed)
    folds = tuple(test for _, test in splitter.split(np.arange(n)))
    return FoldPlan(folds=folds, seed=shuffle_seed, repetition=repetition)
