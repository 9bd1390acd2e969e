"""
Single train/test classification experiment.

The dataset is standardized, discretized and split; the SVM is trained on
the lattice points and evaluated on the held-out points and on every cell
of the 26 x 26 lattice, which outlines the decision boundary.
"""
from __future__ import annotations

import itertools

import numpy as np
import pandas as pd

from cvq_kernel.data.datasets import generate_dataset
from cvq_kernel.data.preprocessing import LatticeDataset, discretize, lattice_to_continuous, standardize
from cvq_kernel.data.splits import split_train_test
from cvq_kernel.experiments.base import Experiment
from cvq_kernel.experiments.utils import table_for
from cvq_kernel.kernels.matrix import cross_matrix_from_table, kernel_matrix_from_table
from cvq_kernel.kernels.rbf import rbf_matrix
from cvq_kernel.svm.model import decision_function, train
from cvq_kernel.utils.commons import (
    CLOSED_FORM,
    DATASET_KINDS,
    LATTICE_POINTS,
    MEASURED,
    RBF,
    SCHEMA_DATASET,
    SCHEMA_DECISION_GRID,
    SCHEMA_LATTICE,
    SCHEMA_PREDICTIONS,
)
from cvq_kernel.utils.exceptions import ConvergenceError, InvalidArgumentError
from cvq_kernel.utils.generic_utils import derive_seed
from cvq_kernel.utils.logger import LOGGER

PREDICTION_COLUMNS = ["m1", "m2", "label", "decision_value", "predicted"]
GRID_COLUMNS = ["m1", "m2", "decision_value"]

# Key slot of the train/test split seed; slot 0 is the dataset seed.
_SPLIT_SLOT = 1


def lattice_grid() -> LatticeDataset:
    """
    Every cell of the 26 x 26 lattice, m1-major.

    Returns
    -------
    LatticeDataset
        676 points with placeholder labels.
    """
    coords = np.array(list(itertools.product(range(LATTICE_POINTS), repeat=2)))
    return LatticeDataset(coords, np.ones(coords.shape[0], dtype=int))


def held_out_size(n: int) -> int:
    """
    Test-set size of the single split, a quarter of the data (75 of 300).

    Parameters
    ----------
    n : int
        Number of points.

    Returns
    -------
    int
        Test size.
    """
    return max(1, n // 4)


class ClassifyExperiment(Experiment):
    """
    Trains one SVM and writes its model, test predictions and decision grid.
    """

    def build(
        self,
        dataset_kind: str | None = None,
        gate_db: float | None = None,
        source: str = CLOSED_FORM,
        table: str | None = None,
        **kwargs,
    ) -> dict:
        """
        Build run spec.

        Parameters
        ----------
        dataset_kind : str
            Dataset kind. Defaults to the configured kind.
        gate_db : float
            Gate level in dB; unused by the RBF baseline.
        source : str
            Kernel table source or "rbf".
        table : str
            CSV file of a measured kernel table.

        Returns
        -------
        dict
            Run spec.
        """
        kind = self.config.dataset.kind if dataset_kind is None else dataset_kind
        if kind not in DATASET_KINDS:
            msg = f"Unknown dataset kind '{kind}'."
            LOGGER.error(msg)
            raise InvalidArgumentError(msg)
        if table is not None:
            source = MEASURED
        if source != RBF and gate_db is None:
            msg = f"Kernel source '{source}' needs a gate level."
            LOGGER.error(msg)
            raise InvalidArgumentError(msg)
        kind_index = DATASET_KINDS.index(kind)
        seed = self.config.master_seed
        return {
            "dataset_kind": kind,
            "gate_db": None if source == RBF else float(gate_db),
            "source": source,
            "table": table,
            "dataset_seed": derive_seed(seed, kind_index, 0, 0),
            "split_seed": derive_seed(seed, kind_index, 0, _SPLIT_SLOT),
        }

    def _kernels(self, spec: dict, train_set: LatticeDataset, test_set: LatticeDataset, grid: LatticeDataset) -> tuple:
        if spec["source"] == RBF:
            gamma = self.config.protocol.rbf_gamma
            points = lattice_to_continuous(train_set.coords)
            return (
                rbf_matrix(points, gamma=gamma),
                rbf_matrix(lattice_to_continuous(test_set.coords), points, gamma=gamma),
                rbf_matrix(lattice_to_continuous(grid.coords), points, gamma=gamma),
            )
        kernel_table = table_for(self.config, spec["gate_db"], spec["source"], spec["table"])
        return (
            kernel_matrix_from_table(train_set, kernel_table).values,
            cross_matrix_from_table(test_set, train_set, kernel_table),
            cross_matrix_from_table(grid, train_set, kernel_table),
        )

    def execute(self, spec: dict) -> list:
        LOGGER.info(f"Generating {spec['dataset_kind']} dataset.")
        continuous = standardize(generate_dataset(spec["dataset_kind"], self.config.dataset, spec["dataset_seed"]))
        lattice = discretize(continuous)
        n_test = held_out_size(lattice.size)
        train_set, test_set = split_train_test(lattice, lattice.size - n_test, n_test, spec["split_seed"])
        grid = lattice_grid()
        k_train, k_test, k_grid = self._kernels(spec, train_set, test_set, grid)

        LOGGER.info(f"Training SVM on {train_set.size} points.")
        try:
            model = train(
                k_train,
                train_set.labels,
                provenance=spec["source"],
                coords=train_set.coords,
                c=self.config.protocol.c,
                tol=self.config.protocol.tol,
                seed=spec["split_seed"],
            )
        except ConvergenceError as err:
            path = self.store.write_json(err.report(), "convergence_report.json")
            msg = f"SVM training did not converge, report written to {path}."
            LOGGER.error(msg)
            raise ConvergenceError(msg, err.alpha, err.iterations, err.gap) from err

        test_values = decision_function(model, k_test)
        predicted = np.where(test_values >= 0, 1, -1)
        accuracy = float(np.mean(predicted == test_set.labels))
        LOGGER.info(f"Test accuracy {accuracy:.4f}.")

        predictions = pd.DataFrame(
            {
                "m1": test_set.coords[:, 0],
                "m2": test_set.coords[:, 1],
                "label": test_set.labels,
                "decision_value": test_values,
                "predicted": predicted,
            },
            columns=PREDICTION_COLUMNS,
        )
        decision_grid = pd.DataFrame(
            {"m1": grid.coords[:, 0], "m2": grid.coords[:, 1], "decision_value": decision_function(model, k_grid)},
            columns=GRID_COLUMNS,
        )
        run = {
            "dataset_kind": spec["dataset_kind"],
            "gate_db": spec["gate_db"],
            "source": spec["source"],
            "dataset_seed": spec["dataset_seed"],
            "split_seed": spec["split_seed"],
            "accuracy": accuracy,
        }
        return [
            self.store.write_df(continuous.to_frame(), "dataset.csv", SCHEMA_DATASET),
            self.store.write_df(lattice.to_frame(), "lattice.csv", SCHEMA_LATTICE),
            self.store.write_json({"run": run, "model": model.to_dict()}, "model.json"),
            self.store.write_df(predictions, "predictions.csv", SCHEMA_PREDICTIONS),
            self.store.write_df(decision_grid, "decision_grid.csv", SCHEMA_DECISION_GRID),
        ]
