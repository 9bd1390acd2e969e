"""
K-fold accuracy protocol module.

For every dataset seed the data are generated, standardized and
discretized once; every kernel is then evaluated on the same shuffled
folds. Each dataset's accuracy is the mean over its shuffles and folds;
the report gives mean and standard deviation over datasets.
"""
from __future__ import annotations

import typing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import pandas as pd
from pydantic import BaseModel, validator

from cvq_kernel.data.datasets import DatasetParams, generate_dataset
from cvq_kernel.data.preprocessing import discretize, lattice_to_continuous, standardize
from cvq_kernel.data.splits import K_FOLDS, kfold_plan
from cvq_kernel.kernels.matrix import kernel_matrix_continuous, kernel_matrix_from_table
from cvq_kernel.kernels.rbf import DEFAULT_GAMMA, rbf_matrix
from cvq_kernel.svm.model import predict_many, train
from cvq_kernel.svm.problem import DEFAULT_C
from cvq_kernel.svm.smo import DEFAULT_TOL
from cvq_kernel.utils.commons import CLOSED_FORM, DATASET_KINDS, PROTOCOL_SOURCES, RBF
from cvq_kernel.utils.exceptions import ConvergenceError
from cvq_kernel.utils.generic_utils import derive_seed
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from cvq_kernel.kernels.table import KernelTable

REPORT_COLUMNS = ["dataset_kind", "gate_db", "kernel_source", "mean_acc", "sd_acc", "n_evals"]
DATASET_REPORT_COLUMNS = ["dataset_kind", "gate_db", "kernel_source", "dataset_index", "dataset_seed", "accuracy"]

# Key slot separating shuffle seeds from the dataset seed.
_DATASET_SLOT = 0


class ProtocolParams(BaseModel):
    """
    K-fold protocol settings.
    """

    dataset_kinds: list[str] = list(DATASET_KINDS)
    """Dataset kinds evaluated by the kfold command."""

    sources: list[str] = list(PROTOCOL_SOURCES)
    """Kernel sources compared."""

    n_datasets: int = 10
    """Datasets generated per kind."""

    n_shuffles: int = 10
    """K-fold shuffles per dataset."""

    k_folds: int = K_FOLDS
    """Number of folds."""

    rbf_gamma: float = DEFAULT_GAMMA
    """Gamma of the RBF baseline."""

    c: float = DEFAULT_C
    """SVM box bound."""

    tol: float = DEFAULT_TOL
    """SMO tolerance."""

    lattice: bool = True
    """Evaluate closed-form and RBF kernels on lattice points, else on continuous points."""

    workers: int = 1
    """Worker processes over dataset seeds."""

    class Config:
        extra = "forbid"

    @validator("dataset_kinds", each_item=True)
    def check_kind(cls, value: str) -> str:
        if value not in DATASET_KINDS:
            raise ValueError(f"unknown dataset kind '{value}'")
        return value

    @validator("sources", each_item=True)
    def check_source(cls, value: str) -> str:
        if value not in PROTOCOL_SOURCES:
            raise ValueError(f"unknown kernel source '{value}'")
        return value

    @validator("n_datasets", "n_shuffles", "workers")
    def check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be at least 1, got {value}")
        return value

    @validator("k_folds")
    def check_folds(cls, value: int) -> int:
        if value < 2:
            raise ValueError(f"must be at least 2, got {value}")
        return value

    @validator("rbf_gamma", "c", "tol")
    def check_strictly_positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError(f"must be positive, got {value}")
        return value


@dataclass(frozen=True)
class AccuracyCell:
    """
    Accuracy statistics of one (dataset kind, gate, kernel source) cell.

    Attributes
    ----------
    dataset_kind : str
        Dataset kind.
    gate_db : float | None
        Gate level in dB, None for the RBF baseline.
    kernel_source : str
        Kernel source or "rbf".
    per_dataset : tuple[float, ...]
        Accuracy of each dataset, averaged over its fold evaluations.
    evals_per_dataset : int
        Fold evaluations per dataset.
    dataset_seeds : tuple[int, ...]
        Generator seed of each dataset.
    """

    dataset_kind: str
    gate_db: float | None
    kernel_source: str
    per_dataset: tuple
    evals_per_dataset: int
    dataset_seeds: tuple = ()

    @property
    def mean_acc(self) -> float:
        """Mean accuracy over datasets."""
        return float(np.mean(self.per_dataset))

    @property
    def sd_acc(self) -> float:
        """Sample standard deviation over datasets, zero for a single dataset."""
        if len(self.per_dataset) < 2:
            return 0.0
        return float(np.std(self.per_dataset, ddof=1))

    @property
    def n_evals(self) -> int:
        """Total fold evaluations."""
        return self.evals_per_dataset * len(self.per_dataset)


@dataclass(frozen=True)
class AccuracyReport:
    """
    Collection of accuracy cells.

    Attributes
    ----------
    cells : tuple[AccuracyCell, ...]
        Cells in deterministic order.
    """

    cells: tuple

    @classmethod
    def merge(cls, reports: Sequence["AccuracyReport"]) -> "AccuracyReport":
        """
        Concatenate reports, keeping their order.

        Parameters
        ----------
        reports : Sequence[AccuracyReport]
            Reports to merge.

        Returns
        -------
        AccuracyReport
            Merged report.
        """
        return cls(cells=tuple(c for r in reports for c in r.cells))

    def get(self, dataset_kind: str, kernel_source: str, gate_db: float | None = None) -> AccuracyCell:
        """
        Find a cell.

        Parameters
        ----------
        dataset_kind : str
            Dataset kind.
        kernel_source : str
            Kernel source or "rbf".
        gate_db : float
            Gate level, ignored for the RBF baseline.

        Returns
        -------
        AccuracyCell
            The matching cell.
        """
        for cell in self.cells:
            if cell.dataset_kind != dataset_kind or cell.kernel_source != kernel_source:
                continue
            if kernel_source == RBF or cell.gate_db == gate_db:
                return cell
        raise KeyError(f"No cell for ({dataset_kind}, {gate_db}, {kernel_source}).")

    def to_frame(self) -> pd.DataFrame:
        """
        Summary table, one row per cell.

        Returns
        -------
        pd.DataFrame
            Columns as REPORT_COLUMNS.
        """
        rows = [
            {
                "dataset_kind": c.dataset_kind,
                "gate_db": c.gate_db,
                "kernel_source": c.kernel_source,
                "mean_acc": c.mean_acc,
                "sd_acc": c.sd_acc,
                "n_evals": c.n_evals,
            }
            for c in self.cells
        ]
        return pd.DataFrame(rows, columns=REPORT_COLUMNS)

    def datasets_frame(self) -> pd.DataFrame:
        """
        Per-dataset accuracies behind the summary.

        Returns
        -------
        pd.DataFrame
            Columns as DATASET_REPORT_COLUMNS.
        """
        rows = [
            {
                "dataset_kind": c.dataset_kind,
                "gate_db": c.gate_db,
                "kernel_source": c.kernel_source,
                "dataset_index": i,
                "dataset_seed": c.dataset_seeds[i] if c.dataset_seeds else None,
                "accuracy": acc,
            }
            for c in self.cells
            for i, acc in enumerate(c.per_dataset)
        ]
        return pd.DataFrame(rows, columns=DATASET_REPORT_COLUMNS)


def _cell_keys(gates: Sequence[float], sources: Sequence[str]) -> list[tuple[float, str]]:
    keys = [(float(g), s) for g in gates for s in sources]
    keys.append((None, RBF))
    return keys


def _kernels_for_dataset(
    kind: str,
    dataset_seed: int,
    dataset_params: DatasetParams,
    tables: dict,
    params: ProtocolParams,
) -> tuple[np.ndarray, dict]:
    continuous = standardize(generate_dataset(kind, dataset_params, dataset_seed))
    lattice = discretize(continuous)
    kernels = {}
    for (gate_db, source), table in tables.items():
        if source == CLOSED_FORM and not params.lattice:
            kernels[(gate_db, source)] = kernel_matrix_continuous(table.gate, continuous.points)
        else:
            kernels[(gate_db, source)] = kernel_matrix_from_table(lattice, table).values
    points = lattice_to_continuous(lattice.coords) if params.lattice else continuous.points
    kernels[(None, RBF)] = rbf_matrix(points, gamma=params.rbf_gamma)
    return lattice.labels, kernels


def _fold_accuracy(
    kernel: np.ndarray,
    labels: np.ndarray,
    train_idx: np.ndarray,
    test_idx: np.ndarray,
    provenance: str,
    params: ProtocolParams,
) -> float:
    model = train(
        kernel[np.ix_(train_idx, train_idx)],
        labels[train_idx],
        provenance=provenance,
        c=params.c,
        tol=params.tol,
    )
    predicted = predict_many(model, kernel[np.ix_(test_idx, train_idx)])
    return float(np.mean(predicted == labels[test_idx]))


def evaluate_dataset(
    kind: str,
    dataset_index: int,
    master_seed: int,
    dataset_params: DatasetParams,
    tables: dict,
    params: ProtocolParams,
) -> dict:
    """
    Fold accuracies of every kernel on one dataset.

    Parameters
    ----------
    kind : str
        Dataset kind.
    dataset_index : int
        Dataset index in 0..n_datasets-1.
    master_seed : int
        Master seed.
    dataset_params : DatasetParams
        Generator parameters.
    tables : dict
        Kernel tables keyed by (gate_db, source).
    params : ProtocolParams
        Protocol settings.

    Returns
    -------
    dict
        Mean accuracy keyed by (gate_db, source), plus "seed".
    """
    kind_index = DATASET_KINDS.index(kind)
    dataset_seed = derive_seed(master_seed, kind_index, dataset_index, _DATASET_SLOT)
    labels, kernels = _kernels_for_dataset(kind, dataset_seed, dataset_params, tables, params)
    scores = {key: [] for key in kernels}
    for shuffle in range(params.n_shuffles):
        shuffle_seed = derive_seed(master_seed, kind_index, dataset_index, shuffle + 1)
        plan = kfold_plan(labels.shape[0], params.k_folds, shuffle_seed, repetition=shuffle)
        for fold, (train_idx, test_idx) in enumerate(plan.splits()):
            for key, kernel in kernels.items():
                gate_db, source = key
                try:
                    scores[key].append(_fold_accuracy(kernel, labels, train_idx, test_idx, source, params))
                except ConvergenceError:
                    LOGGER.error(
                        f"Training failed for {kind}, gate {gate_db} dB, source {source}, "
                        f"dataset {dataset_index}, shuffle {shuffle}, fold {fold}."
                    )
                    raise
    result = {key: float(np.mean(values)) for key, values in scores.items()}
    result["seed"] = dataset_seed
    return result


def run_protocol(
    kind: str,
    tables: dict,
    params: ProtocolParams | None = None,
    dataset_params: DatasetParams | None = None,
    master_seed: int = 0,
) -> AccuracyReport:
    """
    K-fold accuracy of every kernel over an ensemble of datasets.

    Parameters
    ----------
    kind : str
        Dataset kind.
    tables : dict
        Kernel tables keyed by (gate_db, source).
    params : ProtocolParams
        Protocol settings.
    dataset_params : DatasetParams
        Generator parameters.
    master_seed : int
        Master seed.

    Returns
    -------
    AccuracyReport
        One cell per (gate, source) plus the RBF baseline.
    """
    params = ProtocolParams() if params is None else params
    dataset_params = DatasetParams() if dataset_params is None else dataset_params
    gates = sorted({g for g, _ in tables})
    sources = [s for s in params.sources if any(s == t for _, t in tables)]
    keys = _cell_keys(gates, sources)

    LOGGER.info(f"Running K-fold protocol on {params.n_datasets} {kind} datasets.")
    args = (master_seed, dataset_params, tables, params)
    if params.workers > 1:
        with ProcessPoolExecutor(max_workers=params.workers) as pool:
            futures = [pool.submit(evaluate_dataset, kind, d, *args) for d in range(params.n_datasets)]
            results = [f.result() for f in futures]
    else:
        results = [evaluate_dataset(kind, d, *args) for d in range(params.n_datasets)]

    evals = params.n_shuffles * params.k_folds
    seeds = tuple(r["seed"] for r in results)
    cells = []
    for gate_db, source in keys:
        per_dataset = tuple(r[(gate_db, source)] for r in results)
        cells.append(AccuracyCell(kind, gate_db, source, per_dataset, evals, seeds))
    LOGGER.info(f"K-fold protocol on {kind} done.")
    return AccuracyReport(cells=tuple(cells))
