"""
Trained SVM model module.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from cvq_kernel.svm.problem import DEFAULT_C, DualProblem
from cvq_kernel.svm.smo import DEFAULT_TOL, compute_bias, solve_dual
from cvq_kernel.utils.commons import SUPPORT_THRESHOLD
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.io_utils import read_json, write_json

# Feasibility slack of the equality constraint on a trained model.
EQUALITY_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SvmModel:
    """
    Dual coefficients, bias and training data of a kernel SVM.

    Attributes
    ----------
    alpha : np.ndarray
        Dual coefficients in [0, C].
    bias : float
        Bias b.
    labels : np.ndarray
        Training labels in {-1, +1}.
    provenance : str
        Kernel source tag.
    coords : np.ndarray | None
        Training coordinates (lattice indices or continuous points).
    c : float
        Box bound.
    """

    alpha: np.ndarray
    bias: float
    labels: np.ndarray
    provenance: str
    coords: np.ndarray | None = None
    c: float = DEFAULT_C

    def __post_init__(self) -> None:
        alpha = np.asarray(self.alpha, dtype=float)
        labels = np.asarray(self.labels, dtype=float)
        if alpha.shape != labels.shape or alpha.ndim != 1:
            raise InvalidArgumentError("alpha and labels must be vectors of equal length.")
        if np.any(alpha < 0) or np.any(alpha > self.c):
            raise InvalidArgumentError(f"alpha must lie in [0, {self.c}].")
        if abs(float(labels @ alpha)) > EQUALITY_TOL:
            raise InvalidArgumentError(f"alpha violates y^T alpha = 0 ({labels @ alpha:.3e}).")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "labels", labels)
        if self.coords is not None:
            object.__setattr__(self, "coords", np.asarray(self.coords))

    @property
    def support(self) -> np.ndarray:
        """Indices of the support vectors."""
        return np.flatnonzero(self.alpha > SUPPORT_THRESHOLD)

    @property
    def size(self) -> int:
        """Number of training points."""
        return self.alpha.shape[0]

    def to_dict(self) -> dict:
        """
        Return the model as a JSON-serializable dict.

        Returns
        -------
        dict
            Model fields.
        """
        obj = {
            "alpha": [float(a) for a in self.alpha],
            "bias": float(self.bias),
            "c": float(self.c),
            "labels": [int(v) for v in self.labels],
            "provenance": self.provenance,
            "support": [int(i) for i in self.support],
        }
        if self.coords is not None:
            obj["coords"] = self.coords.tolist()
        return obj

    @classmethod
    def from_dict(cls, obj: dict) -> "SvmModel":
        """
        Return a model from its dict representation.

        Parameters
        ----------
        obj : dict
            Output of to_dict.

        Returns
        -------
        SvmModel
            The model.
        """
        coords = obj.get("coords")
        return cls(
            alpha=np.asarray(obj["alpha"], dtype=float),
            bias=float(obj["bias"]),
            labels=np.asarray(obj["labels"], dtype=float),
            provenance=obj["provenance"],
            coords=None if coords is None else np.asarray(coords),
            c=float(obj.get("c", DEFAULT_C)),
        )


def train(
    kernel: np.ndarray,
    labels: np.ndarray,
    provenance: str,
    coords: np.ndarray | None = None,
    c: float = DEFAULT_C,
    tol: float = DEFAULT_TOL,
    max_passes: int | None = None,
    seed: int = 0,
) -> SvmModel:
    """
    Solve the dual and compute the bias.

    Parameters
    ----------
    kernel : np.ndarray
        Training kernel matrix.
    labels : np.ndarray
        Labels in {-1, +1}.
    provenance : str
        Kernel source tag.
    coords : np.ndarray
        Training coordinates stored on the model.
    c : float
        Box bound.
    tol : float
        Solver tolerance.
    max_passes : int
        Solver budget.
    seed : int
        Solver tie-break seed.

    Returns
    -------
    SvmModel
        Trained model.
    """
    problem = DualProblem(kernel=kernel, labels=labels, c=c)
    alpha = solve_dual(problem, tol=tol, max_passes=max_passes, seed=seed)
    return SvmModel(
        alpha=alpha,
        bias=compute_bias(alpha, problem),
        labels=problem.labels,
        provenance=provenance,
        coords=coords,
        c=c,
    )


def decision_value(model: SvmModel, k_col: np.ndarray) -> float:
    """
    sum_i y_i alpha_i k_i + b for one query.

    Parameters
    ----------
    model : SvmModel
        Trained model.
    k_col : np.ndarray
        Kernel values between the training points and the query.

    Returns
    -------
    float
        Decision value.
    """
    k_col = np.asarray(k_col, dtype=float)
    if k_col.shape != (model.size,):
        raise InvalidArgumentError(f"Expected {model.size} kernel values, got shape {k_col.shape}.")
    return float((model.labels * model.alpha) @ k_col + model.bias)


def decision_function(model: SvmModel, k_rows: np.ndarray) -> np.ndarray:
    """
    Decision values for several queries.

    Parameters
    ----------
    model : SvmModel
        Trained model.
    k_rows : np.ndarray
        Matrix (m, n) of kernel values, one row per query.

    Returns
    -------
    np.ndarray
        m decision values.
    """
    k_rows = np.asarray(k_rows, dtype=float)
    if k_rows.ndim != 2 or k_rows.shape[1] != model.size:
        raise InvalidArgumentError(f"Expected kernel rows of length {model.size}, got shape {k_rows.shape}.")
    return k_rows @ (model.labels * model.alpha) + model.bias


def predict(model: SvmModel, k_col: np.ndarray) -> int:
    """
    Predicted label of one query; a zero decision value gives +1.

    Parameters
    ----------
    model : SvmModel
        Trained model.
    k_col : np.ndarray
        Kernel values between the training points and the query.

    Returns
    -------
    int
        -1 or +1.
    """
    return 1 if decision_value(model, k_col) >= 0 else -1


def predict_many(model: SvmModel, k_rows: np.ndarray) -> np.ndarray:
    """
    Predicted labels of several queries.

    Parameters
    ----------
    model : SvmModel
        Trained model.
    k_rows : np.ndarray
        Matrix (m, n) of kernel values.

    Returns
    -------
    np.ndarray
        Integer labels in {-1, +1}.
    """
    return np.where(decision_function(model, k_rows) >= 0, 1, -1)


def save_model(model: SvmModel, path: str | Path) -> None:
    """
    Write a model to JSON.

    Parameters
    ----------
    model : SvmModel
        Model to write.
    path : str | Path
        Output file.

    Returns
    -------
    None
    """
    write_json(path, model.to_dict())


def load_model(path: str | Path) -> SvmModel:
    """
    Read a model from JSON.

    Parameters
    ----------
    path : str | Path
        Input file.

    Returns
    -------
    SvmModel
        The model.
    """
    return SvmModel.from_dict(read_json(path))
