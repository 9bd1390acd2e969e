"""
Sequential minimal optimization module.

Pair selection follows the maximal-violating-pair rule with second-order
choice of the second index. The gradient G = Q alpha - 1 is updated in
place after every pair step.
"""
from __future__ import annotations

import numpy as np

from cvq_kernel.svm.problem import DualProblem
from cvq_kernel.utils.commons import SUPPORT_THRESHOLD
from cvq_kernel.utils.exceptions import ConvergenceError, InvalidArgumentError
from cvq_kernel.utils.generic_utils import build_rng
from cvq_kernel.utils.logger import LOGGER

DEFAULT_TOL = 1e-3

# Pair curvature floor; slightly indefinite kernels must not blow up the step.
CURVATURE_FLOOR = 1e-12

# Kernels estimated from samples may be indefinite by this much.
PSD_TOLERANCE = 1e-7


def _index_sets(alpha: np.ndarray, y: np.ndarray, c: float) -> tuple[np.ndarray, np.ndarray]:
    up = ((y > 0) & (alpha < c)) | ((y < 0) & (alpha > 0))
    low = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < c))
    return up, low


def _gap(score: np.ndarray, up: np.ndarray, low: np.ndarray) -> float:
    if not up.any() or not low.any():
        return 0.0
    return float(score[up].max() - score[low].min())


def check_curvature(kernel: np.ndarray) -> float:
    """
    Smallest eigenvalue of a kernel matrix, warning when clearly indefinite.

    Parameters
    ----------
    kernel : np.ndarray
        Symmetric matrix.

    Returns
    -------
    float
        Minimum eigenvalue.
    """
    min_eig = float(np.linalg.eigvalsh(kernel)[0])
    if min_eig < -PSD_TOLERANCE:
        LOGGER.warning(f"Kernel matrix is indefinite (min eigenvalue {min_eig:.3e}); pair curvature is clipped.")
    return min_eig


def kkt_violation(alpha: np.ndarray, problem: DualProblem) -> float:
    """
    Maximal violating-pair gap m(alpha) - M(alpha).

    Parameters
    ----------
    alpha : np.ndarray
        Feasible dual point.
    problem : DualProblem
        Dual problem.

    Returns
    -------
    float
        Zero or negative at an exact optimum.
    """
    alpha = np.asarray(alpha, dtype=float)
    y = problem.labels
    grad = problem.q @ alpha - 1.0
    up, low = _index_sets(alpha, y, problem.c)
    return _gap(-y * grad, up, low)


def dual_objective(alpha: np.ndarray, problem: DualProblem) -> float:
    """
    Dual objective 1/2 alpha^T Q alpha - sum(alpha), to be minimized.

    Parameters
    ----------
    alpha : np.ndarray
        Dual point.
    problem : DualProblem
        Dual problem.

    Returns
    -------
    float
        Objective value.
    """
    alpha = np.asarray(alpha, dtype=float)
    return float(0.5 * alpha @ problem.q @ alpha - alpha.sum())


def solve_dual(
    problem: DualProblem,
    tol: float = DEFAULT_TOL,
    max_passes: int | None = None,
    seed: int = 0,
) -> np.ndarray:
    """
    Solve the SVM dual by sequential minimal optimization.

    Parameters
    ----------
    problem : DualProblem
        Dual problem.
    tol : float
        Stopping tolerance on the maximal violating-pair gap.
    max_passes : int
        Budget in passes of n pair updates. Defaults to 10 n.
    seed : int
        Seed of the permutation breaking ties in pair selection.

    Returns
    -------
    np.ndarray
        Optimal alpha.

    Raises
    ------
    ConvergenceError
        If the gap is still above tol when the budget is spent.
    """
    n = problem.size
    y_all = problem.labels
    if n < 2:
        raise InvalidArgumentError(f"The dual needs at least two points, got {n}.")
    if np.all(y_all == y_all[0]):
        raise InvalidArgumentError("Training labels contain a single class.")
    if tol <= 0:
        raise InvalidArgumentError(f"Tolerance must be positive, got {tol}.")
    passes = 10 * n if max_passes is None else max_passes
    if passes < 1:
        raise InvalidArgumentError(f"max_passes must be positive, got {passes}.")
    check_curvature(problem.kernel)

    # Work in a seeded order; argmax/argmin then break ties by that order.
    order = build_rng(seed).permutation(n)
    k = problem.kernel[np.ix_(order, order)]
    y = y_all[order]
    c = problem.c
    diag = np.diag(k).copy()

    alpha = np.zeros(n)
    grad = -np.ones(n)
    max_iter = passes * n
    iterations = 0
    while iterations < max_iter:
        score = -y * grad
        up, low = _index_sets(alpha, y, c)
        gap = _gap(score, up, low)
        if gap < tol:
            break

        i = int(np.argmax(np.where(up, score, -np.inf)))
        m_val = score[i]
        b = m_val - score
        a = np.maximum(diag[i] + diag - 2.0 * k[i], CURVATURE_FLOOR)
        candidates = low & (score < m_val)
        j = int(np.argmin(np.where(candidates, -(b * b) / a, np.inf)))

        bound_i = c - alpha[i] if y[i] > 0 else alpha[i]
        bound_j = alpha[j] if y[j] > 0 else c - alpha[j]
        t = min(b[j] / a[j], bound_i, bound_j)

        alpha[i] += y[i] * t
        alpha[j] -= y[j] * t
        if t == bound_i:
            alpha[i] = c if y[i] > 0 else 0.0
        if t == bound_j:
            alpha[j] = 0.0 if y[j] > 0 else c
        alpha[i] = min(max(alpha[i], 0.0), c)
        alpha[j] = min(max(alpha[j], 0.0), c)
        grad += t * y * (k[:, i] - k[:, j])
        iterations += 1

    up, low = _index_sets(alpha, y, c)
    gap = _gap(-y * grad, up, low)
    result = np.empty(n)
    result[order] = alpha
    if gap >= tol:
        msg = f"SMO did not converge in {iterations} pair updates (gap {gap:.3e} > tol {tol:.1e})."
        LOGGER.error(msg)
        raise ConvergenceError(msg, alpha=result, iterations=iterations, gap=float(gap))
    LOGGER.debug(f"SMO converged in {iterations} pair updates (gap {gap:.3e}).")
    return result


def compute_bias(alpha: np.ndarray, problem: DualProblem) -> float:
    """
    Bias of the decision function.

    Averages y_i - f_i over free support vectors; without free vectors,
    takes the midpoint of the interval allowed by the KKT conditions.

    Parameters
    ----------
    alpha : np.ndarray
        Feasible dual point.
    problem : DualProblem
        Dual problem.

    Returns
    -------
    float
        Bias b.
    """
    alpha = np.asarray(alpha, dtype=float)
    if alpha.size == 0:
        raise InvalidArgumentError("Cannot compute a bias from an empty alpha.")
    if alpha.shape != (problem.size,):
        raise InvalidArgumentError(f"Expected {problem.size} dual coefficients, got shape {alpha.shape}.")
    y = problem.labels
    c = problem.c
    residual = y - problem.kernel @ (y * alpha)

    free = (alpha > SUPPORT_THRESHOLD) & (alpha < c - SUPPORT_THRESHOLD)
    if free.any():
        return float(residual[free].mean())

    at_zero = ~(alpha > SUPPORT_THRESHOLD)
    at_c = ~at_zero
    lower = (at_zero & (y > 0)) | (at_c & (y < 0))
    upper = (at_zero & (y < 0)) | (at_c & (y > 0))
    b_lo = residual[lower].max() if lower.any() else None
    b_hi = residual[upper].min() if upper.any() else None
    if b_lo is None:
        return float(b_hi)
    if b_hi is None:
        return float(b_lo)
    return float((b_lo + b_hi) / 2)
