"""
Shared fixtures.
"""
from __future__ import annotations

import itertools

import numpy as np
import pytest

from cvq_kernel.kernels.units import GateLevel
from cvq_kernel.utils.generic_utils import SEED_ENV


@pytest.fixture(autouse=True)
def no_env_seed(monkeypatch):
    monkeypatch.delenv(SEED_ENV, raising=False)


@pytest.fixture
def gate8():
    return GateLevel.from_db(8.0)


@pytest.fixture
def gate2():
    return GateLevel.from_db(2.0)


def exhaustive_dual_minimum(kernel: np.ndarray, labels: np.ndarray, c: float) -> float:
    """
    Exact minimum of the SVM dual by active-set enumeration.

    Every coordinate is fixed at 0, fixed at C or left free; the free block
    is solved from its KKT system with the equality multiplier. The smallest
    objective over the feasible stationary points is the global minimum.
    """
    n = labels.shape[0]
    q = np.outer(labels, labels) * kernel
    best = np.inf
    for status in itertools.product((0, 1, 2), repeat=n):
        status = np.array(status)
        free = status == 2
        alpha = np.where(status == 1, c, 0.0)
        if free.any():
            bound = ~free
            qf = q[np.ix_(free, free)]
            yf = labels[free]
            m = free.sum()
            lhs = np.zeros((m + 1, m + 1))
            lhs[:m, :m] = qf
            lhs[:m, m] = yf
            lhs[m, :m] = yf
            rhs = np.empty(m + 1)
            rhs[:m] = 1.0 - q[np.ix_(free, bound)] @ alpha[bound]
            rhs[m] = -labels[bound] @ alpha[bound]
            sol, *_ = np.linalg.lstsq(lhs, rhs, rcond=None)
            if np.linalg.norm(lhs @ sol - rhs) > 1e-9:
                continue
            alpha[free] = sol[:m]
        if np.any(alpha < -1e-12) or np.any(alpha > c + 1e-12):
            continue
        if abs(labels @ alpha) > 1e-9:
            continue
        alpha = np.clip(alpha, 0.0, c)
        best = min(best, 0.5 * alpha @ q @ alpha - alpha.sum())
    return float(best)


@pytest.fixture
def dual_oracle():
    return exhaustive_dual_minimum
