"""
General utilities module.
"""
from __future__ import annotations

import math
import os

import numpy as np

from cvq_kernel.utils.exceptions import InvalidArgumentError

SEED_ENV = "CVQ_SEED"


def build_rng(seed: int, *keys: int) -> np.random.Generator:
    """
    Build an independent generator for a work cell.

    The stream depends only on the master seed and the cell keys, so results
    do not depend on the order in which cells are scheduled.

    Parameters
    ----------
    seed : int
        Master seed.
    *keys : int
        Cell index path, e.g. (gate index, difference index, angle index).

    Returns
    -------
    np.random.Generator
        PCG64 generator.
    """
    if seed < 0 or any(k < 0 for k in keys):
        raise InvalidArgumentError("Seeds and cell keys must be non-negative integers.")
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in keys))
    return np.random.Generator(np.random.PCG64(sequence))


def get_env_seed(default: int | None = None) -> int | None:
    """
    Read the master seed override from the environment.

    Parameters
    ----------
    default : int
        Value returned when the variable is unset.

    Returns
    -------
    int | None
        The seed.
    """
    value = os.getenv(SEED_ENV)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError as err:
        raise InvalidArgumentError(f"Environment variable {SEED_ENV} must be an integer, got '{value}'.") from err


def set_cvq_env(seed: int | None = None) -> None:
    """
    Function to set environment variables for the package.

    Parameters
    ----------
    seed : int
        Master seed override.

    Returns
    -------
    None
    """
    if seed is not None:
        os.environ[SEED_ENV] = str(seed)


def check_finite(name: str, *values: float) -> None:
    """
    Raise if any value is NaN or infinite.

    Parameters
    ----------
    name : str
        Argument name used in the error message.
    *values : float
        Values to check.

    Returns
    -------
    None
    """
    for value in values:
        if not math.isfinite(value):
            raise InvalidArgumentError(f"Argument '{name}' must be finite, got {value}.")


def derive_seed(seed: int, *keys: int) -> int:
    """
    Derive an integer seed for a work cell, for libraries taking int seeds.

    Parameters
    ----------
    seed : int
        Master seed.
    *keys : int
        Cell index path.

    Returns
    -------
    int
        Seed in [0, 2**32).
    """
    if seed < 0 or any(k < 0 for k in keys):
        raise InvalidArgumentError("Seeds and cell keys must be non-negative integers.")
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1)[0])
