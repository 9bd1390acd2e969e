"""
Experiment factory module.
"""
from __future__ import annotations

import typing

from cvq_kernel.experiments.classify import ClassifyExperiment
from cvq_kernel.experiments.gate_sweep import GateSweepExperiment
from cvq_kernel.experiments.kernel_table import KernelTableExperiment
from cvq_kernel.experiments.kfold import KFoldExperiment
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from cvq_kernel.config.models import ExperimentConfig
    from cvq_kernel.experiments.base import Experiment
    from cvq_kernel.stores.base import Store

REGISTRY = {
    "kernel-table": KernelTableExperiment,
    "gate-sweep": GateSweepExperiment,
    "classify": ClassifyExperiment,
    "kfold": KFoldExperiment,
}


def build_experiment(kind: str, config: ExperimentConfig, store: Store) -> Experiment:
    """
    Build an experiment by command name.

    Parameters
    ----------
    kind : str
        Command name.
    config : ExperimentConfig
        Resolved configuration.
    store : Store
        Output store.

    Returns
    -------
    Experiment
        Experiment object.
    """
    try:
        return REGISTRY[kind](config, store)
    except KeyError:
        msg = f"Unknown experiment '{kind}'."
        LOGGER.error(msg)
        raise InvalidArgumentError(msg)
