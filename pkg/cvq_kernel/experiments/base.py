"""
Base Experiment module.
"""
from __future__ import annotations

import typing
from abc import abstractmethod
from enum import Enum

from cvq_kernel.utils.exceptions import CvqError
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from cvq_kernel.config.models import ExperimentConfig
    from cvq_kernel.stores.base import Store


class State(Enum):
    """
    State enumeration.
    """

    BUILT = "BUILT"
    COMPLETED = "COMPLETED"
    ERROR = "ERROR"
    RUNNING = "RUNNING"


class Experiment:
    """
    Base Experiment class.

    An experiment turns the configuration plus command flags into a run
    spec (build), then executes it and writes its outputs through a store
    (run).
    """

    # Remove every output written so far when the run fails.
    cleanup_on_error = False

    def __init__(self, config: ExperimentConfig, store: Store) -> None:
        """
        Constructor.

        Parameters
        ----------
        config : ExperimentConfig
            Resolved configuration.
        store : Store
            Output store.
        """
        self.config = config
        self.store = store

    @abstractmethod
    def build(self, **flags) -> dict:
        """
        Build run spec.
        """

    @abstractmethod
    def execute(self, spec: dict) -> list:
        """
        Execute the run spec and return the written paths.
        """

    def run(self, spec: dict) -> dict:
        """
        Run the experiment.

        Parameters
        ----------
        spec : dict
            Run spec returned by build.

        Returns
        -------
        dict
            Status of the executed run.
        """
        LOGGER.info(f"Starting {self.__class__.__name__}.")
        try:
            outputs = self.execute(spec)
        except CvqError:
            if self.cleanup_on_error:
                LOGGER.info("Removing partial outputs.")
                self.store.cleanup()
            raise
        LOGGER.info("Task completed, returning run status.")
        return {
            "state": State.COMPLETED.value,
            "outputs": [str(p) for p in outputs],
        }
