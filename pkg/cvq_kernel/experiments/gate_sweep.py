"""
Gate sweep experiment.
"""
from __future__ import annotations

from cvq_kernel.experiments.base import Experiment
from cvq_kernel.processor.sweep import sweep_gates
from cvq_kernel.utils.commons import SCHEMA_GATE_SWEEP
from cvq_kernel.utils.logger import LOGGER


class GateSweepExperiment(Experiment):
    """
    Output levels and kernel values of the simulated gate over gate levels
    and lattice differences, analytic and sampled.
    """

    def build(self, filename: str = "gate_sweep.csv", **kwargs) -> dict:
        """
        Build run spec.

        Parameters
        ----------
        filename : str
            Output file name relative to the store root.

        Returns
        -------
        dict
            Run spec.
        """
        return {
            "gates_db": list(self.config.gates_db),
            "n_per_angle": self.config.samples_per_angle,
            "seed": self.config.master_seed,
            "filename": filename,
        }

    def execute(self, spec: dict) -> list:
        frame = sweep_gates(
            spec["gates_db"],
            noise=self.config.noise,
            n_per_angle=spec["n_per_angle"],
            seed=spec["seed"],
        )
        LOGGER.info("Writing gate sweep.")
        return [self.store.write_df(frame, spec["filename"], SCHEMA_GATE_SWEEP)]
