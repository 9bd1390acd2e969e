"""
K-fold accuracy experiment.
"""
from __future__ import annotations

from cvq_kernel.data.protocol import AccuracyReport, run_protocol
from cvq_kernel.experiments.base import Experiment
from cvq_kernel.experiments.utils import table_for
from cvq_kernel.utils.commons import SCHEMA_ACCURACY, SCHEMA_ACCURACY_DATASETS
from cvq_kernel.utils.logger import LOGGER


class KFoldExperiment(Experiment):
    """
    Accuracy of every kernel source and gate level, plus the RBF baseline,
    over the configured dataset kinds.
    """

    cleanup_on_error = True

    def build(
        self,
        filename: str = "kfold_report.csv",
        datasets_filename: str = "kfold_datasets.csv",
        **kwargs,
    ) -> dict:
        """
        Build run spec.

        Parameters
        ----------
        filename : str
            Summary report file name.
        datasets_filename : str
            Per-dataset accuracies file name.

        Returns
        -------
        dict
            Run spec.
        """
        protocol = self.config.protocol
        return {
            "dataset_kinds": list(protocol.dataset_kinds),
            "sources": list(protocol.sources),
            "gates_db": [float(g) for g in self.config.gates_db],
            "filename": filename,
            "datasets_filename": datasets_filename,
        }

    def execute(self, spec: dict) -> list:
        tables = {
            (gate_db, source): table_for(self.config, gate_db, source)
            for gate_db in spec["gates_db"]
            for source in spec["sources"]
        }
        reports = [
            run_protocol(
                kind,
                tables,
                params=self.config.protocol,
                dataset_params=self.config.dataset,
                master_seed=self.config.master_seed,
            )
            for kind in spec["dataset_kinds"]
        ]
        report = AccuracyReport.merge(reports)
        LOGGER.info(f"Writing accuracy report with {len(report.cells)} cells.")
        return [
            self.store.write_df(report.to_frame(), spec["filename"], SCHEMA_ACCURACY),
            self.store.write_df(report.datasets_frame(), spec["datasets_filename"], SCHEMA_ACCURACY_DATASETS),
        ]
