"""
Kernel table experiment.
"""
from __future__ import annotations

from cvq_kernel.experiments.base import Experiment
from cvq_kernel.experiments.utils import format_db, table_for
from cvq_kernel.utils.commons import CLOSED_FORM, MEASURED, SCHEMA_KERNEL_TABLE
from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.logger import LOGGER


class KernelTableExperiment(Experiment):
    """
    Writes the 26-row kernel table of one gate level and source.
    """

    def build(
        self,
        gate_db: float | None = None,
        source: str = CLOSED_FORM,
        table: str | None = None,
        filename: str | None = None,
        **kwargs,
    ) -> dict:
        """
        Build run spec.

        Parameters
        ----------
        gate_db : float
            Gate level in dB.
        source : str
            Table source.
        table : str
            CSV file for the measured-import source.
        filename : str
            Output file name relative to the store root.

        Returns
        -------
        dict
            Run spec.
        """
        if gate_db is None:
            msg = "The kernel table needs a gate level."
            LOGGER.error(msg)
            raise InvalidArgumentError(msg)
        if table is not None:
            source = MEASURED
        if filename is None:
            filename = f"kernel_table_{format_db(gate_db)}_{source}.csv"
        return {"gate_db": float(gate_db), "source": source, "table": table, "filename": filename}

    def execute(self, spec: dict) -> list:
        kernel_table = table_for(self.config, spec["gate_db"], spec["source"], spec["table"])
        LOGGER.info("Writing kernel table.")
        return [self.store.write_df(kernel_table.to_frame(), spec["filename"], SCHEMA_KERNEL_TABLE)]
