"""
Local store module.
"""
from __future__ import annotations

import typing

from cvq_kernel.stores.base import Store, schema_header
from cvq_kernel.utils.exceptions import StoreError
from cvq_kernel.utils.io_utils import write_json
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from pathlib import Path

    import pandas as pd


class LocalStore(Store):
    """
    Local store class. Writes outputs on the local filesystem and tracks
    them so a failed run can remove its partial outputs.
    """

    ############################
    # IO methods
    ############################

    def write_df(self, df: pd.DataFrame, filename: str, schema: str) -> Path:
        """
        Write a DataFrame as CSV preceded by the schema header line.

        Parameters
        ----------
        df : pd.DataFrame
            Table to write.
        filename : str
            File name relative to the store root.
        schema : str
            Schema name recorded in the header.

        Returns
        -------
        Path
            Written file.
        """
        try:
            dst = self._build_path(filename)
            with open(dst, "w", encoding="utf-8", newline="") as out_file:
                out_file.write(schema_header(schema) + "\n")
                df.to_csv(out_file, index=False)
        except OSError as err:
            msg = f"Cannot write {self.root / filename}: {err}."
            LOGGER.error(msg)
            raise StoreError(msg) from err
        self._registry.append(dst)
        LOGGER.info(f"Written {dst}.")
        return dst

    def write_json(self, obj: dict, filename: str) -> Path:
        """
        Write a dict as JSON with sorted keys.

        Parameters
        ----------
        obj : dict
            Document to write.
        filename : str
            File name relative to the store root.

        Returns
        -------
        Path
            Written file.
        """
        try:
            dst = self._build_path(filename)
            write_json(dst, obj)
        except OSError as err:
            msg = f"Cannot write {self.root / filename}: {err}."
            LOGGER.error(msg)
            raise StoreError(msg) from err
        self._registry.append(dst)
        LOGGER.info(f"Written {dst}.")
        return dst

    def cleanup(self) -> None:
        """
        Remove every file written by this store.

        Returns
        -------
        None
        """
        for path in reversed(self._registry):
            if path.exists():
                path.unlink()
                LOGGER.info(f"Removed partial output {path}.")
        self._registry.clear()
