"""
Output store module.
"""
from __future__ import annotations

from abc import ABCMeta, abstractmethod
from pathlib import Path

import pandas as pd

from cvq_kernel.utils.commons import VERSION


def schema_header(schema: str) -> str:
    """
    Versioned comment line heading every CSV output.

    Parameters
    ----------
    schema : str
        Schema name.

    Returns
    -------
    str
        "# cvq-kernel v<version> schema=<schema>".
    """
    return f"# cvq-kernel v{VERSION} schema={schema}"


class Store(metaclass=ABCMeta):
    """
    Store abstract class.
    """

    def __init__(self, name: str, root: str | Path) -> None:
        """
        Constructor.

        Parameters
        ----------
        name : str
            Store name.
        root : str | Path
            Directory outputs are written under.

        Returns
        -------
        None
        """
        self.name = name
        self.root = Path(root)

        # Private attributes
        self._registry: list[Path] = []

    ############################
    # IO methods
    ############################

    @abstractmethod
    def write_df(self, df: pd.DataFrame, filename: str, schema: str) -> Path:
        """
        Write a DataFrame as CSV with a schema header.
        """

    @abstractmethod
    def write_json(self, obj: dict, filename: str) -> Path:
        """
        Write a dict as JSON.
        """

    @abstractmethod
    def cleanup(self) -> None:
        """
        Remove every output written so far.
        """

    @staticmethod
    def read_df(path: str | Path) -> pd.DataFrame:
        """
        Read a CSV output, skipping the schema header.

        Parameters
        ----------
        path : str | Path
            CSV file.

        Returns
        -------
        pd.DataFrame
            Table content.
        """
        return pd.read_csv(path, comment="#")

    ############################
    # Helpers methods
    ############################

    @property
    def written(self) -> list[Path]:
        """Paths written by this store, in order."""
        return list(self._registry)

    def _build_path(self, filename: str) -> Path:
        """
        Resolve a filename under the root, creating parent directories.

        Parameters
        ----------
        filename : str
            Relative file name.

        Returns
        -------
        Path
            Destination path.
        """
        dst = self.root / filename
        dst.parent.mkdir(parents=True, exist_ok=True)
        return dst
