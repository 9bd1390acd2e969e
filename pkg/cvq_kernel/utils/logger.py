"""
Logger module.
"""
from __future__ import annotations

import logging

# Create logger
LOGGER = logging.getLogger("cvq-kernel")
LOGGER.setLevel(logging.INFO)

# Create formatter
formatter = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")

# Create console handler and set formatter
console_handler = logging.StreamHandler()
console_handler.setFormatter(formatter)

# Set console handler to the logger
LOGGER.addHandler(console_handler)


def set_log_level(verbose: bool = False, quiet: bool = False) -> None:
    """
    Adjust the package logger verbosity.

    Parameters
    ----------
    verbose : bool
        Switch to DEBUG.
    quiet : bool
        Switch to WARNING. Ignored when verbose is set.

    Returns
    -------
    None
    """
    if verbose:
        LOGGER.setLevel(logging.DEBUG)
    elif quiet:
        LOGGER.setLevel(logging.WARNING)
    else:
        LOGGER.setLevel(logging.INFO)
