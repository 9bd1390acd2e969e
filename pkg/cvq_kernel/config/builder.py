"""
Configuration loading module.

Precedence is defaults < file < command-line overrides < CVQ_SEED.
"""
from __future__ import annotations

import re
import typing

import yaml
from pydantic import ValidationError

from cvq_kernel.config.models import ExperimentConfig
from cvq_kernel.utils.exceptions import ConfigError, InvalidArgumentError
from cvq_kernel.utils.generic_utils import get_env_seed
from cvq_kernel.utils.io_utils import read_text, write_yaml
from cvq_kernel.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from pathlib import Path


def _field_line(text: str, loc: tuple) -> int | None:
    # Line of the innermost named key of a pydantic error location.
    keys = [k for k in loc if isinstance(k, str)]
    if not keys:
        return None
    pattern = re.compile(rf"^\s*{re.escape(keys[-1])}\s*:")
    for number, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return number
    return None


def _format_errors(err: ValidationError, text: str = "") -> str:
    parts = []
    for error in err.errors():
        field = ".".join(str(k) for k in error["loc"])
        line = _field_line(text, error["loc"]) if text else None
        where = f"line {line}, field '{field}'" if line is not None else f"field '{field}'"
        parts.append(f"{where}: {error['msg']}")
    return "; ".join(parts)


def _merge(base: dict, overrides: dict) -> dict:
    merged = dict(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def parse_config(text: str) -> dict:
    """
    Parse configuration text into a dict.

    Parameters
    ----------
    text : str
        YAML text.

    Returns
    -------
    dict
        Parsed sections; empty for an empty document.
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        mark = getattr(err, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark is not None else "unknown position"
        msg = f"Cannot parse configuration at {where}: {getattr(err, 'problem', err)}."
        LOGGER.error(msg)
        raise ConfigError(msg) from err
    if data is None:
        return {}
    if not isinstance(data, dict):
        msg = "Configuration must be a mapping of sections."
        LOGGER.error(msg)
        raise ConfigError(msg)
    return data


def build_config(
    path: str | Path | None = None,
    overrides: dict | None = None,
    use_env: bool = True,
) -> ExperimentConfig:
    """
    Build the experiment configuration.

    Parameters
    ----------
    path : str | Path
        YAML configuration file.
    overrides : dict
        Nested values from command-line flags; None entries are ignored.
    use_env : bool
        Apply the CVQ_SEED override.

    Returns
    -------
    ExperimentConfig
        Validated configuration.

    Raises
    ------
    ConfigError
        If the file cannot be read, parsed or validated.
    """
    text = ""
    data: dict = {}
    if path is not None:
        try:
            text = read_text(path)
        except OSError as err:
            msg = f"Cannot read configuration file {path}: {err}."
            LOGGER.error(msg)
            raise ConfigError(msg) from err
        data = parse_config(text)
    data = _merge(data, overrides or {})
    if use_env:
        try:
            seed = get_env_seed()
        except InvalidArgumentError as err:
            raise ConfigError(str(err)) from err
        if seed is not None:
            data["master_seed"] = seed
    try:
        return ExperimentConfig(**data)
    except ValidationError as err:
        msg = f"Invalid configuration: {_format_errors(err, text)}."
        LOGGER.error(msg)
        raise ConfigError(msg) from err


def load_config(path: str | Path) -> ExperimentConfig:
    """
    Load a configuration file without overrides.

    Parameters
    ----------
    path : str | Path
        YAML configuration file.

    Returns
    -------
    ExperimentConfig
        Validated configuration.
    """
    return build_config(path, use_env=False)


def dump_config(config: ExperimentConfig, path: str | Path) -> None:
    """
    Write a configuration to YAML.

    Parameters
    ----------
    config : ExperimentConfig
        Configuration.
    path : str | Path
        Output file.

    Returns
    -------
    None
    """
    write_yaml(path, config.dict())
