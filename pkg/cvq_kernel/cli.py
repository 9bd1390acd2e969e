"""
Command-line interface.

Exit codes: 0 success, 2 usage or invalid argument, 3 solver
non-convergence, 4 configuration error, 1 any other failure.
"""
from __future__ import annotations

import argparse
import typing
from pathlib import Path

from cvq_kernel.config.builder import build_config
from cvq_kernel.experiments.builder import build_experiment
from cvq_kernel.stores.local import LocalStore
from cvq_kernel.utils.commons import DATASET_KINDS, PROTOCOL_SOURCES, RBF, TABLE_SOURCES, VERSION
from cvq_kernel.utils.exceptions import (
    ConfigError,
    ConvergenceError,
    CvqError,
    DegenerateInputError,
    InvalidArgumentError,
)
from cvq_kernel.utils.logger import LOGGER, set_log_level

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3
EXIT_CONFIG = 4


def _int_at_least(minimum: int) -> typing.Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid int value: '{text}'") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return convert


def _add_common(parser: argparse.ArgumentParser, samples: bool = True) -> None:
    parser.add_argument("--config", type=str, default=None, help="YAML configuration file.")
    parser.add_argument("--seed", type=_int_at_least(0), default=None, help="Master seed, overrides the configuration.")
    if samples:
        parser.add_argument("--samples", type=_int_at_least(2), default=None, help="Homodyne samples per angle.")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns
    -------
    argparse.ArgumentParser
        Parser with one subcommand per experiment.
    """
    parser = argparse.ArgumentParser(prog="cvq-kernel", description="Squeezing-phase kernel experiments.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only.")
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("kernel-table", help="Write the kernel table of one gate level.")
    table.add_argument("--gate-db", type=float, required=True, help="Gate-squeezing level in dB.")
    table.add_argument("--source", choices=PROTOCOL_SOURCES, default=PROTOCOL_SOURCES[0], help="Kernel source.")
    table.add_argument("--out", type=str, default=None, help="Output CSV file.")
    _add_common(table)

    sweep = commands.add_parser("gate-sweep", help="Write the gate output-level and kernel sweep.")
    sweep.add_argument("--out", type=str, default=None, help="Output directory.")
    _add_common(sweep)

    classify = commands.add_parser("classify", help="Train on a single split and write the decision grid.")
    classify.add_argument("--dataset-kind", choices=DATASET_KINDS, default=None, help="Dataset kind.")
    classify.add_argument("--gate-db", type=float, default=None, help="Gate-squeezing level in dB.")
    classify.add_argument(
        "--source", choices=[*TABLE_SOURCES, RBF], default=PROTOCOL_SOURCES[0], help="Kernel source."
    )
    classify.add_argument("--table", type=str, default=None, help="Measured kernel table CSV.")
    classify.add_argument("--out", type=str, default=None, help="Output directory.")
    _add_common(classify)

    kfold = commands.add_parser("kfold", help="Write the K-fold accuracy report.")
    kfold.add_argument("--workers", type=_int_at_least(1), default=None, help="Worker processes over dataset seeds.")
    kfold.add_argument("--out", type=str, default=None, help="Output directory.")
    _add_common(kfold)

    return parser


def _overrides(args: argparse.Namespace) -> dict:
    # Only flags actually given reach the configuration.
    overrides = {}
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if getattr(args, "samples", None) is not None:
        overrides["samples_per_angle"] = args.samples
    if getattr(args, "dataset_kind", None) is not None:
        overrides["dataset"] = {"kind": args.dataset_kind}
    if getattr(args, "workers", None) is not None:
        overrides["protocol"] = {"workers": args.workers}
    if args.out is not None and args.command != "kernel-table":
        overrides["output_dir"] = args.out
    return overrides


def _flags(args: argparse.Namespace) -> dict:
    if args.command == "kernel-table":
        return {"gate_db": args.gate_db, "source": args.source}
    if args.command == "classify":
        return {"dataset_kind": args.dataset_kind, "gate_db": args.gate_db, "source": args.source, "table": args.table}
    return {}


def _store(args: argparse.Namespace, output_dir: str) -> tuple[LocalStore, dict]:
    if args.command == "kernel-table" and args.out is not None:
        out = Path(args.out)
        return LocalStore(args.command, out.parent), {"filename": out.name}
    return LocalStore(args.command, output_dir), {}


def run_command(args: argparse.Namespace) -> dict:
    """
    Resolve the configuration and run the experiment of a parsed command.

    Parameters
    ----------
    args : argparse.Namespace
        Parsed arguments.

    Returns
    -------
    dict
        Run status.
    """
    LOGGER.info("Building configuration.")
    config = build_config(args.config, _overrides(args))
    store, extra = _store(args, config.output_dir)

    LOGGER.info(f"Building experiment '{args.command}'.")
    experiment = build_experiment(args.command, config, store)
    spec = experiment.build(**_flags(args), **extra)

    LOGGER.info("Executing experiment.")
    return experiment.run(spec)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Entry point.

    Parameters
    ----------
    argv : Sequence[str]
        Arguments; defaults to sys.argv.

    Returns
    -------
    int
        Process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE
    set_log_level(verbose=args.verbose, quiet=args.quiet)

    try:
        status = run_command(args)
    except ConfigError:
        return EXIT_CONFIG
    except ConvergenceError:
        return EXIT_CONVERGENCE
    except (InvalidArgumentError, DegenerateInputError) as err:
        LOGGER.error(str(err))
        parser.print_usage()
        return EXIT_USAGE
    except CvqError as err:
        LOGGER.error(str(err))
        return EXIT_FAILURE

    for output in status["outputs"]:
        print(output)
    LOGGER.info("Done.")
    return EXIT_OK


