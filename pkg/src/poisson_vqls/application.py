"""Application."""

import argparse
import logging
import os
from collections.abc import Callable, Sequence
from functools import partial
from pathlib import Path
from typing import Any

from .ansatz import AnsatzKind
from .bench import (
    ExperimentPlan,
    TimeModel,
    load_config_file,
    parse_float_list,
    parse_qubit_range,
    report_from_directory,
    run_plan,
    scaling_report,
)
from .bench.scaling import SCALING_QUBITS
from .engine import OptimizerSettings
from .errors import ConfigError, PoissonVqlsError, ReportError
from .poisson.system import MAX_SPECTRUM_QUBITS

logger = logging.getLogger(__name__)

ENV_LOG_LEVEL: str = "POISSON_VQLS_LOG_LEVEL"
LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"
DEFAULT_OUT: str = "out"

EXIT_OK: int = 0
EXIT_RUN_ERROR: int = 1
EXIT_CONFIG_ERROR: int = 2

KNOWN_OPTIONS: frozenset[str] = frozenset(
    {
        "out",
        "config",
        "log_level",
        "workers",
        "minutes_per_circuit",
        "minutes_half_width",
        "qubits",
        "ansatz",
        "cost",
        "mode",
        "shots",
        "qdelta",
        "seeds",
        "epsilon",
        "max_iters",
        "budget_minutes",
        "optimizer",
        "learning_rate",
    }
)
RUN_DEFAULTS: dict[str, Any] = {
    "qubits": "3..9",
    "ansatz": "both",
    "cost": "local",
    "mode": "exact",
    "qdelta": "0.01,0.1",
    "seeds": 5,
    "epsilon": 0.01,
    "max_iters": 2000,
    "optimizer": "adam",
}


def _qubits(value: Any) -> tuple[int, ...]:
    if isinstance(value, int):
        return (value,)
    if isinstance(value, list | tuple):
        return tuple(int(item) for item in value)
    return parse_qubit_range(str(value))


def _floats(value: Any) -> tuple[float, ...]:
    if isinstance(value, int | float):
        return (float(value),)
    if isinstance(value, list | tuple):
        return tuple(float(item) for item in value)
    return parse_float_list(str(value))


def _ansatz_kinds(value: Any) -> tuple[AnsatzKind, ...]:
    if str(value).lower() == "both":
        return (AnsatzKind.GEA, AnsatzKind.HEA)
    return (AnsatzKind(str(value).lower()),)


class Application:
    """Command-line application: `scaling`, `run` and `report`."""

    def __init__(self, argv: Sequence[str] | None = None) -> None:
        """Initialize Application."""
        self._argv: Sequence[str] | None = argv
        self._parser: argparse.ArgumentParser = self.build_parser()

    @staticmethod
    def build_parser() -> argparse.ArgumentParser:
        """Build the argument parser; unset flags stay absent so config files can fill them."""
        common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
        common.add_argument("--out", help="output directory (default: out)")
        common.add_argument("--config", type=Path, help="YAML/JSON or key=value file mirroring the flags")
        common.add_argument("--log-level", help=f"log level (default: ${ENV_LOG_LEVEL} or INFO)")
        common.add_argument("--workers", type=int, help="parallel runs")
        common.add_argument("--minutes-per-circuit", type=float, help="mean hardware minutes per circuit")
        common.add_argument("--minutes-half-width", type=float, help="half width of the minutes estimate")

        parser = argparse.ArgumentParser(prog="poisson_vqls", description="VQLS benchmarks for the 1D Poisson matrix.")
        subparsers = parser.add_subparsers(dest="command", required=True)

        scaling = subparsers.add_parser(
            "scaling", parents=[common], argument_default=argparse.SUPPRESS, help="decomposition and kappa tables"
        )
        scaling.add_argument("--qubits", help="qubit range, e.g. 1..12")

        run = subparsers.add_parser("run", parents=[common], argument_default=argparse.SUPPRESS, help="run a plan")
        run.add_argument("--qubits", help="qubit range: 3..9, 3-9 or 3,5,7")
        run.add_argument("--ansatz", choices=["gea", "hea", "both"])
        run.add_argument("--cost", choices=["local", "global"])
        run.add_argument("--mode", choices=["exact", "sampled"])
        run.add_argument("--shots", type=int)
        run.add_argument("--qdelta", help="comma-separated initialization variances")
        run.add_argument("--seeds", type=int, help="seeds per cell")
        run.add_argument("--epsilon", type=float, help="target trace distance")
        run.add_argument("--max-iters", type=int, help="iteration budget per run")
        run.add_argument("--budget-minutes", type=float, help="modeled hardware minutes per run")
        run.add_argument("--optimizer", choices=["adam", "spsa"])
        run.add_argument("--learning-rate", type=float, help="Adam step size")

        subparsers.add_parser(
            "report", parents=[common], argument_default=argparse.SUPPRESS, help="rebuild reports from run logs"
        )
        return parser

    def options(self, args: argparse.Namespace) -> dict[str, Any]:
        """Merge config file values under command-line flags."""
        given = vars(args)
        merged: dict[str, Any] = {}
        if "config" in given:
            from_file = load_config_file(given["config"])
            unknown = sorted(set(from_file) - KNOWN_OPTIONS)
            if unknown:
                raise ConfigError(f"unknown options in {given['config']}: {', '.join(unknown)}")
            merged.update(from_file)
        merged.update(given)
        return merged

    @staticmethod
    def configure_logging(level: str | None) -> None:
        """Configure the root handler."""
        name = (level or os.getenv(ENV_LOG_LEVEL) or "INFO").upper()
        if not isinstance(logging.getLevelName(name), int):
            raise ConfigError(f"unknown log level {name!r}")
        logging.basicConfig(level=name, format=LOG_FORMAT, force=True)

    @staticmethod
    def time_model(options: dict[str, Any]) -> TimeModel:
        """Build the time model from options."""
        fields: dict[str, Any] = {}
        if "minutes_per_circuit" in options:
            fields["mean_minutes"] = options["minutes_per_circuit"]
        if "minutes_half_width" in options:
            fields["half_width_minutes"] = options["minutes_half_width"]
        return TimeModel.model_validate(fields)

    @classmethod
    def build_plan(cls, options: dict[str, Any]) -> ExperimentPlan:
        """Build an experiment plan from merged options."""
        values = {**RUN_DEFAULTS, **options}
        optimizer: dict[str, Any] = {"name": str(values["optimizer"]).lower()}
        if "learning_rate" in values:
            optimizer["learning_rate"] = values["learning_rate"]
        plan: dict[str, Any] = {
            "qubits": _qubits(values["qubits"]),
            "ansatz_kinds": _ansatz_kinds(values["ansatz"]),
            "q_deltas": _floats(values["qdelta"]),
            "seeds": values["seeds"],
            "epsilon_target": values["epsilon"],
            "max_iterations": values["max_iters"],
            "cost": str(values["cost"]).lower(),
            "mode": str(values["mode"]).lower(),
            "optimizer": OptimizerSettings.model_validate(optimizer),
            "time_model": cls.time_model(values),
            "workers": values.get("workers", 1),
        }
        if values.get("budget_minutes") is not None:
            plan["budget_minutes"] = values["budget_minutes"]
        if "shots" in values:
            plan["shots"] = values["shots"]
        return ExperimentPlan.model_validate(plan)

    def prepare(self, command: str, options: dict[str, Any]) -> Callable[[], object]:
        """Validate the options of one subcommand and bind them to it."""
        out_dir = Path(str(options.get("out", DEFAULT_OUT)))
        if command == "scaling":
            qubits = _qubits(options["qubits"]) if "qubits" in options else SCALING_QUBITS
            if not qubits or not all(1 <= n <= MAX_SPECTRUM_QUBITS for n in qubits):
                raise ConfigError(f"scaling qubits must lie in [1, {MAX_SPECTRUM_QUBITS}], got {qubits}")
            return partial(scaling_report, out_dir, qubits)
        if command == "run":
            return partial(self._run_plan, self.build_plan(options), out_dir)
        return partial(self._rebuild_report, out_dir, self.time_model(options))

    @staticmethod
    def _run_plan(plan: ExperimentPlan, out_dir: Path) -> None:
        bundle = run_plan(plan, out_dir)
        logger.info("summary written to %s", bundle.summary)

    @staticmethod
    def _rebuild_report(out_dir: Path, time_model: TimeModel) -> None:
        bundle = report_from_directory(out_dir, time_model)
        logger.info("summary rebuilt from %d run logs at %s", len(bundle.run_files), bundle.summary)

    def run(self) -> int:
        """Run Application and return the process exit code."""
        args = self._parser.parse_args(self._argv)
        try:
            options = self.options(args)
            self.configure_logging(options.get("log_level"))
            task = self.prepare(args.command, options)
        except ValueError as error:
            logger.error("configuration error: %s", error)
            return EXIT_CONFIG_ERROR
        try:
            task()
        except ReportError as error:
            logger.error("report error: %s", error)
            return EXIT_RUN_ERROR
        except PoissonVqlsError as error:
            logger.error("%s failed: %s: %s", args.command, type(error).__name__, error)
            return EXIT_RUN_ERROR
        return EXIT_OK
