"""Benchmark plans, reports and scaling analytics."""

from .config_file import load_config_file, normalize_key, parse_key_value_lines
from .plan import ExperimentPlan, PlanCell, TimeModel, parse_float_list, parse_qubit_range
from .renderers import AbstractRenderer, CsvTableRenderer, PlotSeries, SvgPlotRenderer, format_cell, read_table
from .report import (
    EXTRAPOLATION_COLUMNS,
    SUMMARY_COLUMNS,
    ReportBundle,
    build_report,
    extrapolate,
    report_from_directory,
    summarize,
)
from .runlog import RUNS_DIRECTORY, read_run_log, read_run_logs, run_file_name, write_run_log
from .runner import run_one, run_plan
from .scaling import SCALING_COLUMNS, scaling_report, scaling_row, scaling_rows
from .timing import TimeToSolution, time_to_solution

__all__ = [
    "EXTRAPOLATION_COLUMNS",
    "RUNS_DIRECTORY",
    "SCALING_COLUMNS",
    "SUMMARY_COLUMNS",
    "AbstractRenderer",
    "CsvTableRenderer",
    "ExperimentPlan",
    "PlanCell",
    "PlotSeries",
    "ReportBundle",
    "SvgPlotRenderer",
    "TimeModel",
    "TimeToSolution",
    "build_report",
    "extrapolate",
    "format_cell",
    "load_config_file",
    "normalize_key",
    "parse_float_list",
    "parse_key_value_lines",
    "parse_qubit_range",
    "read_run_log",
    "read_run_logs",
    "read_table",
    "report_from_directory",
    "run_file_name",
    "run_one",
    "run_plan",
    "scaling_report",
    "scaling_row",
    "scaling_rows",
    "summarize",
    "time_to_solution",
]
