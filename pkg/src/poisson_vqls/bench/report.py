"""Summary tables, extrapolation and metric plots built from run records."""

import logging
import statistics
from collections import defaultdict
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TypedDict

import numpy as np
from pydantic import BaseModel

from ..ansatz import AnsatzKind, AnsatzSpec
from ..engine import RunRecord
from .plan import PlanCell, TimeModel
from .renderers import CsvTableRenderer, PlotSeries, SvgPlotRenderer
from .runlog import RUNS_DIRECTORY, read_run_logs
from .timing import time_to_solution

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS: tuple[str, ...] = (
    "n",
    "ansatz",
    "q_delta",
    "cost",
    "mode",
    "seeds",
    "converged",
    "timed_out",
    "failed",
    "median_iterations",
    "median_circuit_evaluations",
    "median_days_mid",
    "median_trace_distance",
)
EXTRAPOLATION_COLUMNS: tuple[str, ...] = ("ansatz", "metric", "n", "value", "extrapolated")
METRICS: dict[str, str] = {
    "median_iterations": "iterations",
    "median_circuit_evaluations": "circuit_evaluations",
    "median_days_mid": "days_mid",
}

CellKey = tuple[int, str, float]


class SummaryRow(TypedDict):
    """One plan cell; medians cover converged runs, trace distance covers every completed run."""

    n: int
    ansatz: str
    q_delta: float
    cost: str
    mode: str
    seeds: int
    converged: int
    timed_out: int
    failed: int
    median_iterations: float | None
    median_circuit_evaluations: float | None
    median_days_mid: float | None
    median_trace_distance: float | None


class ExtrapolationRow(TypedDict):
    """Observed or fitted metric value."""

    ansatz: str
    metric: str
    n: int
    value: float
    extrapolated: bool


class ReportBundle(BaseModel):
    """Files of one report."""

    run_files: list[Path] = []
    summary: Path
    extrapolation: Path
    plots: list[Path] = []


def _cell_key(record: RunRecord) -> CellKey:
    return (record.config.n, str(record.config.ansatz.kind), record.config.q_delta)


def _median(values: Sequence[float]) -> float | None:
    return float(statistics.median(values)) if values else None


def metric_value(row: SummaryRow, column: str) -> float | None:
    """Get a numeric summary column, None when empty."""
    value: object = row.get(column)
    return float(value) if isinstance(value, int | float) and not isinstance(value, bool) else None


def group_records(records: Iterable[RunRecord]) -> dict[CellKey, list[RunRecord]]:
    """Group records by cell, runs ordered by seed."""
    groups: dict[CellKey, list[RunRecord]] = defaultdict(list)
    for record in records:
        groups[_cell_key(record)].append(record)
    return {key: sorted(runs, key=lambda run: run.config.seed) for key, runs in sorted(groups.items())}


def summary_row(key: CellKey, runs: Sequence[RunRecord], time_model: TimeModel) -> SummaryRow:
    """Summarize the runs of one cell."""
    n, ansatz, q_delta = key
    converged = [run for run in runs if run.converged]
    completed = [run.trace_distance for run in runs if run.trace_distance is not None]
    return {
        "n": n,
        "ansatz": ansatz,
        "q_delta": q_delta,
        "cost": str(runs[0].config.cost) if runs else "",
        "mode": str(runs[0].config.mode) if runs else "",
        "seeds": len(runs),
        "converged": len(converged),
        "timed_out": sum(run.timed_out for run in runs),
        "failed": sum(run.failed for run in runs),
        "median_iterations": _median([run.iteration_count for run in converged]),
        "median_circuit_evaluations": _median([run.circuit_evaluations for run in converged]),
        "median_days_mid": _median([time_to_solution(run, time_model)["days_mid"] for run in converged]),
        "median_trace_distance": _median(completed),
    }


def summarize(
    records: Iterable[RunRecord], time_model: TimeModel | None = None, cells: Sequence[PlanCell] | None = None
) -> list[SummaryRow]:
    """One row per cell; plan cells without runs still get a row."""
    model = time_model or TimeModel()
    groups = group_records(records)
    keys = list(groups)
    if cells is not None:
        keys = [(cell.n, str(cell.ansatz), cell.q_delta) for cell in cells]
    return [summary_row(key, groups.get(key, []), model) for key in keys]


def extrapolate(rows: Sequence[SummaryRow]) -> list[ExtrapolationRow]:
    """Fit log10(metric) linearly in n per ansatz over observed cells; fill missing n from the fit."""
    qubits = sorted({row["n"] for row in rows})
    result: list[ExtrapolationRow] = []
    for ansatz in sorted({row["ansatz"] for row in rows}):
        for column, metric in METRICS.items():
            observed: dict[int, list[float]] = defaultdict(list)
            for row in rows:
                measured = metric_value(row, column)
                if row["ansatz"] == ansatz and measured is not None and measured > 0:
                    observed[row["n"]].append(measured)
            points = {n: float(statistics.median(values)) for n, values in sorted(observed.items())}
            fit = None
            if len(points) >= 2:
                fit = np.polyfit(list(points), np.log10(list(points.values())), deg=1)
            for n in qubits:
                if n in points:
                    value, extrapolated = points[n], False
                elif fit is not None:
                    value, extrapolated = float(10 ** np.polyval(fit, n)), True
                else:
                    continue
                result.append(
                    {"ansatz": ansatz, "metric": metric, "n": n, "value": value, "extrapolated": extrapolated}
                )
    return result


def _metric_plot(
    rows: Sequence[SummaryRow], extrapolated: Sequence[ExtrapolationRow], column: str, time_model: TimeModel
) -> SvgPlotRenderer:
    metric = METRICS[column]
    renderer = SvgPlotRenderer(f"{metric} to threshold", "qubits", metric, log_y=True)
    for ansatz, q_delta in sorted({(row["ansatz"], row["q_delta"]) for row in rows}):
        cell_rows = [row for row in rows if (row["ansatz"], row["q_delta"]) == (ansatz, q_delta)]
        values = [(row["n"], metric_value(row, column)) for row in cell_rows]
        points = [(n, value) for n, value in values if value is not None]
        if not points:
            continue
        series: PlotSeries = {
            "label": f"{ansatz.upper()} q={q_delta:g}",
            "x": [float(n) for n, _ in points],
            "y": [value for _, value in points],
        }
        if column == "median_days_mid":
            series["y_low"] = [value * time_model.low / time_model.mean_minutes for _, value in points]
            series["y_high"] = [value * time_model.high / time_model.mean_minutes for _, value in points]
        renderer.add_series(series)
    for ansatz in sorted({row["ansatz"] for row in extrapolated}):
        predicted = [row for row in extrapolated if row["ansatz"] == ansatz and row["metric"] == metric]
        if any(row["extrapolated"] for row in predicted):
            renderer.add_series(
                {
                    "label": f"{ansatz.upper()} fit",
                    "x": [float(row["n"]) for row in predicted],
                    "y": [row["value"] for row in predicted],
                    "dashed": True,
                }
            )
    return renderer


def _trajectory_plot(key: CellKey, runs: Sequence[RunRecord]) -> SvgPlotRenderer:
    n, ansatz, q_delta = key
    renderer = SvgPlotRenderer(f"{ansatz.upper()} n={n} q={q_delta:g}", "iteration", "cost", log_y=True)
    for run in runs:
        trajectory = run.cost_trajectory
        if trajectory:
            renderer.add_series(
                {"label": f"seed {run.config.seed}", "x": [float(i) for i in range(len(trajectory))], "y": trajectory}
            )
    return renderer


def _parameter_plot(qubits: Sequence[int]) -> SvgPlotRenderer:
    renderer = SvgPlotRenderer("Ansatz parameters", "qubits", "parameters")
    for kind in AnsatzKind:
        renderer.add_series(
            {
                "label": kind.upper(),
                "x": [float(n) for n in qubits],
                "y": [float(AnsatzSpec(kind=kind, n=n).parameter_count) for n in qubits],
            }
        )
    return renderer


def build_report(
    records: Sequence[RunRecord],
    out_dir: Path,
    time_model: TimeModel | None = None,
    cells: Sequence[PlanCell] | None = None,
) -> ReportBundle:
    """Write summary.csv, extrapolation.csv and the plots for a set of runs."""
    model = time_model or TimeModel()
    rows = summarize(records, model, cells)
    extrapolated = extrapolate(rows)
    summary = CsvTableRenderer(SUMMARY_COLUMNS).add_rows(rows).write(out_dir / "summary.csv")
    extrapolation = CsvTableRenderer(EXTRAPOLATION_COLUMNS).add_rows(extrapolated).write(out_dir / "extrapolation.csv")
    plots = [
        _metric_plot(rows, extrapolated, column, model).write(out_dir / f"{metric}.svg")
        for column, metric in METRICS.items()
    ]
    for key, runs in group_records(records).items():
        n, ansatz, q_delta = key
        plots.append(_trajectory_plot(key, runs).write(out_dir / "trajectories" / f"{ansatz}_n{n}_q{q_delta:g}.svg"))
    qubits = sorted({row["n"] for row in rows})
    if qubits:
        plots.append(_parameter_plot(qubits).write(out_dir / "parameters.svg"))
    logger.info("report for %d runs in %d cells written to %s", len(records), len(rows), out_dir)
    return ReportBundle(summary=summary, extrapolation=extrapolation, plots=plots)


def report_from_directory(out_dir: Path, time_model: TimeModel | None = None) -> ReportBundle:
    """Rebuild the report from the run logs under `out_dir/runs`."""
    runs_dir = out_dir / RUNS_DIRECTORY
    records = read_run_logs(runs_dir)
    bundle = build_report(records, out_dir, time_model)
    bundle.run_files = sorted(runs_dir.glob("*.jsonl"))
    return bundle
