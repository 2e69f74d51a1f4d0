"""Decomposition and condition-number scaling tables."""

import logging
import math
from pathlib import Path
from typing import TypedDict

from ..poisson import DecompositionKind, condition_number, decomposition_stats, l2_circuit
from ..poisson.pauli import MAX_PROJECTION_QUBITS
from .renderers import CsvTableRenderer, PlotSeries, SvgPlotRenderer

logger = logging.getLogger(__name__)

SCALING_COLUMNS: tuple[str, ...] = (
    "n",
    "hed_terms",
    "hed_max_gates",
    "hed_l2_gates",
    "pauli_terms",
    "pauli_max_gates",
    "condition_number",
    "log2_condition_number",
)
SCALING_QUBITS: tuple[int, ...] = tuple(range(1, 13))


class ScalingRow(TypedDict):
    """Term counts, deepest-term gate counts and kappa at one n; None where undefined."""

    n: int
    hed_terms: int | None
    hed_max_gates: int | None
    hed_l2_gates: int | None
    pauli_terms: int | None
    pauli_max_gates: int | None
    condition_number: float
    log2_condition_number: float


class ScalingReport(TypedDict):
    """Files written by `scaling_report`."""

    table: Path
    plots: list[Path]


def scaling_row(n: int) -> ScalingRow:
    """Compute one row; HED needs n >= 2 and the Pauli projection n <= its dense limit."""
    kappa = condition_number(n)
    row: ScalingRow = {
        "n": n,
        "hed_terms": None,
        "hed_max_gates": None,
        "hed_l2_gates": None,
        "pauli_terms": None,
        "pauli_max_gates": None,
        "condition_number": kappa,
        "log2_condition_number": math.log2(kappa),
    }
    if n >= 2:
        hed = decomposition_stats(DecompositionKind.HED, n)
        row["hed_terms"] = hed["term_count"]
        row["hed_max_gates"] = hed["max_circuit_gates"]
        row["hed_l2_gates"] = l2_circuit(n).depth
    if n <= MAX_PROJECTION_QUBITS:
        pauli = decomposition_stats(DecompositionKind.PAULI, n)
        row["pauli_terms"] = pauli["term_count"]
        row["pauli_max_gates"] = pauli["max_circuit_gates"]
    return row


def scaling_rows(qubits: tuple[int, ...] = SCALING_QUBITS) -> list[ScalingRow]:
    """Compute rows for every n."""
    return [scaling_row(n) for n in qubits]


def _series(label: str, values: list[tuple[int, float | None]]) -> PlotSeries:
    points = [(n, value) for n, value in values if value is not None]
    return {"label": label, "x": [float(x) for x, _ in points], "y": [float(y) for _, y in points]}


def scaling_report(out_dir: Path, qubits: tuple[int, ...] = SCALING_QUBITS) -> ScalingReport:
    """Write `scaling.csv` and the term-count, gate-count and condition-number plots."""
    rows = scaling_rows(qubits)
    table = CsvTableRenderer(SCALING_COLUMNS).add_rows(rows).write(out_dir / "scaling.csv")
    plots = [
        SvgPlotRenderer("Decomposition terms", "qubits", "terms", log_y=True)
        .add_series(_series("HED", [(row["n"], row["hed_terms"]) for row in rows]))
        .add_series(_series("Pauli", [(row["n"], row["pauli_terms"]) for row in rows]))
        .write(out_dir / "scaling_terms.svg"),
        SvgPlotRenderer("Largest term circuit", "qubits", "gates")
        .add_series(_series("HED", [(row["n"], row["hed_max_gates"]) for row in rows]))
        .add_series(_series("HED L2", [(row["n"], row["hed_l2_gates"]) for row in rows]))
        .add_series(_series("Pauli", [(row["n"], row["pauli_max_gates"]) for row in rows]))
        .write(out_dir / "scaling_gates.svg"),
        SvgPlotRenderer("Condition number", "qubits", "kappa", log_y=True)
        .add_series(_series("DPEM", [(row["n"], row["condition_number"]) for row in rows]))
        .write(out_dir / "scaling_condition_number.svg"),
    ]
    logger.info("scaling report for n=%d..%d written to %s", min(qubits), max(qubits), out_dir)
    return {"table": table, "plots": plots}
