"""CSV and SVG renderers."""

import csv
import io
from abc import ABC, abstractmethod
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import NotRequired, Self, TypedDict

import matplotlib as mpl
from matplotlib.figure import Figure

from ..errors import ReportError

SVG_HASH_SALT: str = "poisson-vqls"


def format_cell(value: object) -> str:
    """Format one CSV cell; floats keep 12 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


class AbstractRenderer(ABC):
    """Abstract file renderer."""

    @abstractmethod
    def render(self) -> str:
        """Render the document."""
        raise NotImplementedError("render not implemented")

    def write(self, path: Path) -> Path:
        """Render to `path`."""
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(), encoding="utf-8")
        except OSError as error:
            raise ReportError(f"cannot write {path}: {error}") from error
        return path


class CsvTableRenderer(AbstractRenderer):
    """CSV table with a fixed column order."""

    def __init__(self, columns: Sequence[str]) -> None:
        """Initialize CSV Table Renderer."""
        self.columns: tuple[str, ...] = tuple(columns)
        self.rows: list[Mapping[str, object]] = []

    def add_row(self, row: Mapping[str, object]) -> Self:
        """Add a row."""
        missing = [column for column in self.columns if column not in row]
        if missing:
            raise ReportError(f"row is missing columns {missing}")
        self.rows.append(row)
        return self

    def add_rows(self, rows: Iterable[Mapping[str, object]]) -> Self:
        """Add rows."""
        for row in rows:
            self.add_row(row)
        return self

    def render(self) -> str:
        """Render header and rows."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(row[column]) for column in self.columns])
        return buffer.getvalue()


def read_table(path: Path) -> list[dict[str, str]]:
    """Read a CSV table back as string cells."""
    try:
        with path.open(encoding="utf-8", newline="") as handle:
            return list(csv.DictReader(handle))
    except OSError as error:
        raise ReportError(f"cannot read {path}: {error}") from error


class PlotSeries(TypedDict):
    """One plotted line."""

    label: str
    x: Sequence[float]
    y: Sequence[float]
    y_low: NotRequired[Sequence[float]]
    y_high: NotRequired[Sequence[float]]
    dashed: NotRequired[bool]


class SvgPlotRenderer(AbstractRenderer):
    """Line plot rendered to a reproducible SVG document."""

    def __init__(self, title: str, x_label: str, y_label: str, log_y: bool = False) -> None:
        """Initialize SVG Plot Renderer."""
        self.title: str = title
        self.x_label: str = x_label
        self.y_label: str = y_label
        self.log_y: bool = log_y
        self.series: list[PlotSeries] = []

    def add_series(self, series: PlotSeries) -> Self:
        """Add a series."""
        if len(series["x"]) != len(series["y"]):
            raise ReportError(f"series {series['label']!r} has {len(series['x'])} x and {len(series['y'])} y values")
        self.series.append(series)
        return self

    def add_many(self, series: Iterable[PlotSeries]) -> Self:
        """Add several series."""
        for item in series:
            self.add_series(item)
        return self

    def render(self) -> str:
        """Render the figure; the output depends only on the series."""
        figure = Figure(figsize=(6.4, 4.8))
        axes = figure.add_subplot()
        for item in self.series:
            style = "--" if item.get("dashed", False) else "-"
            if "y_low" in item and "y_high" in item:
                lower = [mid - low for mid, low in zip(item["y"], item["y_low"], strict=True)]
                upper = [high - mid for mid, high in zip(item["y"], item["y_high"], strict=True)]
                axes.errorbar(
                    item["x"], item["y"], yerr=[lower, upper], label=item["label"], linestyle=style, marker="o"
                )
            else:
                axes.plot(item["x"], item["y"], label=item["label"], linestyle=style, marker="o")
        if self.log_y:
            axes.set_yscale("log")
        axes.set_title(self.title)
        axes.set_xlabel(self.x_label)
        axes.set_ylabel(self.y_label)
        if self.series:
            axes.legend()
        buffer = io.StringIO()
        with mpl.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
            figure.savefig(buffer, format="svg", metadata={"Date": None})
        return buffer.getvalue()
