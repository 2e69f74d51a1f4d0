"""Line-delimited run logs: a header, one line per iteration, a result."""

from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from ..engine import IterationRecord, RunConfig, RunRecord
from ..errors import ReportError

RUNS_DIRECTORY: str = "runs"


class HeaderLine(BaseModel):
    """First line: the run configuration."""

    kind: Literal["header"] = "header"
    config: RunConfig


class IterationLine(IterationRecord):
    """One optimizer iteration."""

    kind: Literal["iteration"] = "iteration"


class ResultLine(BaseModel):
    """Last line: the run outcome."""

    kind: Literal["result"] = "result"
    converged: bool
    timed_out: bool
    failed: bool
    failure_reason: str | None
    final_cost: float | None
    final_params: tuple[float, ...]
    trace_distance: float | None
    threshold: float
    condition_number: float
    circuit_evaluations: int


LogLine = Annotated[HeaderLine | IterationLine | ResultLine, Field(discriminator="kind")]
_LOG_LINE: TypeAdapter[HeaderLine | IterationLine | ResultLine] = TypeAdapter(LogLine)


def run_file_name(config: RunConfig) -> str:
    """Get `<ansatz>_n<n>_q<qdelta>_s<seed>.jsonl`."""
    return f"{config.ansatz.kind}_n{config.n}_q{config.q_delta:g}_s{config.seed}.jsonl"


def write_run_log(record: RunRecord, directory: Path) -> Path:
    """Write a run record under `directory`."""
    path = directory / run_file_name(record.config)
    lines = [HeaderLine(config=record.config).model_dump_json()]
    lines.extend(IterationLine(**iteration.model_dump()).model_dump_json() for iteration in record.iterations)
    lines.append(ResultLine(**record.model_dump(exclude={"config", "iterations"})).model_dump_json())
    try:
        directory.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as error:
        raise ReportError(f"cannot write run log {path}: {error}") from error
    return path


def read_run_log(path: Path) -> RunRecord:
    """Read a run record back."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ReportError(f"cannot read run log {path}: {error}") from error
    header: HeaderLine | None = None
    result: ResultLine | None = None
    iterations: list[IterationRecord] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            parsed = _LOG_LINE.validate_json(line)
        except ValidationError as error:
            raise ReportError(f"{path}:{number}: malformed log line") from error
        if isinstance(parsed, HeaderLine):
            header = parsed
        elif isinstance(parsed, IterationLine):
            iterations.append(IterationRecord(**parsed.model_dump(exclude={"kind"})))
        else:
            result = parsed
    if header is None or result is None:
        raise ReportError(f"{path}: run log needs a header and a result line")
    return RunRecord(config=header.config, iterations=iterations, **result.model_dump(exclude={"kind"}))


def read_run_logs(directory: Path) -> list[RunRecord]:
    """Read every run log in a directory, in file-name order."""
    if not directory.is_dir():
        raise ReportError(f"no run directory at {directory}")
    return [read_run_log(path) for path in sorted(directory.glob("*.jsonl"))]
