"""Experiment plans and the hardware time model."""

import re
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..ansatz import AnsatzKind, AnsatzSpec
from ..engine import DEFAULT_SHOTS, CostKind, EvaluationMode, OptimizerSettings, RunConfig
from ..poisson import DecompositionKind
from ..poisson.system import MAX_SPECTRUM_QUBITS

DEFAULT_QUBITS: tuple[int, ...] = tuple(range(3, 10))
DEFAULT_Q_DELTAS: tuple[float, ...] = (0.01, 0.1)

_RANGE_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\.\.|-)\s*(\d+)\s*$")


def parse_qubit_range(text: str) -> tuple[int, ...]:
    """Parse `3..9`, `3-9`, `3,5,7` or `4`."""
    match = _RANGE_PATTERN.match(text)
    if match:
        first, last = int(match.group(1)), int(match.group(2))
        if first > last:
            raise ValueError(f"empty qubit range {text!r}")
        return tuple(range(first, last + 1))
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as error:
        raise ValueError(f"invalid qubit range {text!r}") from error
    if not values:
        raise ValueError(f"invalid qubit range {text!r}")
    return values


def parse_float_list(text: str) -> tuple[float, ...]:
    """Parse `0.01,0.1`."""
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as error:
        raise ValueError(f"invalid number list {text!r}") from error
    if not values:
        raise ValueError(f"invalid number list {text!r}")
    return values


class TimeModel(BaseModel):
    """Minutes per circuit evaluation on hardware: mean +- half width."""

    model_config = ConfigDict(frozen=True)

    mean_minutes: float = Field(default=1.0, gt=0.0)
    half_width_minutes: float = Field(default=0.5, ge=0.0)

    @model_validator(mode="after")
    def check_width(self) -> Self:
        """Keep the low estimate non-negative."""
        if self.half_width_minutes > self.mean_minutes:
            raise ValueError("half width cannot exceed the mean")
        return self

    @property
    def low(self) -> float:
        """Get optimistic minutes per circuit."""
        return self.mean_minutes - self.half_width_minutes

    @property
    def high(self) -> float:
        """Get pessimistic minutes per circuit."""
        return self.mean_minutes + self.half_width_minutes


class PlanCell(BaseModel):
    """One (n, ansatz, q_delta) cell of a plan."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    ansatz: AnsatzKind
    q_delta: float = Field(gt=0.0, le=1.0)

    @property
    def label(self) -> str:
        """Get `<ansatz>_n<n>_q<qdelta>`."""
        return f"{self.ansatz}_n{self.n}_q{self.q_delta:g}"

    def run_name(self, seed: int) -> str:
        """Get the run file stem for a seed."""
        return f"{self.label}_s{seed}"


class ExperimentPlan(BaseModel):
    """Grid of runs: qubits x ansatz families x q_delta values, several seeds per cell."""

    model_config = ConfigDict(frozen=True)

    qubits: tuple[int, ...] = DEFAULT_QUBITS
    ansatz_kinds: tuple[AnsatzKind, ...] = (AnsatzKind.GEA, AnsatzKind.HEA)
    q_deltas: tuple[float, ...] = DEFAULT_Q_DELTAS
    seeds: int = Field(default=5, ge=1)
    epsilon_target: float = Field(default=0.01, gt=0.0, lt=1.0)
    max_iterations: int = Field(default=2000, ge=1)
    budget_minutes: float | None = Field(default=None, gt=0.0)
    cost: CostKind = CostKind.LOCAL
    mode: EvaluationMode = EvaluationMode.EXACT
    shots: int = Field(default=DEFAULT_SHOTS, ge=1)
    decomposition: DecompositionKind = DecompositionKind.HED
    optimizer: OptimizerSettings = OptimizerSettings()
    time_model: TimeModel = TimeModel()
    workers: int = Field(default=1, ge=1)

    @field_validator("qubits")
    @classmethod
    def check_qubits(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        """Require a non-empty range of sizes the spectrum can be computed for."""
        if not value or min(value) < 1 or max(value) > MAX_SPECTRUM_QUBITS:
            raise ValueError(f"qubit range must be non-empty and within [1, {MAX_SPECTRUM_QUBITS}], got {value}")
        return value

    @field_validator("ansatz_kinds")
    @classmethod
    def check_kinds(cls, value: tuple[AnsatzKind, ...]) -> tuple[AnsatzKind, ...]:
        """Require at least one ansatz family."""
        if not value:
            raise ValueError("at least one ansatz family is required")
        return value

    @field_validator("q_deltas")
    @classmethod
    def check_q_deltas(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        """Require variances in (0, 1]."""
        if not value or any(not 0.0 < q_delta <= 1.0 for q_delta in value):
            raise ValueError(f"q_delta values must be in (0, 1], got {value}")
        return value

    def cells(self) -> list[PlanCell]:
        """List the cells in (n, ansatz, q_delta) order."""
        return [
            PlanCell(n=n, ansatz=kind, q_delta=q_delta)
            for n in self.qubits
            for kind in self.ansatz_kinds
            for q_delta in self.q_deltas
        ]

    def run_config(self, cell: PlanCell, seed: int) -> RunConfig:
        """Build the run configuration of one cell and seed."""
        return RunConfig(
            n=cell.n,
            decomposition=self.decomposition,
            ansatz=AnsatzSpec(kind=cell.ansatz, n=cell.n),
            cost=self.cost,
            mode=self.mode,
            shots=self.shots,
            q_delta=cell.q_delta,
            seed=seed,
            epsilon_target=self.epsilon_target,
            max_iterations=self.max_iterations,
            budget_minutes=self.budget_minutes,
            minutes_per_circuit=self.time_model.mean_minutes,
            optimizer=self.optimizer,
        )
