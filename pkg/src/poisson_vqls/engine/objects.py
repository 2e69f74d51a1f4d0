"""Run records."""

from pydantic import BaseModel, ConfigDict, Field

from .config import RunConfig


class IterationRecord(BaseModel):
    """One optimizer iteration: the cost at `params` and the cumulative circuit count after the step."""

    model_config = ConfigDict(frozen=True)

    iteration: int = Field(ge=0)
    cost: float
    params: tuple[float, ...]
    circuit_evaluations: int = Field(ge=0)
    trace_distance: float


class RunRecord(BaseModel):
    """Outcome of one optimization run."""

    config: RunConfig
    iterations: list[IterationRecord] = Field(default_factory=list)
    converged: bool = False
    timed_out: bool = False
    failed: bool = False
    failure_reason: str | None = None
    final_cost: float | None = None
    final_params: tuple[float, ...] = ()
    trace_distance: float | None = None
    threshold: float
    condition_number: float
    circuit_evaluations: int = 0
    wall_time_seconds: float = Field(default=0.0, exclude=True)

    @property
    def iteration_count(self) -> int:
        """Get number of iterations run."""
        return len(self.iterations)

    @property
    def cost_trajectory(self) -> list[float]:
        """Get cost per iteration."""
        return [record.cost for record in self.iterations]
