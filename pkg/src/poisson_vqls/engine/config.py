"""Run configuration."""

from enum import StrEnum
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..ansatz import AnsatzKind, AnsatzSpec
from ..poisson import DecompositionKind
from ..poisson.system import MAX_SPECTRUM_QUBITS
from .evaluators import DEFAULT_SHOTS, EvaluationMode
from .terms import CostKind


class OptimizerName(StrEnum):
    """Optimizer family."""

    ADAM = "adam"
    SPSA = "spsa"


class OptimizerSettings(BaseModel):
    """Optimizer hyper-parameters."""

    model_config = ConfigDict(frozen=True)

    name: OptimizerName = OptimizerName.ADAM
    learning_rate: float = Field(default=0.05, gt=0.0)
    beta_1: float = Field(default=0.9, ge=0.0, lt=1.0)
    beta_2: float = Field(default=0.999, ge=0.0, lt=1.0)
    eps: float = Field(default=1e-8, gt=0.0)
    spsa_a: float = Field(default=0.2, gt=0.0)
    spsa_c: float = Field(default=0.1, gt=0.0)
    spsa_alpha: float = Field(default=0.602, gt=0.0)
    spsa_gamma: float = Field(default=0.101, gt=0.0)
    spsa_stability: float | None = Field(default=None, ge=0.0)


class RunConfig(BaseModel):
    """Configuration of one optimization run."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, le=MAX_SPECTRUM_QUBITS)
    decomposition: DecompositionKind = DecompositionKind.HED
    ansatz: AnsatzSpec
    cost: CostKind = CostKind.LOCAL
    mode: EvaluationMode = EvaluationMode.EXACT
    shots: int = Field(default=DEFAULT_SHOTS, ge=1)
    q_delta: float = Field(default=0.01, gt=0.0, le=1.0)
    seed: int = Field(default=0, ge=0)
    epsilon_target: float = Field(default=0.01, gt=0.0, lt=1.0)
    max_iterations: int = Field(default=2000, ge=0)
    budget_minutes: float | None = Field(default=None, gt=0.0)
    minutes_per_circuit: float = Field(default=1.0, gt=0.0)
    optimizer: OptimizerSettings = OptimizerSettings()
    initial_params: tuple[float, ...] | None = None
    dedup: bool = True
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def check_consistency(self) -> Self:
        """Check ansatz size and warm-start length."""
        if self.ansatz.n != self.n:
            raise ValueError(f"ansatz acts on {self.ansatz.n} qubits, run has n={self.n}")
        if self.initial_params is not None and len(self.initial_params) != self.ansatz.parameter_count:
            raise ValueError(
                f"initial_params has {len(self.initial_params)} values, ansatz takes {self.ansatz.parameter_count}"
            )
        return self

    @classmethod
    def for_ansatz(cls, n: int, kind: AnsatzKind = AnsatzKind.GEA, layers: int | None = None, **fields: object) -> Self:
        """Build a configuration around a default ansatz of the given family."""
        ansatz = AnsatzSpec(kind=kind, n=n) if layers is None else AnsatzSpec(kind=kind, n=n, layers=layers)
        return cls.model_validate({"n": n, "ansatz": ansatz, **fields})
