"""Normalized global and local VQLS cost functions."""

from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..ansatz import AnsatzSpec, build_ansatz, prepare_b
from ..errors import CostEvaluationError
from ..poisson import Decomposition, build_decomposition
from ..qsim import Circuit
from .config import RunConfig
from .evaluators import AbstractEvaluator, EvaluationMode, ExactEvaluator, SampledEvaluator, TermProblem
from .terms import CostKind, TermFamily, TermKey, enumerate_term_keys

DENOMINATOR_FLOOR: float = 1e-14


@dataclass(frozen=True, slots=True)
class CostBreakdown:
    """One cost evaluation with the term values it was built from."""

    cost: float
    numerator: float
    denominator: float
    term_values: dict[TermKey, float]
    unique_circuit_count: int


def combine_terms(
    kind: CostKind,
    coefficients: NDArray[np.float64],
    values: Mapping[TermKey, float],
    dedup: bool = True,
) -> tuple[float, float]:
    """Fold term values into (numerator, denominator).

    With dedup an off-diagonal key stands for both orders of its pair, and the diagonal beta
    terms contribute c_l^2 without a circuit.
    """
    numerator = 0.0
    denominator = float(np.sum(coefficients**2)) if dedup else 0.0
    overlap = 0.0
    for key, value in values.items():
        weight = coefficients[key.l] * coefficients[key.l_prime]
        if dedup and key.l != key.l_prime:
            weight *= 2.0
        if key.family is TermFamily.BETA:
            denominator += weight * value
        elif key.family is TermFamily.GAMMA_LOCAL:
            numerator += weight * value
        else:
            overlap += coefficients[key.l] * value
    if kind is CostKind.GLOBAL:
        numerator = overlap**2
    return numerator, denominator


class CostFunction:
    """Cost of an ansatz state for one decomposition, term set and evaluator."""

    def __init__(
        self,
        decomposition: Decomposition,
        spec: AnsatzSpec,
        kind: CostKind = CostKind.LOCAL,
        evaluator: AbstractEvaluator | None = None,
        dedup: bool = True,
    ) -> None:
        """Initialize cost function."""
        if spec.n != decomposition.n:
            raise CostEvaluationError(f"ansatz n={spec.n} does not match decomposition n={decomposition.n}")
        self._decomposition: Decomposition = decomposition
        self._spec: AnsatzSpec = spec
        self._kind: CostKind = kind
        self._evaluator: AbstractEvaluator = evaluator or ExactEvaluator()
        self._dedup: bool = dedup
        self._keys: list[TermKey] = enumerate_term_keys(len(decomposition), decomposition.n, kind, dedup)
        self._prepare_b: Circuit = prepare_b(decomposition.n)
        # Counters
        self.evaluations: int = 0
        self.circuit_evaluations: int = 0

    @classmethod
    def from_config(cls, config: RunConfig) -> "CostFunction":
        """Build the cost function a run configuration describes."""
        evaluator: AbstractEvaluator = ExactEvaluator()
        if config.mode is EvaluationMode.SAMPLED:
            evaluator = SampledEvaluator(shots=config.shots, seed=config.seed, workers=config.workers)
        return cls(
            decomposition=build_decomposition(config.decomposition, config.n),
            spec=config.ansatz,
            kind=config.cost,
            evaluator=evaluator,
            dedup=config.dedup,
        )

    @property
    def n(self) -> int:
        """Get qubit count."""
        return self._decomposition.n

    @property
    def kind(self) -> CostKind:
        """Get cost kind."""
        return self._kind

    @property
    def spec(self) -> AnsatzSpec:
        """Get ansatz spec."""
        return self._spec

    @property
    def decomposition(self) -> Decomposition:
        """Get decomposition."""
        return self._decomposition

    @property
    def keys(self) -> list[TermKey]:
        """Get the term keys of one evaluation."""
        return list(self._keys)

    @property
    def unique_circuit_count(self) -> int:
        """Get circuits per evaluation."""
        return len(self._keys)

    @property
    def offset(self) -> float:
        """Get a in cost = a - s * numerator / denominator."""
        return 0.5 if self._kind is CostKind.LOCAL else 1.0

    @property
    def scale(self) -> float:
        """Get s in cost = a - s * numerator / denominator."""
        return 0.5 / self.n if self._kind is CostKind.LOCAL else 1.0

    def from_ratio(self, numerator: float, denominator: float) -> float:
        """Get the normalized cost of a numerator/denominator pair."""
        if denominator <= DENOMINATOR_FLOOR:
            raise CostEvaluationError(f"degenerate denominator {denominator:.3e}: A|psi> vanishes")
        return self.offset - self.scale * numerator / denominator

    def ansatz_circuit(self, params: ArrayLike) -> Circuit:
        """Build V(theta)."""
        return build_ansatz(self._spec, params)

    def evaluate_circuit(self, ansatz: Circuit) -> CostBreakdown:
        """Evaluate the cost of the state an arbitrary circuit prepares."""
        problem = TermProblem(decomposition=self._decomposition, ansatz=ansatz, prepare_b=self._prepare_b)
        values = self._evaluator.evaluate(problem, self._keys, self.evaluations)
        self.evaluations += 1
        self.circuit_evaluations += len(self._keys)
        numerator, denominator = combine_terms(self._kind, self._decomposition.coefficients, values, self._dedup)
        return CostBreakdown(
            cost=self.from_ratio(numerator, denominator),
            numerator=numerator,
            denominator=denominator,
            term_values=values,
            unique_circuit_count=len(self._keys),
        )

    def breakdown(self, params: ArrayLike) -> CostBreakdown:
        """Evaluate the cost at theta."""
        return self.evaluate_circuit(self.ansatz_circuit(params))

    def __call__(self, params: ArrayLike) -> float:
        """Get the cost at theta."""
        return self.breakdown(params).cost


def local_cost(config: RunConfig, params: ArrayLike) -> tuple[float, CostBreakdown]:
    """Evaluate the normalized local cost at theta."""
    breakdown = CostFunction.from_config(config.model_copy(update={"cost": CostKind.LOCAL})).breakdown(params)
    return breakdown.cost, breakdown


def global_cost(config: RunConfig, params: ArrayLike) -> tuple[float, CostBreakdown]:
    """Evaluate the normalized global cost at theta."""
    breakdown = CostFunction.from_config(config.model_copy(update={"cost": CostKind.GLOBAL})).breakdown(params)
    return breakdown.cost, breakdown


def beta_term(
    decomposition: Decomposition,
    ansatz: Circuit,
    l: int,  # noqa: E741
    l_prime: int,
    evaluator: AbstractEvaluator | None = None,
) -> float:
    """Re<psi|A_l^dag A_l'|psi>; exactly 1 without a circuit when l = l'."""
    if l == l_prime:
        return 1.0
    problem = TermProblem(decomposition=decomposition, ansatz=ansatz, prepare_b=prepare_b(decomposition.n))
    key = TermKey(TermFamily.BETA, l, l_prime)
    return (evaluator or ExactEvaluator()).evaluate(problem, [key], 0)[key]


def gamma_local_term(
    decomposition: Decomposition,
    ansatz: Circuit,
    prepare: Circuit,
    l: int,  # noqa: E741
    l_prime: int,
    j: int,
    evaluator: AbstractEvaluator | None = None,
) -> float:
    """Re<psi|A_l^dag U Z_j U^dag A_l'|psi>."""
    if not 0 <= j < decomposition.n:
        raise CostEvaluationError(f"qubit index {j} out of range for n={decomposition.n}")
    problem = TermProblem(decomposition=decomposition, ansatz=ansatz, prepare_b=prepare)
    key = TermKey(TermFamily.GAMMA_LOCAL, l, l_prime, j)
    return (evaluator or ExactEvaluator()).evaluate(problem, [key], 0)[key]
