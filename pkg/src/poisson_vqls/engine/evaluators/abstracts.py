"""Abstracts for term evaluators."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from ...errors import CostEvaluationError
from ...poisson import Decomposition
from ...qsim import Circuit, z
from ..terms import TermFamily, TermKey


class EvaluationMode(StrEnum):
    """How term expectation values are obtained."""

    EXACT = "exact"
    SAMPLED = "sampled"


@dataclass(frozen=True, slots=True)
class TermProblem:
    """Everything a term needs: the decomposition, V(theta) and U_b."""

    decomposition: Decomposition
    ansatz: Circuit
    prepare_b: Circuit


def term_circuits(problem: TermProblem, key: TermKey) -> tuple[Circuit, Circuit]:
    """Get the (prepared, tested) circuit pair whose Hadamard test yields the term."""
    terms = problem.decomposition.terms
    left, right = terms[key.l].circuit, terms[key.l_prime].circuit
    if key.family is TermFamily.BETA:
        return problem.ansatz, right.then(left.adjoint())
    if key.family is TermFamily.GAMMA_LOCAL:
        if key.j is None:
            raise CostEvaluationError(f"local term {key} needs a qubit index")
        tested = (
            right.then(problem.prepare_b.adjoint())
            .extended([z(key.j)])
            .then(problem.prepare_b)
            .then(left.adjoint())
        )
        return problem.ansatz, tested
    return Circuit(problem.ansatz.n), problem.ansatz.then(left).then(problem.prepare_b.adjoint())


class AbstractEvaluator(ABC):
    """Abstract term evaluator."""

    @property
    @abstractmethod
    def mode(self) -> EvaluationMode:
        """Get evaluation mode."""
        raise NotImplementedError("mode not implemented")

    @abstractmethod
    def evaluate(self, problem: TermProblem, keys: Sequence[TermKey], evaluation_index: int) -> dict[TermKey, float]:
        """Evaluate the real part of every requested term."""
        raise NotImplementedError("evaluate not implemented")
