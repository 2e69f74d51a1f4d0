"""Decomposition of the DPEM into unitary circuit terms."""

import math
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from ..errors import DecompositionError
from ..qsim import Circuit, circuit_to_matrix
from .system import PoissonSystem


class DecompositionKind(StrEnum):
    """Decomposition kind."""

    PAULI = "pauli"
    HED = "hed"


@dataclass(frozen=True, slots=True)
class DecompositionTerm:
    """One weighted unitary term c_l A_l."""

    coeff: float
    circuit: Circuit
    label: str

    def __post_init__(self) -> None:
        """Validate term."""
        if not math.isfinite(self.coeff) or self.coeff == 0.0:
            raise DecompositionError(f"term {self.label} needs a finite nonzero coefficient, got {self.coeff}")


@dataclass(frozen=True, slots=True)
class Decomposition:
    """A = sum_l c_l A_l with every A_l realized as a circuit."""

    system: PoissonSystem
    terms: tuple[DecompositionTerm, ...]
    kind: DecompositionKind

    def __post_init__(self) -> None:
        """Validate decomposition."""
        for term in self.terms:
            if term.circuit.n != self.system.n:
                raise DecompositionError(f"term {term.label} acts on {term.circuit.n} qubits, expected {self.system.n}")

    def __len__(self) -> int:
        """Get term count."""
        return len(self.terms)

    @property
    def n(self) -> int:
        """Get qubit count."""
        return self.system.n

    @property
    def coefficients(self) -> NDArray[np.float64]:
        """Get the coefficient vector."""
        return np.array([term.coeff for term in self.terms])

    @property
    def labels(self) -> tuple[str, ...]:
        """Get term labels."""
        return tuple(term.label for term in self.terms)

    def reconstruct(self) -> NDArray[np.complex128]:
        """Get sum_l c_l matrix(A_l)."""
        dimension = self.system.dimension
        total = np.zeros((dimension, dimension), dtype=np.complex128)
        for term in self.terms:
            total += term.coeff * circuit_to_matrix(term.circuit)
        return total
