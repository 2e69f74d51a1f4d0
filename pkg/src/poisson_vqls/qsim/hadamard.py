"""Hadamard test."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import CircuitError
from .circuit import Circuit, controlled
from .gates import h
from .state import StateVector, run_circuit


@dataclass(frozen=True, slots=True)
class ShotResult:
    """Ancilla measurement counts."""

    shots: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate counts."""
        if self.shots < 1:
            raise CircuitError(f"shots must be positive, got {self.shots}")
        if sum(self.counts.values()) != self.shots:
            raise CircuitError(f"counts {self.counts} do not sum to {self.shots} shots")

    @property
    def bias(self) -> float:
        """Get the estimate P(0) - P(1)."""
        return (self.counts.get(0, 0) - self.counts.get(1, 0)) / self.shots


def _check_pair(prepared: Circuit, tested: Circuit) -> None:
    if prepared.n != tested.n:
        raise CircuitError(f"qubit-count mismatch: prepared {prepared.n} vs tested {tested.n}")


def hadamard_test_exact(prepared: Circuit, tested: Circuit) -> float:
    """Get Re<psi|U|psi> with |psi> = prepared|0>, by direct inner product."""
    _check_pair(prepared, tested)
    psi = run_circuit(prepared, StateVector.zero(prepared.n))
    return float(np.real(psi.inner(run_circuit(tested, psi))))


def hadamard_test_circuit(prepared: Circuit, tested: Circuit) -> Circuit:
    """Build the ancilla circuit: prepare, H on ancilla, controlled U, H on ancilla.

    The ancilla is qubit n, the most significant bit of the (n+1)-qubit register.
    """
    _check_pair(prepared, tested)
    ancilla = prepared.n
    return (
        prepared.widened(ancilla + 1)
        .extended([h(ancilla)])
        .then(controlled(tested))
        .extended([h(ancilla)])
    )


def hadamard_test_probabilities(prepared: Circuit, tested: Circuit) -> tuple[float, float]:
    """Get exact ancilla probabilities (P0, P1) of the Hadamard-test circuit."""
    circuit = hadamard_test_circuit(prepared, tested)
    final = run_circuit(circuit, StateVector.zero(circuit.n))
    p0, p1 = final.probabilities().reshape(2, -1).sum(axis=1)
    return float(p0), float(p1)


def sample_ancilla(p0: float, shots: int, rng: np.random.Generator) -> ShotResult:
    """Sample the ancilla bit `shots` times."""
    if shots < 1:
        raise CircuitError(f"shots must be positive, got {shots}")
    zeros = int(rng.binomial(shots, min(max(p0, 0.0), 1.0)))
    return ShotResult(shots=shots, counts={0: zeros, 1: shots - zeros})


def hadamard_test_sampled(prepared: Circuit, tested: Circuit, shots: int, seed: int) -> float:
    """Estimate Re<psi|U|psi> as P(0) - P(1) from `shots` ancilla measurements."""
    p0, _ = hadamard_test_probabilities(prepared, tested)
    return sample_ancilla(p0, shots, np.random.default_rng(seed)).bias
