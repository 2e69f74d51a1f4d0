"""Dense statevector simulator."""

from .circuit import Circuit, controlled
from .gates import Gate, GateKind, cx, cz, h, mcx, mcz, ry, x, y, z
from .hadamard import (
    ShotResult,
    hadamard_test_circuit,
    hadamard_test_exact,
    hadamard_test_probabilities,
    hadamard_test_sampled,
    sample_ancilla,
)
from .state import StateVector, apply_gate, circuit_to_matrix, expectation_zj, run_circuit

__all__ = [
    "Circuit",
    "Gate",
    "GateKind",
    "ShotResult",
    "StateVector",
    "apply_gate",
    "circuit_to_matrix",
    "controlled",
    "cx",
    "cz",
    "expectation_zj",
    "h",
    "hadamard_test_circuit",
    "hadamard_test_exact",
    "hadamard_test_probabilities",
    "hadamard_test_sampled",
    "mcx",
    "mcz",
    "ry",
    "run_circuit",
    "sample_ancilla",
    "x",
    "y",
    "z",
]
