"""Circuits."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Self

from ..errors import CircuitError
from .gates import Gate, GateKind


@dataclass(frozen=True, slots=True)
class Circuit:
    """Ordered gate list on n qubits.

    Gates are applied left-to-right in time, so the circuit matrix is the product of the
    gate matrices taken right-to-left. Qubit 0 is the least significant bit of a basis index.
    """

    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        """Validate circuit."""
        if self.n < 1:
            raise CircuitError(f"circuit needs at least one qubit, got n={self.n}")
        for gate in self.gates:
            if max(gate.qubits) >= self.n:
                raise CircuitError(f"gate {gate.kind} on qubits {gate.qubits} exceeds n={self.n}")

    @classmethod
    def from_gates(cls, n: int, gates: Iterable[Gate]) -> Self:
        """Build a circuit from any gate iterable."""
        return cls(n, tuple(gates))

    def __len__(self) -> int:
        """Get gate count."""
        return len(self.gates)

    @property
    def depth(self) -> int:
        """Get depth, counting every listed gate as one layer."""
        return len(self.gates)

    def gate_count(self, kind: GateKind | None = None) -> int:
        """Count gates, optionally of a single kind."""
        if kind is None:
            return len(self.gates)
        return sum(1 for gate in self.gates if gate.kind is kind)

    def then(self, other: "Circuit") -> Self:
        """Append another circuit in time."""
        if other.n != self.n:
            raise CircuitError(f"qubit-count mismatch: {self.n} vs {other.n}")
        return type(self)(self.n, self.gates + other.gates)

    def extended(self, gates: Iterable[Gate]) -> Self:
        """Append gates in time."""
        return type(self)(self.n, self.gates + tuple(gates))

    def adjoint(self) -> Self:
        """Get the inverse circuit."""
        return type(self)(self.n, tuple(gate.adjoint() for gate in reversed(self.gates)))

    def widened(self, n: int) -> Self:
        """Get the same gates on a register of n qubits (extra qubits idle)."""
        if n < self.n:
            raise CircuitError(f"cannot narrow a {self.n}-qubit circuit to {n} qubits")
        return type(self)(n, self.gates)


def controlled(circuit: Circuit) -> Circuit:
    """Get the circuit controlled by a new ancilla qubit at index n."""
    ancilla = circuit.n
    return Circuit(circuit.n + 1, tuple(gate.with_control(ancilla) for gate in circuit.gates))
