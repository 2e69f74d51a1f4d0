"""Statevector simulation."""

from dataclasses import dataclass
from functools import cache
from typing import Self

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import CircuitError
from .circuit import Circuit
from .gates import X_FAMILY, Z_FAMILY, Gate

MAX_QUBITS: int = 20
MAX_DENSE_QUBITS: int = 10

Amplitudes = NDArray[np.complex128]


@dataclass(slots=True)
class StateVector:
    """Pure state of n qubits stored as 2^n complex amplitudes."""

    n: int
    amps: Amplitudes

    def __post_init__(self) -> None:
        """Validate state."""
        if not 1 <= self.n <= MAX_QUBITS:
            raise CircuitError(f"qubit count must be in [1, {MAX_QUBITS}], got {self.n}")
        if self.amps.shape != (2**self.n,):
            raise CircuitError(f"expected {2**self.n} amplitudes, got shape {self.amps.shape}")

    @classmethod
    def zero(cls, n: int) -> Self:
        """Get |0...0>."""
        return cls.basis(n, 0)

    @classmethod
    def basis(cls, n: int, index: int) -> Self:
        """Get the computational basis state |index>."""
        amps = np.zeros(2**n, dtype=np.complex128)
        amps[index] = 1.0
        return cls(n, amps)

    @classmethod
    def from_amplitudes(cls, amplitudes: ArrayLike, normalize: bool = False) -> Self:
        """Build a state from an amplitude vector of length 2^n."""
        amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        n = int(amps.size).bit_length() - 1
        if amps.size != 2**n:
            raise CircuitError(f"amplitude count {amps.size} is not a power of two")
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise CircuitError("cannot normalize the zero vector")
            amps = amps / norm
        return cls(n, amps)

    def norm(self) -> float:
        """Get the Euclidean norm."""
        return float(np.linalg.norm(self.amps))

    def inner(self, other: "StateVector") -> complex:
        """Get <self|other>."""
        if other.n != self.n:
            raise CircuitError(f"qubit-count mismatch: {self.n} vs {other.n}")
        return complex(np.vdot(self.amps, other.amps))

    def probabilities(self) -> NDArray[np.float64]:
        """Get basis-state probabilities."""
        return np.abs(self.amps) ** 2

    def copy(self) -> Self:
        """Copy state."""
        return type(self)(self.n, self.amps.copy())


def _check_gate(gate: Gate, n: int) -> None:
    if max(gate.qubits) >= n:
        raise CircuitError(f"gate {gate.kind} on qubits {gate.qubits} exceeds n={n}")


def _apply_to_tensor(tensor: NDArray[np.complex128], gate: Gate, n: int) -> None:
    """Apply a gate in place to a tensor of shape (2,)*n + (batch,).

    Axis a of the tensor holds qubit n-1-a, matching little-endian basis indices.
    """
    index: list[slice | int] = [slice(None)] * (n + 1)
    for control in gate.controls:
        index[n - 1 - control] = 1
    target_axis = n - 1 - gate.target
    if gate.kind in Z_FAMILY:
        index[target_axis] = 1
        tensor[tuple(index)] *= -1
        return
    if gate.kind in X_FAMILY:
        index[target_axis] = 0
        zero_key = tuple(index)
        index[target_axis] = 1
        one_key = tuple(index)
        zero_block = tensor[zero_key].copy()
        tensor[zero_key] = tensor[one_key]
        tensor[one_key] = zero_block
        return
    key = tuple(index)
    # Axis position of the target once the control axes are indexed away.
    axis = target_axis - sum(1 for control in gate.controls if n - 1 - control < target_axis)
    updated = np.tensordot(gate.matrix, tensor[key], axes=([1], [axis]))
    tensor[key] = np.moveaxis(updated, 0, axis)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate, returning a new state."""
    _check_gate(gate, state.n)
    tensor = state.amps.reshape((2,) * state.n + (1,)).copy()
    _apply_to_tensor(tensor, gate, state.n)
    return StateVector(state.n, tensor.reshape(-1))


def run_circuit(circuit: Circuit, initial: StateVector) -> StateVector:
    """Apply every gate of a circuit to a state."""
    if circuit.n != initial.n:
        raise CircuitError(f"qubit-count mismatch: circuit {circuit.n} vs state {initial.n}")
    n = circuit.n
    tensor = initial.amps.reshape((2,) * n + (1,)).copy()
    for gate in circuit.gates:
        _apply_to_tensor(tensor, gate, n)
    return StateVector(n, tensor.reshape(-1))


def circuit_to_matrix(circuit: Circuit) -> NDArray[np.complex128]:
    """Get the dense unitary of a circuit; column k is the circuit applied to |k>."""
    n = circuit.n
    if n > MAX_DENSE_QUBITS:
        raise CircuitError(f"dense extraction is limited to {MAX_DENSE_QUBITS} qubits, got {n}")
    dimension = 2**n
    tensor = np.eye(dimension, dtype=np.complex128).reshape((2,) * n + (dimension,))
    for gate in circuit.gates:
        _apply_to_tensor(tensor, gate, n)
    return tensor.reshape(dimension, dimension)


@cache
def z_signs(n: int, j: int) -> NDArray[np.float64]:
    """Get the diagonal of Z_j: +1 where bit j of the index is 0, else -1."""
    bits = (np.arange(2**n) >> j) & 1
    signs = 1.0 - 2.0 * bits
    signs.setflags(write=False)
    return signs


def expectation_zj(state: StateVector, j: int) -> float:
    """Get <state|Z_j|state>."""
    if not 0 <= j < state.n:
        raise CircuitError(f"qubit index {j} out of range for n={state.n}")
    return float(np.dot(state.probabilities(), z_signs(state.n, j)))
