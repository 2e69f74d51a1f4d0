"""Gates."""

import math
from dataclasses import dataclass
from enum import StrEnum
from typing import Self

import numpy as np
from numpy.typing import NDArray

from ..errors import CircuitError


class GateKind(StrEnum):
    """Gate kind."""

    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"
    RY = "Ry"
    CX = "CX"
    CZ = "CZ"
    MCX = "MCX"
    MCZ = "MCZ"


X_FAMILY: frozenset[GateKind] = frozenset({GateKind.X, GateKind.CX, GateKind.MCX})
Z_FAMILY: frozenset[GateKind] = frozenset({GateKind.Z, GateKind.CZ, GateKind.MCZ})

_SQRT_HALF: float = 1.0 / math.sqrt(2.0)
_BASE_MATRICES: dict[GateKind, NDArray[np.complex128]] = {
    GateKind.H: np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=np.complex128),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def ry_matrix(angle: float) -> NDArray[np.complex128]:
    """Ry rotation matrix, exp(-i angle Y / 2)."""
    cos, sin = math.cos(angle / 2.0), math.sin(angle / 2.0)
    return np.array([[cos, -sin], [sin, cos]], dtype=np.complex128)


@dataclass(frozen=True, slots=True)
class Gate:
    """Single-target gate with an optional control set.

    Every kind acts on exactly one target; CX/CZ carry one control, MCX/MCZ any number
    (MCZ without controls is a plain Z). H, Y and Ry may carry controls once a circuit is
    made controlled.
    """

    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    angle: float | None = None

    def __post_init__(self) -> None:
        """Validate gate."""
        if len(self.targets) != 1:
            raise CircuitError(f"{self.kind} acts on exactly one target, got {self.targets}")
        if set(self.targets) & set(self.controls):
            raise CircuitError(f"targets {self.targets} overlap controls {self.controls}")
        if len(set(self.controls)) != len(self.controls):
            raise CircuitError(f"duplicate controls {self.controls}")
        if any(qubit < 0 for qubit in self.qubits):
            raise CircuitError(f"negative qubit index in {self.qubits}")
        if self.kind is GateKind.RY:
            if self.angle is None or not math.isfinite(self.angle):
                raise CircuitError(f"Ry angle must be a finite real number, got {self.angle}")
        elif self.angle is not None:
            raise CircuitError(f"{self.kind} takes no angle")
        if self.kind in (GateKind.CX, GateKind.CZ) and len(self.controls) != 1:
            raise CircuitError(f"{self.kind} takes exactly one control")
        if self.kind in (GateKind.X, GateKind.Z) and self.controls:
            raise CircuitError(f"controlled {self.kind} must be expressed as C{self.kind} or MC{self.kind}")

    @property
    def target(self) -> int:
        """Get target qubit."""
        return self.targets[0]

    @property
    def qubits(self) -> tuple[int, ...]:
        """Get all qubits the gate touches."""
        return self.controls + self.targets

    @property
    def matrix(self) -> NDArray[np.complex128]:
        """Get the 2x2 matrix applied to the target when all controls are set."""
        if self.kind is GateKind.RY:
            return ry_matrix(self.angle or 0.0)
        if self.kind in X_FAMILY:
            return _BASE_MATRICES[GateKind.X]
        if self.kind in Z_FAMILY:
            return _BASE_MATRICES[GateKind.Z]
        return _BASE_MATRICES[self.kind]

    def adjoint(self) -> Self:
        """Get the inverse gate."""
        if self.kind is GateKind.RY:
            return type(self)(self.kind, self.targets, self.controls, -(self.angle or 0.0))
        # H, X, Y, Z and their controlled forms are self-inverse.
        return self

    def with_control(self, qubit: int) -> Self:
        """Get the gate with one more control."""
        controls = (*self.controls, qubit)
        kind = self.kind
        if kind in X_FAMILY:
            kind = GateKind.CX if len(controls) == 1 else GateKind.MCX
        elif kind in Z_FAMILY:
            kind = GateKind.CZ if len(controls) == 1 else GateKind.MCZ
        return type(self)(kind, self.targets, controls, self.angle)


def h(qubit: int) -> Gate:
    """Hadamard gate."""
    return Gate(GateKind.H, (qubit,))


def x(qubit: int) -> Gate:
    """Pauli X gate."""
    return Gate(GateKind.X, (qubit,))


def y(qubit: int) -> Gate:
    """Pauli Y gate."""
    return Gate(GateKind.Y, (qubit,))


def z(qubit: int) -> Gate:
    """Pauli Z gate."""
    return Gate(GateKind.Z, (qubit,))


def ry(qubit: int, angle: float) -> Gate:
    """Ry rotation gate."""
    return Gate(GateKind.RY, (qubit,), angle=float(angle))


def cx(control: int, target: int) -> Gate:
    """Controlled X gate."""
    return Gate(GateKind.CX, (target,), (control,))


def cz(first: int, second: int) -> Gate:
    """Controlled Z gate, symmetric in its two qubits."""
    return Gate(GateKind.CZ, (second,), (first,))


def mcx(controls: tuple[int, ...] | list[int], target: int) -> Gate:
    """Multi-controlled X gate."""
    controls = tuple(controls)
    if len(controls) == 0:
        return x(target)
    if len(controls) == 1:
        return cx(controls[0], target)
    return Gate(GateKind.MCX, (target,), controls)


def mcz(qubits: tuple[int, ...] | list[int]) -> Gate:
    """Multi-controlled Z gate over a qubit set (phase flip when every qubit is 1)."""
    qubits = tuple(qubits)
    if len(qubits) == 0:
        raise CircuitError("mcz needs at least one qubit")
    return Gate(GateKind.MCZ, (qubits[-1],), qubits[:-1])
