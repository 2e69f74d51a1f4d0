"""Ansatz circuit builders."""

import itertools
import math

import numpy as np
from numpy.typing import ArrayLike

from ..errors import CircuitError
from ..qsim import Circuit, Gate, cz, h, ry, x
from .specs import AnsatzKind, AnsatzSpec, ParameterVector


def prepare_b(n: int) -> Circuit:
    """U_b = H on every qubit, preparing the uniform right-hand side."""
    return Circuit(n, tuple(h(qubit) for qubit in range(n)))


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Every unordered qubit pair."""
    return list(itertools.combinations(range(n), 2))


def brick_pairs(n: int, layer: int) -> list[tuple[int, int]]:
    """Nearest-neighbour pairs starting at qubit 0 on even layers and qubit 1 on odd layers."""
    return [(qubit, qubit + 1) for qubit in range(layer % 2, n - 1, 2)]


def _check_params(spec: AnsatzSpec, kind: AnsatzKind, params: ArrayLike) -> ParameterVector:
    if spec.kind is not kind:
        raise CircuitError(f"expected a {kind} spec, got {spec.kind}")
    values = np.asarray(params, dtype=np.float64).reshape(-1)
    if values.size != spec.parameter_count:
        raise CircuitError(
            f"{kind} with n={spec.n}, layers={spec.depth} takes {spec.parameter_count} parameters, got {values.size}"
        )
    return values


def _layered(spec: AnsatzSpec, values: ParameterVector, pairs_of_layer: list[list[tuple[int, int]]]) -> Circuit:
    gates: list[Gate] = list(prepare_b(spec.n).gates) if spec.precondition_b else []
    for layer, pairs in enumerate(pairs_of_layer):
        gates.extend(ry(qubit, values[layer * spec.n + qubit]) for qubit in range(spec.n))
        gates.extend(cz(first, second) for first, second in pairs)
    return Circuit(spec.n, tuple(gates))


def build_gea(spec: AnsatzSpec, params: ArrayLike) -> Circuit:
    """Globally-entangling ansatz: per layer, Ry on every qubit then CZ on every qubit pair."""
    values = _check_params(spec, AnsatzKind.GEA, params)
    return _layered(spec, values, [all_pairs(spec.n)] * spec.depth)


def build_hea(spec: AnsatzSpec, params: ArrayLike) -> Circuit:
    """Hardware-efficient ansatz: per layer, Ry on every qubit then a brick of nearest-neighbour CZs."""
    values = _check_params(spec, AnsatzKind.HEA, params)
    return _layered(spec, values, [brick_pairs(spec.n, layer) for layer in range(spec.depth)])


def build_ansatz(spec: AnsatzSpec, params: ArrayLike) -> Circuit:
    """Build the ansatz circuit of any family."""
    if spec.kind is AnsatzKind.GEA:
        return build_gea(spec, params)
    return build_hea(spec, params)


def reference_params(spec: AnsatzSpec) -> ParameterVector:
    """Angles around which runs are initialized.

    For a preconditioned GEA these prepare U_b|0> exactly. Layers at (-pi/2, pi/2, 0) map |+...+> to
    itself: the first rotation reaches |0...0>, which the CZs fix, and the third CZ block undoes the
    graph state left by the second. Any remaining layers come in zero-angle pairs whose CZ blocks cancel.
    Every other spec starts at zero.
    """
    angles = np.zeros((spec.depth, spec.n))
    if spec.kind is AnsatzKind.GEA and spec.precondition_b and spec.depth % 2 == 1 and spec.depth >= 3:  # noqa: PLR2004
        angles[0] = -math.pi / 2
        angles[1] = math.pi / 2
    return angles.reshape(-1)


def amplitude_embedding(vector: ArrayLike) -> Circuit:
    """Prepare a real unit vector exactly with a binary tree of (multi-)controlled Ry gates.

    Qubit n-1 is rotated first; each lower qubit is rotated once per setting of the qubits
    above it, with X gates selecting control values of 0. Signs are carried by the last level.
    """
    amplitudes = np.asarray(vector, dtype=np.float64).reshape(-1)
    n = int(amplitudes.size).bit_length() - 1
    if n < 1 or amplitudes.size != 2**n:
        raise CircuitError(f"amplitude count {amplitudes.size} is not a power of two >= 2")
    if not math.isclose(float(np.linalg.norm(amplitudes)), 1.0, abs_tol=1e-10):
        raise CircuitError("amplitude embedding needs a unit vector")
    gates: list[Gate] = []
    for level in range(n):
        qubit = n - 1 - level
        controls = tuple(range(qubit + 1, n))
        blocks = amplitudes.reshape(2**level, 2, -1)
        for prefix, block in enumerate(blocks):
            if level == n - 1:
                angle = 2.0 * math.atan2(block[1, 0], block[0, 0])
            else:
                angle = 2.0 * math.atan2(float(np.linalg.norm(block[1])), float(np.linalg.norm(block[0])))
            if angle == 0.0:
                continue
            zero_controls = [control for control in controls if not (prefix >> (control - qubit - 1)) & 1]
            rotation = ry(qubit, angle)
            for control in controls:
                rotation = rotation.with_control(control)
            gates.extend(x(control) for control in zero_controls)
            gates.append(rotation)
            gates.extend(x(control) for control in zero_controls)
    return Circuit(n, tuple(gates))
