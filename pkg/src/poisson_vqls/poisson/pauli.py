"""Pauli-basis decomposition of the DPEM.

A Pauli string label reads most significant qubit first: in "IX" the X acts on qubit 0.
"""

import itertools
from functools import reduce

import numpy as np
from numpy.typing import NDArray

from ..errors import DecompositionError
from ..qsim import Circuit, Gate, x, y, z
from .decomposition import Decomposition, DecompositionKind, DecompositionTerm
from .system import PoissonSystem, build_dpem_dense

PAULI_TABLES: dict[int, dict[str, float]] = {
    2: {"II": 2.0, "IX": -1.0, "XX": -0.5, "YY": -0.5},
    3: {
        "III": 2.0,
        "IIX": -1.0,
        "IXX": -0.5,
        "XXX": -0.25,
        "YYX": -0.25,
        "YXY": -0.25,
        "IYY": -0.5,
        "XYY": 0.25,
    },
}
MAX_PROJECTION_QUBITS: int = 6
PRUNE_THRESHOLD: float = 1e-12

_PAULI_MATRICES: dict[str, NDArray[np.complex128]] = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
_PAULI_GATES = {"X": x, "Y": y, "Z": z}


def pauli_string_matrix(label: str) -> NDArray[np.complex128]:
    """Get the dense tensor product of a Pauli string."""
    return reduce(np.kron, (_PAULI_MATRICES[char] for char in label))


def pauli_string_circuit(label: str) -> Circuit:
    """Realize a Pauli string as one single-qubit gate per non-identity factor."""
    n = len(label)
    gates: list[Gate] = []
    for position, char in enumerate(label):
        if char not in _PAULI_MATRICES:
            raise DecompositionError(f"invalid Pauli character {char!r} in {label!r}")
        if char != "I":
            gates.append(_PAULI_GATES[char](n - 1 - position))
    return Circuit(n, tuple(gates))


def _decomposition(n: int, coefficients: dict[str, float]) -> Decomposition:
    terms = tuple(
        DecompositionTerm(coeff=coeff, circuit=pauli_string_circuit(label), label=label)
        for label, coeff in coefficients.items()
    )
    return Decomposition(system=PoissonSystem(n), terms=terms, kind=DecompositionKind.PAULI)


def pauli_terms_explicit(n: int) -> Decomposition:
    """Get the tabulated Pauli decomposition for n in {2, 3}."""
    if n not in PAULI_TABLES:
        raise DecompositionError(f"explicit Pauli tables exist for n in {sorted(PAULI_TABLES)}, got {n}")
    return _decomposition(n, PAULI_TABLES[n])


def pauli_coefficients(n: int) -> dict[str, float]:
    """Get every Pauli coefficient Tr(P A) / 2^n above the pruning threshold."""
    if not 1 <= n <= MAX_PROJECTION_QUBITS:
        raise DecompositionError(f"Pauli projection needs 1 <= n <= {MAX_PROJECTION_QUBITS}, got {n}")
    matrix = build_dpem_dense(n)
    dimension = 2**n
    coefficients: dict[str, float] = {}
    for chars in itertools.product("IXYZ", repeat=n):
        label = "".join(chars)
        # Tr(P A) = sum_ij P_ij A_ji; A is real symmetric so only the real part survives.
        coeff = float(np.real(np.sum(pauli_string_matrix(label) * matrix.T))) / dimension
        if abs(coeff) > PRUNE_THRESHOLD:
            coefficients[label] = coeff
    return coefficients


def pauli_projection(n: int) -> Decomposition:
    """Get the Pauli decomposition of DPEM(n) by trace projection."""
    return _decomposition(n, pauli_coefficients(n))
