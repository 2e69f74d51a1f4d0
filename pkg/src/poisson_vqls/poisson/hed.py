"""High-entanglement decomposition: A = 2.5 I - L1 - L2 - 0.5 L3."""

from enum import StrEnum
from functools import cache

import numpy as np
from numpy.typing import NDArray

from ..errors import DecompositionError
from ..qsim import Circuit, circuit_to_matrix, cx, mcx, mcz, x
from .decomposition import Decomposition, DecompositionKind, DecompositionTerm
from .system import PoissonSystem

HED_COEFFICIENTS: tuple[float, float, float, float] = (2.5, -1.0, -1.0, -0.5)
HED_LABELS: tuple[str, str, str, str] = ("I", "L1", "L2", "L3")

# Sizes on which the C_i ordering of L2 is checked against its target matrix.
_ORDER_CHECK_QUBITS: range = range(2, 5)


class ProductOrder(StrEnum):
    """Time order in which the C_i factors of L2 are applied."""

    OPERATOR = "operator"  # C_{n-1} first, the literal product C_1 C_2 ... C_{n-1} acting on a ket
    CIRCUIT = "circuit"  # C_1 first


def l1_circuit(n: int) -> Circuit:
    """L1: X on qubit 0, the block-diagonal [[0,1],[1,0]] pattern."""
    return Circuit(n, (x(0),))


def c_gate(i: int, n: int) -> Circuit:
    """C_i: CX fan-out from qubit i, mCX onto i, mirrored fan-out; 2i + 1 gates.

    Swaps basis pairs (m 2^(i+1) + 2^i - 1, m 2^(i+1) + 2^i) and fixes everything else.
    """
    if not 1 <= i <= n - 1:
        raise DecompositionError(f"C_i needs 1 <= i <= n-1, got i={i}, n={n}")
    fan_in = [cx(i, target) for target in range(i - 1, -1, -1)]
    fan_out = [cx(i, target) for target in range(i)]
    return Circuit(n, (*fan_in, mcx(tuple(range(i)), i), *fan_out))


def l2_target_matrix(n: int) -> NDArray[np.float64]:
    """Dense L2: 1 at both corners, [[0,1],[1,0]] on every index pair (2k+1, 2k+2)."""
    dimension = PoissonSystem(n).dimension
    target = np.eye(dimension)
    for first in range(1, dimension - 1, 2):
        target[[first, first + 1]] = target[[first + 1, first]]
    return target


def _l2_circuit_in_order(n: int, order: ProductOrder) -> Circuit:
    factors = range(1, n)
    if order is ProductOrder.OPERATOR:
        factors = range(n - 1, 0, -1)
    gates = [gate for i in factors for gate in c_gate(i, n).gates]
    return Circuit(n, tuple(gates))


@cache
def l2_product_order() -> ProductOrder:
    """Pick the C_i application order whose circuit reproduces the dense L2 target."""
    for order in ProductOrder:
        if all(
            np.allclose(circuit_to_matrix(_l2_circuit_in_order(n, order)), l2_target_matrix(n))
            for n in _ORDER_CHECK_QUBITS
        ):
            return order
    raise DecompositionError("no ordering of the C_i factors reproduces the L2 target matrix")


def l2_circuit(n: int) -> Circuit:
    """L2 = C_1 C_2 ... C_{n-1}; n^2 - 1 gates."""
    if n < 2:  # noqa: PLR2004
        raise DecompositionError(f"L2 needs n >= 2, got {n}")
    return _l2_circuit_in_order(n, l2_product_order())


def l3_circuit(n: int) -> Circuit:
    """L3 = mCZ X^n mCZ X^n = diag(-1, 1, ..., 1, -1); 2n + 2 gates."""
    flips = [x(qubit) for qubit in range(n)]
    phase = mcz(tuple(range(n)))
    return Circuit(n, (*flips, phase, *flips, phase))


def hed_terms(n: int) -> Decomposition:
    """Build the four-term HED."""
    if n < 2:  # noqa: PLR2004
        raise DecompositionError(f"HED needs n >= 2, got {n}")
    circuits = (Circuit(n), l1_circuit(n), l2_circuit(n), l3_circuit(n))
    terms = tuple(
        DecompositionTerm(coeff=coeff, circuit=circuit, label=label)
        for coeff, circuit, label in zip(HED_COEFFICIENTS, circuits, HED_LABELS, strict=True)
    )
    return Decomposition(system=PoissonSystem(n), terms=terms, kind=DecompositionKind.HED)
