"""Discretized Poisson equation matrix."""

from dataclasses import dataclass
from functools import cache

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import eigh_tridiagonal

from ..errors import DecompositionError

MAX_DENSE_QUBITS: int = 10
MAX_SPECTRUM_QUBITS: int = 16


@dataclass(frozen=True, slots=True)
class PoissonSystem:
    """System size of a 1D Poisson problem on n qubits."""

    n: int

    def __post_init__(self) -> None:
        """Validate system."""
        if self.n < 1:
            raise DecompositionError(f"qubit count must be positive, got {self.n}")

    @property
    def dimension(self) -> int:
        """Get matrix dimension N = 2^n."""
        return 2**self.n


def _check_dense(n: int) -> None:
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise DecompositionError(f"n must be in [1, {MAX_DENSE_QUBITS}], got {n}")


def build_dpem_tridiagonal(n: int) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
    """Get the (sub, diagonal, super) bands of the DPEM."""
    dimension = PoissonSystem(n).dimension
    off = np.full(dimension - 1, -1.0)
    return off.copy(), np.full(dimension, 2.0), off


def build_dpem_dense(n: int) -> NDArray[np.float64]:
    """Get the dense 2^n x 2^n DPEM: 2 on the diagonal, -1 on both off-diagonals."""
    _check_dense(n)
    sub, diag, sup = build_dpem_tridiagonal(n)
    return np.diag(diag) + np.diag(sub, -1) + np.diag(sup, 1)


@cache
def condition_number(n: int) -> float:
    """Get lambda_max / lambda_min of the DPEM by a tridiagonal symmetric eigensolve."""
    if not 1 <= n <= MAX_SPECTRUM_QUBITS:
        raise DecompositionError(f"n must be in [1, {MAX_SPECTRUM_QUBITS}], got {n}")
    _, diag, sup = build_dpem_tridiagonal(n)
    eigenvalues = eigh_tridiagonal(diag, sup, eigvals_only=True)
    return float(eigenvalues[-1] / eigenvalues[0])
