"""Classical reference solution and dense linear algebra."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..errors import PoissonVqlsError
from ..poisson import build_dpem_tridiagonal

MAX_THOMAS_QUBITS: int = 20
MAX_DENSE_DIMENSION: int = 1024
SYMMETRY_TOLERANCE: float = 1e-12

FloatArray = NDArray[np.float64]


@dataclass(frozen=True, slots=True)
class ClassicalSolution:
    """Solution of A x = b and its unit-norm state |x>."""

    x_raw: FloatArray
    x_normalized: FloatArray


def uniform_rhs(n: int) -> FloatArray:
    """Get b = (1, ..., 1) / sqrt(2^n), the amplitudes of H^n |0>."""
    dimension = 2**n
    return np.full(dimension, 1.0 / np.sqrt(dimension))


def thomas(sub: FloatArray, diag: FloatArray, sup: FloatArray, rhs: FloatArray) -> FloatArray:
    """Solve a tridiagonal system by forward elimination and back substitution.

    sub[i] multiplies x[i] in row i+1; sup[i] multiplies x[i+1] in row i.
    """
    size = diag.size
    modified_sup = np.zeros(max(size - 1, 0))
    modified_rhs = np.zeros(size)
    pivot = diag[0]
    modified_rhs[0] = rhs[0] / pivot
    for i in range(1, size):
        modified_sup[i - 1] = sup[i - 1] / pivot
        pivot = diag[i] - sub[i - 1] * modified_sup[i - 1]
        modified_rhs[i] = (rhs[i] - sub[i - 1] * modified_rhs[i - 1]) / pivot
    solution = np.zeros(size)
    solution[-1] = modified_rhs[-1]
    for i in range(size - 2, -1, -1):
        solution[i] = modified_rhs[i] - modified_sup[i] * solution[i + 1]
    return solution


def thomas_solve(n: int) -> ClassicalSolution:
    """Solve DPEM(n) x = b for the uniform right-hand side."""
    if not 1 <= n <= MAX_THOMAS_QUBITS:
        raise PoissonVqlsError(f"Thomas solve supports 1 <= n <= {MAX_THOMAS_QUBITS}, got {n}")
    sub, diag, sup = build_dpem_tridiagonal(n)
    x_raw = thomas(sub, diag, sup, uniform_rhs(n))
    return ClassicalSolution(x_raw=x_raw, x_normalized=x_raw / np.linalg.norm(x_raw))


def _check_dimension(matrix: NDArray[np.generic]) -> None:
    if matrix.ndim != 2 or matrix.shape[0] > MAX_DENSE_DIMENSION:  # noqa: PLR2004
        raise PoissonVqlsError(f"dense routines accept matrices up to {MAX_DENSE_DIMENSION}, got {matrix.shape}")


def dense_matmul(first: NDArray[np.generic], second: NDArray[np.generic]) -> NDArray[np.generic]:
    """Dense matrix product."""
    _check_dimension(first)
    return np.asarray(first @ second)


def dense_eigen_sym(matrix: FloatArray) -> FloatArray:
    """Eigenvalues of a symmetric matrix, ascending."""
    _check_dimension(matrix)
    if matrix.shape[0] != matrix.shape[1] or not np.allclose(matrix, matrix.T, atol=SYMMETRY_TOLERANCE):
        raise PoissonVqlsError("symmetric eigensolver needs a symmetric matrix")
    return np.linalg.eigvalsh(matrix)


def dense_solve(matrix: FloatArray, rhs: FloatArray) -> FloatArray:
    """Solve a dense system by LU-based Gaussian elimination."""
    _check_dimension(matrix)
    return np.linalg.solve(matrix, rhs)
