"""Classical reference oracle."""

from .classical import (
    ClassicalSolution,
    dense_eigen_sym,
    dense_matmul,
    dense_solve,
    thomas,
    thomas_solve,
    uniform_rhs,
)

__all__ = [
    "ClassicalSolution",
    "dense_eigen_sym",
    "dense_matmul",
    "dense_solve",
    "thomas",
    "thomas_solve",
    "uniform_rhs",
]
