"""Poisson model: DPEM, its decompositions and analytics."""

from .analytics import DecompositionStats, build_decomposition, decomposition_stats
from .decomposition import Decomposition, DecompositionKind, DecompositionTerm
from .hed import c_gate, hed_terms, l1_circuit, l2_circuit, l2_product_order, l2_target_matrix, l3_circuit
from .pauli import pauli_coefficients, pauli_projection, pauli_string_circuit, pauli_terms_explicit
from .system import PoissonSystem, build_dpem_dense, build_dpem_tridiagonal, condition_number

__all__ = [
    "Decomposition",
    "DecompositionKind",
    "DecompositionStats",
    "DecompositionTerm",
    "PoissonSystem",
    "build_decomposition",
    "build_dpem_dense",
    "build_dpem_tridiagonal",
    "c_gate",
    "condition_number",
    "decomposition_stats",
    "hed_terms",
    "l1_circuit",
    "l2_circuit",
    "l2_product_order",
    "l2_target_matrix",
    "l3_circuit",
    "pauli_coefficients",
    "pauli_projection",
    "pauli_string_circuit",
    "pauli_terms_explicit",
]
