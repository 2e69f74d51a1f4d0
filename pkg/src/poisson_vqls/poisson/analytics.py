"""Decomposition dispatch and term/depth analytics."""

from typing import TypedDict

from .decomposition import Decomposition, DecompositionKind
from .hed import hed_terms
from .pauli import pauli_projection


class DecompositionStats(TypedDict):
    """Term count and largest term circuit of a decomposition."""

    term_count: int
    max_circuit_gates: int


def build_decomposition(kind: DecompositionKind, n: int) -> Decomposition:
    """Build a decomposition of DPEM(n)."""
    if kind is DecompositionKind.HED:
        return hed_terms(n)
    return pauli_projection(n)


def decomposition_stats(kind: DecompositionKind, n: int) -> DecompositionStats:
    """Get term count and the gate count of the deepest term circuit."""
    decomposition = build_decomposition(kind, n)
    return {
        "term_count": len(decomposition),
        "max_circuit_gates": max(term.circuit.depth for term in decomposition.terms),
    }
