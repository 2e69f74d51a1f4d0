"""Test decomposition analytics."""

from poisson_vqls.poisson import DecompositionKind, build_decomposition, decomposition_stats


class TestDecompositionStats:
    """Test decomposition_stats."""

    def test_hed(self) -> None:
        """Test HED always has four terms and its deepest circuit is L3 or L2."""
        assert decomposition_stats(DecompositionKind.HED, 2) == {"term_count": 4, "max_circuit_gates": 6}
        stats = decomposition_stats(DecompositionKind.HED, 5)
        assert stats["term_count"] == 4  # noqa: PLR2004
        assert stats["max_circuit_gates"] == 24  # noqa: PLR2004

    def test_pauli(self) -> None:
        """Test Pauli stats for two qubits."""
        assert decomposition_stats(DecompositionKind.PAULI, 2) == {"term_count": 4, "max_circuit_gates": 2}

    def test_dispatch(self) -> None:
        """Test build_decomposition honours the kind."""
        assert build_decomposition(DecompositionKind.PAULI, 3).kind is DecompositionKind.PAULI
        assert build_decomposition(DecompositionKind.HED, 3).kind is DecompositionKind.HED
