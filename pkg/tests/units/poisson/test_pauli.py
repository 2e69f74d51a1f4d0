"""Test the Pauli decomposition."""

import numpy as np
import pytest

from poisson_vqls.errors import DecompositionError
from poisson_vqls.poisson import (
    DecompositionKind,
    build_dpem_dense,
    pauli_coefficients,
    pauli_projection,
    pauli_string_circuit,
    pauli_terms_explicit,
)
from poisson_vqls.poisson.pauli import PAULI_TABLES, pauli_string_matrix
from poisson_vqls.qsim import circuit_to_matrix, x


class TestPauliStrings:
    """Test Pauli string realization."""

    def test_label_order(self) -> None:
        """Test the rightmost character acts on qubit 0."""
        assert pauli_string_circuit("IX").gates == (x(0),)
        assert pauli_string_circuit("XI").gates == (x(1),)

    @pytest.mark.parametrize("label", ["XY", "ZIY", "YXZ", "IIII"])
    def test_circuit_matches_kron(self, label: str) -> None:
        """Test the circuit equals the tensor product."""
        assert np.allclose(circuit_to_matrix(pauli_string_circuit(label)), pauli_string_matrix(label))

    def test_invalid_character(self) -> None:
        """Test unknown characters are rejected."""
        with pytest.raises(DecompositionError):
            pauli_string_circuit("XA")


class TestPauliProjection:
    """Test Pauli projection."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_tables_match_projection(self, n: int) -> None:
        """Test the tabulated coefficients equal the projected ones."""
        projected = pauli_coefficients(n)
        assert set(projected) == set(PAULI_TABLES[n])
        for label, coeff in PAULI_TABLES[n].items():
            assert projected[label] == pytest.approx(coeff, abs=1e-12)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_reconstructs_dpem(self, n: int) -> None:
        """Test the projection sums back to the DPEM."""
        decomposition = pauli_projection(n)
        assert decomposition.kind is DecompositionKind.PAULI
        assert np.max(np.abs(decomposition.reconstruct() - build_dpem_dense(n))) < 1e-10  # noqa: PLR2004

    def test_one_qubit(self) -> None:
        """Test DPEM(1) = 2I - X."""
        assert pauli_coefficients(1) == pytest.approx({"I": 2.0, "X": -1.0})

    @pytest.mark.parametrize("n", [2, 3])
    def test_explicit(self, n: int) -> None:
        """Test the explicit tables reconstruct the DPEM."""
        assert np.allclose(pauli_terms_explicit(n).reconstruct(), build_dpem_dense(n))

    def test_term_count_grows(self) -> None:
        """Test the Pauli term count grows with n."""
        counts = [len(pauli_coefficients(n)) for n in range(1, 6)]
        assert counts[:3] == [2, 4, 8]
        assert all(later > earlier for earlier, later in zip(counts, counts[1:], strict=False))

    def test_range(self) -> None:
        """Test projection bounds."""
        with pytest.raises(DecompositionError):
            pauli_coefficients(7)
        with pytest.raises(DecompositionError):
            pauli_terms_explicit(4)
