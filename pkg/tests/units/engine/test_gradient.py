"""Test gradients."""

import numpy as np
import pytest

from poisson_vqls.ansatz import AnsatzKind, AnsatzSpec
from poisson_vqls.engine import CostFunction, CostKind, central_difference_gradient, parameter_shift_gradient
from poisson_vqls.poisson import Decomposition, hed_terms, pauli_projection


class TestParameterShift:
    """Test parameter_shift_gradient."""

    @pytest.mark.parametrize("kind", list(CostKind))
    @pytest.mark.parametrize("ansatz", [AnsatzKind.GEA, AnsatzKind.HEA])
    def test_matches_finite_differences(self, kind: CostKind, ansatz: AnsatzKind, rng: np.random.Generator) -> None:
        """Test the shift rule against central differences."""
        spec = AnsatzSpec(kind=ansatz, n=3, layers=2)
        cost_function = CostFunction(hed_terms(3), spec, kind)
        params = rng.normal(scale=0.6, size=spec.parameter_count)
        shifted = parameter_shift_gradient(cost_function, params)
        reference = central_difference_gradient(cost_function, params)
        assert np.max(np.abs(shifted - reference)) < 1e-4  # noqa: PLR2004

    def test_stationary_at_solution(self) -> None:
        """Test the gradient vanishes where the one-qubit cost is zero."""
        spec = AnsatzSpec(kind=AnsatzKind.GEA, n=1)
        cost_function = CostFunction(pauli_projection(1), spec)
        gradient = parameter_shift_gradient(cost_function, np.zeros(3))
        assert np.max(np.abs(gradient)) < 1e-10  # noqa: PLR2004

    def test_reuses_base(self, hed3: Decomposition, gea3: AnsatzSpec) -> None:
        """Test passing the base breakdown saves one evaluation."""
        cost_function = CostFunction(hed3, gea3)
        params = np.full(9, 0.2)
        base = cost_function.breakdown(params)
        before = cost_function.circuit_evaluations
        parameter_shift_gradient(cost_function, params, base)
        assert cost_function.circuit_evaluations - before == 2 * 9 * 36
