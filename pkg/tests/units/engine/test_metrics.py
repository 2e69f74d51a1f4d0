"""Test solution metrics."""

import math

import numpy as np
import pytest

from poisson_vqls.engine import CostKind, convergence_threshold, trace_distance
from poisson_vqls.errors import PoissonVqlsError
from poisson_vqls.qsim import StateVector


class TestTraceDistance:
    """Test trace_distance."""

    def test_identical(self) -> None:
        """Test equal states are at distance zero."""
        state = StateVector.from_amplitudes([0.6, 0.8])
        assert trace_distance(state, state) == pytest.approx(0.0, abs=1e-7)

    def test_orthogonal(self) -> None:
        """Test orthogonal states are at distance one."""
        assert trace_distance([1, 0], [0, 1]) == pytest.approx(1.0)

    def test_global_phase(self) -> None:
        """Test a global phase does not matter."""
        assert trace_distance([1j, 0], [1, 0]) == pytest.approx(0.0, abs=1e-7)

    def test_known_value(self) -> None:
        """Test sqrt(1 - |<a|b>|^2)."""
        a = np.array([1.0, 0.0])
        b = np.array([math.cos(0.3), math.sin(0.3)])
        assert trace_distance(a, b) == pytest.approx(math.sin(0.3))

    def test_validation(self) -> None:
        """Test shape and norm checks."""
        with pytest.raises(PoissonVqlsError):
            trace_distance([1, 0], [1, 0, 0, 0])
        with pytest.raises(PoissonVqlsError):
            trace_distance([1, 1], [1, 0])


class TestConvergenceThreshold:
    """Test convergence_threshold."""

    def test_local_divides_by_n(self) -> None:
        """Test the local threshold carries 1/n."""
        global_ = convergence_threshold(0.01, 4, 10.0, CostKind.GLOBAL)
        assert global_ == pytest.approx(1e-6)
        assert convergence_threshold(0.01, 4, 10.0, CostKind.LOCAL) == pytest.approx(global_ / 4)

    def test_epsilon_range(self) -> None:
        """Test epsilon must be in (0, 1)."""
        with pytest.raises(PoissonVqlsError):
            convergence_threshold(0.0, 2, 3.0, CostKind.LOCAL)
