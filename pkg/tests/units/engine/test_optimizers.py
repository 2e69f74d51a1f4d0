"""Test optimizers."""

import numpy as np
import pytest

from poisson_vqls.ansatz import AnsatzSpec
from poisson_vqls.engine import (
    AdamOptimizer,
    CostFunction,
    OptimizerName,
    OptimizerSettings,
    SpsaOptimizer,
    build_optimizer,
    parameter_shift_gradient,
)
from poisson_vqls.poisson import Decomposition


class TestAdam:
    """Test AdamOptimizer."""

    def test_first_step_follows_gradient_sign(self, hed3: Decomposition, gea3: AnsatzSpec) -> None:
        """Test the first bias-corrected step is lr * g / (|g| + eps)."""
        cost_function = CostFunction(hed3, gea3)
        params = np.linspace(-0.4, 0.4, 9)
        base = cost_function.breakdown(params)
        gradient = parameter_shift_gradient(cost_function, params, base)
        updated = AdamOptimizer(learning_rate=0.05).step(params, cost_function, base)
        assert np.allclose(updated, params - 0.05 * gradient / (np.abs(gradient) + 1e-8), atol=1e-12)

    def test_descends(self, hed3: Decomposition, gea3: AnsatzSpec) -> None:
        """Test a few steps lower the cost."""
        cost_function = CostFunction(hed3, gea3)
        optimizer = AdamOptimizer(learning_rate=0.02)
        params = np.full(9, 0.3)
        start = cost_function(params)
        for _ in range(5):
            params = optimizer.step(params, cost_function, cost_function.breakdown(params))
        assert cost_function(params) < start

    def test_evaluations_per_step(self) -> None:
        """Test two evaluations per parameter."""
        assert AdamOptimizer().evaluations_per_step(7) == 14  # noqa: PLR2004
        assert AdamOptimizer().name is OptimizerName.ADAM


class TestSpsa:
    """Test SpsaOptimizer."""

    def test_two_evaluations(self, hed3: Decomposition, gea3: AnsatzSpec) -> None:
        """Test one step spends two cost evaluations."""
        cost_function = CostFunction(hed3, gea3)
        params = np.full(9, 0.3)
        base = cost_function.breakdown(params)
        optimizer = SpsaOptimizer(np.random.default_rng(0))
        updated = optimizer.step(params, cost_function, base)
        assert cost_function.circuit_evaluations == 3 * 36
        assert updated.shape == params.shape
        assert optimizer.evaluations_per_step(9) == 2  # noqa: PLR2004

    def test_reproducible(self, hed3: Decomposition, gea3: AnsatzSpec) -> None:
        """Test equal seeds give equal steps."""
        cost_function = CostFunction(hed3, gea3)
        params = np.full(9, 0.3)
        base = cost_function.breakdown(params)
        first = SpsaOptimizer(np.random.default_rng(5)).step(params, cost_function, base)
        second = SpsaOptimizer(np.random.default_rng(5)).step(params, cost_function, base)
        assert np.array_equal(first, second)


class TestBuildOptimizer:
    """Test build_optimizer."""

    def test_adam(self) -> None:
        """Test Adam is the default."""
        assert isinstance(build_optimizer(OptimizerSettings(), 100, 0), AdamOptimizer)

    def test_spsa(self) -> None:
        """Test SPSA settings are honoured."""
        optimizer = build_optimizer(OptimizerSettings(name="spsa"), 100, 0)
        assert isinstance(optimizer, SpsaOptimizer)
        assert optimizer.name is OptimizerName.SPSA

    @pytest.mark.parametrize("seed", [0, 3])
    def test_spsa_seeded(self, seed: int, hed3: Decomposition, gea3: AnsatzSpec) -> None:
        """Test SPSA directions derive from the run seed."""
        cost_function = CostFunction(hed3, gea3)
        params = np.zeros(9)
        base = cost_function.breakdown(params)
        settings = OptimizerSettings(name="spsa")
        first = build_optimizer(settings, 50, seed).step(params, cost_function, base)
        second = build_optimizer(settings, 50, seed).step(params, cost_function, base)
        assert np.array_equal(first, second)
