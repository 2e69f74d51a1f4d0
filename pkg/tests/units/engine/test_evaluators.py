"""Test term evaluators."""

import numpy as np
import pytest

from poisson_vqls.ansatz import AnsatzSpec, build_ansatz, prepare_b
from poisson_vqls.engine import CostKind, EvaluationMode, ExactEvaluator, SampledEvaluator, enumerate_term_keys
from poisson_vqls.engine.evaluators import TermProblem, term_circuits, term_rng
from poisson_vqls.engine.terms import TermFamily, TermKey
from poisson_vqls.poisson import Decomposition
from poisson_vqls.qsim import hadamard_test_exact


@pytest.fixture
def problem(hed3: Decomposition, gea3: AnsatzSpec) -> TermProblem:
    """Term problem at fixed angles."""
    return TermProblem(decomposition=hed3, ansatz=build_ansatz(gea3, np.linspace(-1, 1, 9)), prepare_b=prepare_b(3))


class TestExactEvaluator:
    """Test ExactEvaluator."""

    @pytest.mark.parametrize("kind", list(CostKind))
    def test_matches_hadamard_circuits(self, kind: CostKind, problem: TermProblem) -> None:
        """Test the shared-state shortcut equals the Hadamard test of each circuit pair."""
        keys = enumerate_term_keys(4, 3, kind)
        values = ExactEvaluator().evaluate(problem, keys, 0)
        assert ExactEvaluator().mode is EvaluationMode.EXACT
        for key in keys:
            prepared, tested = term_circuits(problem, key)
            assert values[key] == pytest.approx(hadamard_test_exact(prepared, tested), abs=1e-10)


class TestSampledEvaluator:
    """Test SampledEvaluator."""

    def test_close_to_exact(self, problem: TermProblem) -> None:
        """Test a million shots per term stay within 4e-3 of the exact values."""
        keys = enumerate_term_keys(4, 3, CostKind.GLOBAL)
        exact = ExactEvaluator().evaluate(problem, keys, 0)
        sampled = SampledEvaluator(shots=1_000_000, seed=11).evaluate(problem, keys, 0)
        for key in keys:
            assert sampled[key] == pytest.approx(exact[key], abs=4e-3)

    def test_reproducible_and_worker_independent(self, problem: TermProblem) -> None:
        """Test estimates depend only on seed, evaluation index and key."""
        keys = enumerate_term_keys(4, 3, CostKind.LOCAL)[:12]
        serial = SampledEvaluator(shots=500, seed=3).evaluate(problem, keys, 2)
        threaded = SampledEvaluator(shots=500, seed=3, workers=4).evaluate(problem, keys, 2)
        assert serial == threaded
        assert SampledEvaluator(shots=500, seed=3).evaluate(problem, keys, 3) != serial

    def test_term_rng_streams(self) -> None:
        """Test distinct keys draw distinct streams."""
        first = term_rng(0, 0, TermKey(TermFamily.BETA, 0, 1)).random()
        second = term_rng(0, 0, TermKey(TermFamily.BETA, 0, 2)).random()
        assert first != second

    def test_validation(self) -> None:
        """Test shots and seed are checked."""
        with pytest.raises(ValueError, match="shots"):
            SampledEvaluator(shots=0)
        with pytest.raises(ValueError, match="seed"):
            SampledEvaluator(seed=-1)
