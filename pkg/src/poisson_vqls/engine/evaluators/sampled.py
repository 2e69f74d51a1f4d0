"""Shot-sampled Hadamard-test evaluator."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ...qsim import hadamard_test_probabilities, sample_ancilla
from ..terms import TermKey
from .abstracts import AbstractEvaluator, EvaluationMode, TermProblem, term_circuits

DEFAULT_SHOTS: int = 1_000_000


def term_rng(seed: int, evaluation_index: int, key: TermKey) -> np.random.Generator:
    """Get the random stream of one term circuit in one cost evaluation."""
    return np.random.default_rng(np.random.SeedSequence([seed, evaluation_index, *key.seed_words]))


class SampledEvaluator(AbstractEvaluator):
    """Sampled evaluator: one ancilla circuit per term key, `shots` measurements each."""

    def __init__(self, shots: int = DEFAULT_SHOTS, seed: int = 0, workers: int = 1) -> None:
        """Initialize sampled evaluator."""
        if shots < 1:
            raise ValueError(f"shots must be positive, got {shots}")
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self._shots: int = shots
        self._seed: int = seed
        self._workers: int = max(workers, 1)

    @property
    def mode(self) -> EvaluationMode:
        """Get evaluation mode."""
        return EvaluationMode.SAMPLED

    @property
    def shots(self) -> int:
        """Get shots per circuit."""
        return self._shots

    def evaluate_one(self, problem: TermProblem, key: TermKey, evaluation_index: int) -> float:
        """Run one Hadamard-test job and return P(0) - P(1)."""
        prepared, tested = term_circuits(problem, key)
        p0, _ = hadamard_test_probabilities(prepared, tested)
        return sample_ancilla(p0, self._shots, term_rng(self._seed, evaluation_index, key)).bias

    def evaluate(self, problem: TermProblem, keys: Sequence[TermKey], evaluation_index: int) -> dict[TermKey, float]:
        """Evaluate every requested term; results are merged in key order."""
        ordered = sorted(keys, key=lambda key: key.sort_key)
        if self._workers == 1:
            estimates = [self.evaluate_one(problem, key, evaluation_index) for key in ordered]
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                estimates = list(executor.map(lambda key: self.evaluate_one(problem, key, evaluation_index), ordered))
        return dict(zip(ordered, estimates, strict=True))
