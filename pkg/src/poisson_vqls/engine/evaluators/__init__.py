"""Term evaluators."""

from .abstracts import AbstractEvaluator, EvaluationMode, TermProblem, term_circuits
from .exact import ExactEvaluator
from .sampled import DEFAULT_SHOTS, SampledEvaluator, term_rng

__all__ = [
    "DEFAULT_SHOTS",
    "AbstractEvaluator",
    "EvaluationMode",
    "ExactEvaluator",
    "SampledEvaluator",
    "TermProblem",
    "term_circuits",
    "term_rng",
]
