"""VQLS engine: cost functions, gradients, optimizers and the optimization loop."""

from .config import OptimizerName, OptimizerSettings, RunConfig
from .cost import CostBreakdown, CostFunction, beta_term, combine_terms, gamma_local_term, global_cost, local_cost
from .evaluators import DEFAULT_SHOTS, AbstractEvaluator, EvaluationMode, ExactEvaluator, SampledEvaluator
from .gradient import central_difference_gradient, parameter_shift_gradient
from .metrics import convergence_threshold, trace_distance
from .objects import IterationRecord, RunRecord
from .optimizers import AbstractOptimizer, AdamOptimizer, SpsaOptimizer, build_optimizer
from .runner import initial_parameters, optimize
from .terms import (
    CostKind,
    TermFamily,
    TermKey,
    count_unique_circuits,
    count_unique_circuits_global,
    enumerate_term_keys,
)

__all__ = [
    "DEFAULT_SHOTS",
    "AbstractEvaluator",
    "AbstractOptimizer",
    "AdamOptimizer",
    "CostBreakdown",
    "CostFunction",
    "CostKind",
    "EvaluationMode",
    "ExactEvaluator",
    "IterationRecord",
    "OptimizerName",
    "OptimizerSettings",
    "RunConfig",
    "RunRecord",
    "SampledEvaluator",
    "SpsaOptimizer",
    "TermFamily",
    "TermKey",
    "beta_term",
    "build_optimizer",
    "central_difference_gradient",
    "combine_terms",
    "convergence_threshold",
    "count_unique_circuits",
    "count_unique_circuits_global",
    "enumerate_term_keys",
    "gamma_local_term",
    "global_cost",
    "initial_parameters",
    "local_cost",
    "optimize",
    "parameter_shift_gradient",
    "trace_distance",
]
