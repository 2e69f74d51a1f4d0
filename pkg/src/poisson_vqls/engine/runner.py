"""Optimization loop."""

import logging
import math
import time

import numpy as np
from numpy.typing import NDArray

from ..ansatz import init_params, reference_params
from ..errors import CostEvaluationError
from ..oracle import thomas_solve
from ..poisson import condition_number
from ..qsim import StateVector, run_circuit
from .config import RunConfig
from .cost import CostFunction
from .metrics import convergence_threshold, trace_distance
from .objects import IterationRecord, RunRecord
from .optimizers import build_optimizer

logger = logging.getLogger(__name__)


def initial_parameters(config: RunConfig) -> NDArray[np.float64]:
    """Get the warm start if configured, else the reference angles plus a seeded normal draw with variance q_delta."""
    if config.initial_params is not None:
        return np.asarray(config.initial_params, dtype=np.float64)
    noise = init_params(config.ansatz.parameter_count, config.q_delta, config.seed)
    return reference_params(config.ansatz) + noise


def _state_distance(cost_function: CostFunction, params: NDArray[np.float64], solution: NDArray[np.float64]) -> float:
    psi = run_circuit(cost_function.ansatz_circuit(params), StateVector.zero(cost_function.n))
    return trace_distance(psi, solution)


def optimize(config: RunConfig) -> RunRecord:
    """Minimize the configured cost until it drops below the convergence threshold."""
    started = time.perf_counter()
    cost_function = CostFunction.from_config(config)
    kappa = condition_number(config.n)
    threshold = convergence_threshold(config.epsilon_target, config.n, kappa, config.cost)
    solution = thomas_solve(config.n).x_normalized
    optimizer = build_optimizer(config.optimizer, config.max_iterations, config.seed)
    params = initial_parameters(config)
    record = RunRecord(config=config, threshold=threshold, condition_number=kappa)
    logger.info(
        "run start: n=%d ansatz=%s cost=%s mode=%s seed=%d threshold=%.3e circuits/eval=%d",
        config.n,
        config.ansatz.kind,
        config.cost,
        config.mode,
        config.seed,
        threshold,
        cost_function.unique_circuit_count,
    )

    try:
        for iteration in range(config.max_iterations):
            base = cost_function.breakdown(params)
            if not math.isfinite(base.cost):
                raise CostEvaluationError(f"non-finite cost {base.cost} at iteration {iteration}")
            evaluated = params
            record.final_cost = base.cost
            record.converged = bool(base.cost < threshold)
            if not record.converged:
                params = optimizer.step(params, cost_function, base)
            record.iterations.append(
                IterationRecord(
                    iteration=iteration,
                    cost=base.cost,
                    params=tuple(float(value) for value in evaluated),
                    circuit_evaluations=cost_function.circuit_evaluations,
                    trace_distance=_state_distance(cost_function, evaluated, solution),
                )
            )
            logger.debug("iteration %d: cost=%.6e circuits=%d", iteration, base.cost, cost_function.circuit_evaluations)
            if record.converged:
                break
            if not np.all(np.isfinite(params)):
                params = evaluated
                raise CostEvaluationError(f"optimizer produced non-finite parameters at iteration {iteration}")
            if (
                config.budget_minutes is not None
                and cost_function.circuit_evaluations * config.minutes_per_circuit >= config.budget_minutes
            ):
                logger.info("modeled budget of %.1f minutes exhausted", config.budget_minutes)
                break
        record.timed_out = not record.converged
    except CostEvaluationError as error:
        record.failed = True
        record.failure_reason = str(error)
        logger.warning("run failed: %s", error)

    record.final_params = tuple(float(value) for value in params)
    record.circuit_evaluations = cost_function.circuit_evaluations
    if not record.failed:
        record.trace_distance = _state_distance(cost_function, params, solution)
    record.wall_time_seconds = time.perf_counter() - started
    logger.info(
        "run finish: converged=%s iterations=%d circuits=%d trace_distance=%s wall=%.2fs",
        record.converged,
        record.iteration_count,
        record.circuit_evaluations,
        "n/a" if record.trace_distance is None else f"{record.trace_distance:.3e}",
        record.wall_time_seconds,
    )
    return record
