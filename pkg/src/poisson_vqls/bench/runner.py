"""Plan execution."""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from ..engine import RunConfig, RunRecord, convergence_threshold, optimize
from ..errors import PoissonVqlsError
from ..poisson import condition_number
from .plan import ExperimentPlan
from .report import ReportBundle, build_report
from .runlog import RUNS_DIRECTORY, write_run_log

logger = logging.getLogger(__name__)


def run_one(config: RunConfig) -> RunRecord:
    """Run one configuration; package errors become a failed record."""
    try:
        return optimize(config)
    except PoissonVqlsError as error:
        logger.warning("run n=%d %s seed=%d failed: %s", config.n, config.ansatz.kind, config.seed, error)
        kappa = condition_number(config.n)
        return RunRecord(
            config=config,
            failed=True,
            failure_reason=str(error),
            threshold=convergence_threshold(config.epsilon_target, config.n, kappa, config.cost),
            condition_number=kappa,
        )


def run_plan(plan: ExperimentPlan, out_dir: Path) -> ReportBundle:
    """Run every cell and seed of a plan, then write run logs, summary and plots."""
    cells = plan.cells()
    configs = [plan.run_config(cell, seed) for cell in cells for seed in range(plan.seeds)]
    logger.info("plan: %d cells x %d seeds on %d worker(s)", len(cells), plan.seeds, plan.workers)
    if plan.workers == 1:
        records = [run_one(config) for config in configs]
    else:
        with ProcessPoolExecutor(max_workers=plan.workers) as executor:
            records = list(executor.map(run_one, configs))
    runs_dir = out_dir / RUNS_DIRECTORY
    run_files = [write_run_log(record, runs_dir) for record in records]
    for cell in cells:
        cell_runs = [
            record
            for record in records
            if (record.config.n, record.config.ansatz.kind, record.config.q_delta)
            == (cell.n, cell.ansatz, cell.q_delta)
        ]
        logger.info(
            "cell %s: %d/%d converged",
            cell.label,
            sum(record.converged for record in cell_runs),
            len(cell_runs),
        )
    bundle = build_report(records, out_dir, plan.time_model, cells)
    bundle.run_files = run_files
    return bundle
