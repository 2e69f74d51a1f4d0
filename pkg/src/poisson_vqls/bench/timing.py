"""Modeled time to solution on hardware."""

from typing import TypedDict

from ..engine import RunRecord
from .plan import TimeModel

MINUTES_PER_DAY: float = 24 * 60


class TimeToSolution(TypedDict):
    """Low/mid/high estimates in minutes and days."""

    minutes_low: float
    minutes_mid: float
    minutes_high: float
    days_low: float
    days_mid: float
    days_high: float


def time_to_solution(record: RunRecord | int, time_model: TimeModel | None = None) -> TimeToSolution:
    """Scale the circuit evaluations a run needs by the per-circuit minutes.

    Exact-mode records book the same counts a sampled run would spend, so both are priced alike.
    """
    model = time_model or TimeModel()
    evaluations = record if isinstance(record, int) else record.circuit_evaluations
    minutes = (evaluations * model.low, evaluations * model.mean_minutes, evaluations * model.high)
    return {
        "minutes_low": minutes[0],
        "minutes_mid": minutes[1],
        "minutes_high": minutes[2],
        "days_low": minutes[0] / MINUTES_PER_DAY,
        "days_mid": minutes[1] / MINUTES_PER_DAY,
        "days_high": minutes[2] / MINUTES_PER_DAY,
    }
