"""Parameter initialization."""

import math

import numpy as np

from ..errors import PoissonVqlsError
from .specs import ParameterVector

Q_DELTA_PRESETS: tuple[float, float] = (0.01, 0.1)


def init_params(count: int, q_delta: float, seed: int) -> ParameterVector:
    """Draw `count` angles from a zero-mean normal with variance q_delta."""
    if count < 1:
        raise PoissonVqlsError(f"parameter count must be positive, got {count}")
    if not 0.0 < q_delta <= 1.0:
        raise PoissonVqlsError(f"q_delta must be in (0, 1], got {q_delta}")
    rng = np.random.default_rng(seed)
    return rng.normal(loc=0.0, scale=math.sqrt(q_delta), size=count)
