"""Solution-quality metrics."""

import math

import numpy as np
from numpy.typing import ArrayLike

from ..errors import PoissonVqlsError
from ..qsim import StateVector
from .terms import CostKind

NORM_TOLERANCE: float = 1e-8


def _amplitudes(state: StateVector | ArrayLike) -> np.ndarray:
    if isinstance(state, StateVector):
        return state.amps
    return np.asarray(state, dtype=np.complex128).ravel()


def trace_distance(state_a: StateVector | ArrayLike, state_b: StateVector | ArrayLike) -> float:
    """Trace distance between two pure states: sqrt(1 - |<a|b>|^2)."""
    a, b = _amplitudes(state_a), _amplitudes(state_b)
    if a.shape != b.shape:
        raise PoissonVqlsError(f"state sizes differ: {a.size} != {b.size}")
    for label, amps in (("first", a), ("second", b)):
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise PoissonVqlsError(f"{label} state is not normalized (norm {norm:.12f})")
    overlap = abs(np.vdot(a, b)) ** 2
    return math.sqrt(max(0.0, 1.0 - overlap))


def convergence_threshold(epsilon: float, n: int, kappa: float, kind: CostKind) -> float:
    """Cost below which the trace distance is guaranteed to reach epsilon.

    Local: eps^2 / (n kappa^2); global: eps^2 / kappa^2.
    """
    if not 0.0 < epsilon < 1.0:
        raise PoissonVqlsError(f"epsilon must be in (0, 1), got {epsilon}")
    threshold = epsilon**2 / kappa**2
    return threshold / n if kind is CostKind.LOCAL else threshold
