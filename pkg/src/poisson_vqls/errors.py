"""Errors."""


class PoissonVqlsError(Exception):
    """Base error of the package."""


class CircuitError(PoissonVqlsError, ValueError):
    """Invalid gate, circuit or state."""


class DecompositionError(PoissonVqlsError, ValueError):
    """Unsupported decomposition request."""


class CostEvaluationError(PoissonVqlsError):
    """Cost function could not be evaluated."""


class ReportError(PoissonVqlsError):
    """Report files could not be read or written."""


class ConfigError(PoissonVqlsError, ValueError):
    """Invalid configuration file or option."""
