"""Gradients of the normalized cost."""

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .cost import CostBreakdown, CostFunction

SHIFT: float = math.pi / 2


def ratio_derivative(
    cost_function: CostFunction,
    base: CostBreakdown,
    numerator_derivative: float,
    denominator_derivative: float,
) -> float:
    """Differentiate a - s * N / D by the quotient rule."""
    numerator, denominator = base.numerator, base.denominator
    return (
        -cost_function.scale
        * (numerator_derivative * denominator - numerator * denominator_derivative)
        / denominator**2
    )


def parameter_shift_gradient(
    cost_function: CostFunction,
    params: ArrayLike,
    base: CostBreakdown | None = None,
) -> NDArray[np.float64]:
    """Exact gradient from two shifted evaluations per parameter.

    Every Ry angle enters each numerator and denominator term as a + b cos(t) + c sin(t), so the
    +-pi/2 shift is exact on N and D; the ratio is differentiated afterwards.
    """
    theta = np.asarray(params, dtype=np.float64)
    if base is None:
        base = cost_function.breakdown(theta)
    gradient = np.zeros_like(theta)
    for index in range(theta.size):
        shifted = theta.copy()
        shifted[index] += SHIFT
        plus = cost_function.breakdown(shifted)
        shifted[index] -= 2 * SHIFT
        minus = cost_function.breakdown(shifted)
        gradient[index] = ratio_derivative(
            cost_function,
            base,
            (plus.numerator - minus.numerator) / 2,
            (plus.denominator - minus.denominator) / 2,
        )
    return gradient


def central_difference_gradient(
    cost_function: CostFunction,
    params: ArrayLike,
    step: float = 1e-5,
) -> NDArray[np.float64]:
    """Finite-difference reference gradient."""
    theta = np.asarray(params, dtype=np.float64)
    gradient = np.zeros_like(theta)
    for index in range(theta.size):
        shifted = theta.copy()
        shifted[index] += step
        plus = cost_function(shifted)
        shifted[index] -= 2 * step
        minus = cost_function(shifted)
        gradient[index] = (plus - minus) / (2 * step)
    return gradient
