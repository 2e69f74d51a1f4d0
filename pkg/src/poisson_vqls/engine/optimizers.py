"""Gradient-based and gradient-free optimizers."""

from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import NDArray

from .config import OptimizerName, OptimizerSettings
from .cost import CostBreakdown, CostFunction
from .gradient import parameter_shift_gradient


class AbstractOptimizer(ABC):
    """Abstract optimizer: one call to `step` is one iteration."""

    @property
    @abstractmethod
    def name(self) -> OptimizerName:
        """Get optimizer name."""
        raise NotImplementedError("name not implemented")

    @abstractmethod
    def evaluations_per_step(self, parameter_count: int) -> int:
        """Get cost evaluations one step spends beyond the base evaluation."""
        raise NotImplementedError("evaluations_per_step not implemented")

    @abstractmethod
    def step(
        self, params: NDArray[np.float64], cost_function: CostFunction, base: CostBreakdown
    ) -> NDArray[np.float64]:
        """Get the next parameters."""
        raise NotImplementedError("step not implemented")


class AdamOptimizer(AbstractOptimizer):
    """Adam on parameter-shift gradients."""

    def __init__(
        self, learning_rate: float = 0.05, beta_1: float = 0.9, beta_2: float = 0.999, eps: float = 1e-8
    ) -> None:
        """Initialize Adam."""
        self._learning_rate: float = learning_rate
        self._beta_1: float = beta_1
        self._beta_2: float = beta_2
        self._eps: float = eps
        self._t: int = 0
        self._m: NDArray[np.float64] | None = None
        self._v: NDArray[np.float64] | None = None

    @property
    def name(self) -> OptimizerName:
        """Get optimizer name."""
        return OptimizerName.ADAM

    def evaluations_per_step(self, parameter_count: int) -> int:
        """Two shifted evaluations per parameter."""
        return 2 * parameter_count

    def step(
        self, params: NDArray[np.float64], cost_function: CostFunction, base: CostBreakdown
    ) -> NDArray[np.float64]:
        """Take one bias-corrected Adam step."""
        gradient = parameter_shift_gradient(cost_function, params, base)
        if self._m is None or self._v is None:
            self._m = np.zeros_like(gradient)
            self._v = np.zeros_like(gradient)
        self._t += 1
        self._m = self._beta_1 * self._m + (1 - self._beta_1) * gradient
        self._v = self._beta_2 * self._v + (1 - self._beta_2) * gradient**2
        m_hat = self._m / (1 - self._beta_1**self._t)
        v_hat = self._v / (1 - self._beta_2**self._t)
        return params - self._learning_rate * m_hat / (np.sqrt(v_hat) + self._eps)


class SpsaOptimizer(AbstractOptimizer):
    """Simultaneous perturbation stochastic approximation."""

    def __init__(
        self,
        rng: np.random.Generator,
        a: float = 0.2,
        c: float = 0.1,
        alpha: float = 0.602,
        gamma: float = 0.101,
        stability: float = 0.0,
    ) -> None:
        """Initialize SPSA."""
        self._rng: np.random.Generator = rng
        self._a: float = a
        self._c: float = c
        self._alpha: float = alpha
        self._gamma: float = gamma
        self._stability: float = stability
        self._k: int = 0

    @property
    def name(self) -> OptimizerName:
        """Get optimizer name."""
        return OptimizerName.SPSA

    def evaluations_per_step(self, parameter_count: int) -> int:
        """Two perturbed evaluations regardless of size."""
        return 2

    def step(
        self, params: NDArray[np.float64], cost_function: CostFunction, base: CostBreakdown
    ) -> NDArray[np.float64]:
        """Take one SPSA step along a random +-1 direction."""
        a_k = self._a / (self._k + 1 + self._stability) ** self._alpha
        c_k = self._c / (self._k + 1) ** self._gamma
        self._k += 1
        delta = self._rng.choice(np.array([-1.0, 1.0]), size=params.shape)
        plus = cost_function(params + c_k * delta)
        minus = cost_function(params - c_k * delta)
        # delta_i = +-1, so 1 / delta_i = delta_i
        gradient = (plus - minus) / (2 * c_k) * delta
        return params - a_k * gradient


def build_optimizer(settings: OptimizerSettings, max_iterations: int, seed: int) -> AbstractOptimizer:
    """Build the optimizer the settings describe."""
    if settings.name is OptimizerName.SPSA:
        stability = settings.spsa_stability
        if stability is None:
            stability = 0.1 * max_iterations
        return SpsaOptimizer(
            rng=np.random.default_rng(np.random.SeedSequence([seed, 0x5B5A])),
            a=settings.spsa_a,
            c=settings.spsa_c,
            alpha=settings.spsa_alpha,
            gamma=settings.spsa_gamma,
            stability=stability,
        )
    return AdamOptimizer(
        learning_rate=settings.learning_rate,
        beta_1=settings.beta_1,
        beta_2=settings.beta_2,
        eps=settings.eps,
    )
