"""Fixtures."""

from collections.abc import Callable

import numpy as np
import pytest

from poisson_vqls.ansatz import AnsatzKind, AnsatzSpec
from poisson_vqls.engine import RunConfig
from poisson_vqls.poisson import Decomposition, hed_terms
from poisson_vqls.qsim import Circuit, Gate, cx, cz, h, mcx, ry, x, y, z


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator."""
    return np.random.default_rng(20240917)


@pytest.fixture
def hed3() -> Decomposition:
    """HED of DPEM(3)."""
    return hed_terms(3)


@pytest.fixture
def gea3() -> AnsatzSpec:
    """Three-layer GEA on three qubits."""
    return AnsatzSpec(kind=AnsatzKind.GEA, n=3)


@pytest.fixture
def gea3_config() -> RunConfig:
    """Exact local-cost run on three qubits."""
    return RunConfig.for_ansatz(3, AnsatzKind.GEA)


def random_circuit(n: int, length: int, rng: np.random.Generator) -> Circuit:
    """Build a random circuit over every gate kind."""
    gates: list[Gate] = []
    for _ in range(length):
        choice = int(rng.integers(0, 8))
        qubit = int(rng.integers(0, n))
        other = (qubit + 1 + int(rng.integers(0, n - 1))) % n if n > 1 else qubit
        if choice == 0:
            gates.append(h(qubit))
        elif choice == 1:
            gates.append(x(qubit))
        elif choice == 2:  # noqa: PLR2004
            gates.append(y(qubit))
        elif choice == 3:  # noqa: PLR2004
            gates.append(z(qubit))
        elif choice == 4 or n == 1:  # noqa: PLR2004
            gates.append(ry(qubit, float(rng.uniform(-np.pi, np.pi))))
        elif choice == 5:  # noqa: PLR2004
            gates.append(cx(qubit, other))
        elif choice == 6:  # noqa: PLR2004
            gates.append(cz(qubit, other))
        else:
            controls = tuple(q for q in range(n) if q != qubit)
            gates.append(mcx(controls, qubit))
    return Circuit(n, tuple(gates))



@pytest.fixture(scope="session")
def circuit_factory() -> Callable[[int, int, np.random.Generator], Circuit]:
    """Random circuit builder, session scoped so hypothesis tests can use it."""
    return random_circuit
