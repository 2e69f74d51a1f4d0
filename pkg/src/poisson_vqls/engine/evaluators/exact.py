"""Exact statevector evaluator."""

from collections.abc import Sequence

import numpy as np

from ...errors import CostEvaluationError
from ...qsim import StateVector, run_circuit
from ...qsim.state import z_signs
from ..terms import TermFamily, TermKey
from .abstracts import AbstractEvaluator, EvaluationMode, TermProblem


class ExactEvaluator(AbstractEvaluator):
    """Exact evaluator.

    Prepares |psi> once per call and derives every term from the shared states A_l|psi> and
    U_b^dag A_l|psi>, so each value equals the ancilla-free Hadamard test of its circuit pair.
    """

    @property
    def mode(self) -> EvaluationMode:
        """Get evaluation mode."""
        return EvaluationMode.EXACT

    def evaluate(
        self, problem: TermProblem, keys: Sequence[TermKey], evaluation_index: int  # pylint: disable=unused-argument
    ) -> dict[TermKey, float]:
        """Evaluate the real part of every requested term."""
        n = problem.ansatz.n
        terms = problem.decomposition.terms
        psi = run_circuit(problem.ansatz, StateVector.zero(n))
        applied: dict[int, StateVector] = {}
        unprepared: dict[int, StateVector] = {}
        b_state: StateVector | None = None

        def phi(index: int) -> StateVector:
            if index not in applied:
                applied[index] = run_circuit(terms[index].circuit, psi)
            return applied[index]

        def chi(index: int) -> StateVector:
            if index not in unprepared:
                unprepared[index] = run_circuit(problem.prepare_b.adjoint(), phi(index))
            return unprepared[index]

        values: dict[TermKey, float] = {}
        for key in keys:
            if key.family is TermFamily.BETA:
                values[key] = float(np.real(phi(key.l).inner(phi(key.l_prime))))
            elif key.family is TermFamily.GAMMA_LOCAL:
                if key.j is None:
                    raise CostEvaluationError(f"local term {key} needs a qubit index")
                signs = z_signs(n, key.j)
                values[key] = float(np.real(np.vdot(chi(key.l).amps, signs * chi(key.l_prime).amps)))
            else:
                if b_state is None:
                    b_state = run_circuit(problem.prepare_b, StateVector.zero(n))
                values[key] = float(np.real(b_state.inner(phi(key.l))))
        return values
