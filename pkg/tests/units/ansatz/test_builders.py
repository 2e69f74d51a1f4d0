"""Test ansatz builders."""

import numpy as np
import pytest
from pydantic import ValidationError

from poisson_vqls.ansatz import (
    AnsatzKind,
    AnsatzSpec,
    all_pairs,
    amplitude_embedding,
    brick_pairs,
    build_ansatz,
    build_gea,
    build_hea,
    prepare_b,
    reference_params,
)
from poisson_vqls.errors import CircuitError
from poisson_vqls.oracle import thomas_solve
from poisson_vqls.qsim import GateKind, StateVector, run_circuit


class TestAnsatzSpec:
    """Test AnsatzSpec."""

    def test_default_layers(self) -> None:
        """Test family default depths."""
        assert AnsatzSpec(kind=AnsatzKind.GEA, n=4).depth == 3  # noqa: PLR2004
        assert AnsatzSpec(kind=AnsatzKind.HEA, n=4).depth == 8  # noqa: PLR2004
        assert AnsatzSpec(kind=AnsatzKind.HEA, n=4, layers=2).layers == 2  # noqa: PLR2004

    def test_default_layers_are_stored(self) -> None:
        """Test the family default is a real field value that survives a dump."""
        spec = AnsatzSpec(kind=AnsatzKind.GEA, n=2)
        assert spec.layers == 3  # noqa: PLR2004
        assert spec.model_dump()["layers"] == 3  # noqa: PLR2004
        assert AnsatzSpec.model_validate({"kind": "hea", "n": 2}).layers == 8  # noqa: PLR2004
        assert AnsatzSpec.model_validate_json(spec.model_dump_json()) == spec

    def test_parameter_count(self, gea3: AnsatzSpec) -> None:
        """Test one angle per qubit per layer."""
        assert gea3.parameter_count == 9  # noqa: PLR2004

    def test_validation(self) -> None:
        """Test n and layers must be positive."""
        with pytest.raises(ValidationError):
            AnsatzSpec(kind=AnsatzKind.GEA, n=0)
        with pytest.raises(ValidationError):
            AnsatzSpec(kind=AnsatzKind.GEA, n=2, layers=0)


class TestPairs:
    """Test entangler topologies."""

    def test_all_pairs(self) -> None:
        """Test every unordered pair appears once."""
        assert all_pairs(3) == [(0, 1), (0, 2), (1, 2)]
        assert len(all_pairs(6)) == 15  # noqa: PLR2004

    def test_brick_pairs(self) -> None:
        """Test bricks alternate their offset."""
        assert brick_pairs(5, 0) == [(0, 1), (2, 3)]
        assert brick_pairs(5, 1) == [(1, 2), (3, 4)]
        assert brick_pairs(1, 0) == []


class TestBuilders:
    """Test circuit construction."""

    def test_gea_layout(self, gea3: AnsatzSpec) -> None:
        """Test H^n, then Ry and all-pairs CZ per layer."""
        circuit = build_gea(gea3, np.zeros(9))
        assert circuit.gate_count(GateKind.H) == 3  # noqa: PLR2004
        assert circuit.gate_count(GateKind.RY) == 9  # noqa: PLR2004
        assert circuit.gate_count(GateKind.CZ) == 9  # noqa: PLR2004
        assert circuit.gates[:3] == prepare_b(3).gates

    def test_hea_layout(self) -> None:
        """Test HEA uses brick CZs."""
        spec = AnsatzSpec(kind=AnsatzKind.HEA, n=4, layers=2)
        circuit = build_hea(spec, np.zeros(8))
        assert circuit.gate_count(GateKind.CZ) == 3  # noqa: PLR2004
        assert circuit.gate_count(GateKind.RY) == 8  # noqa: PLR2004

    def test_without_preconditioning(self) -> None:
        """Test precondition_b=False drops the Hadamard layer."""
        spec = AnsatzSpec(kind=AnsatzKind.GEA, n=2, layers=1, precondition_b=False)
        assert build_gea(spec, [0.1, 0.2]).gate_count(GateKind.H) == 0

    def test_parameter_order(self) -> None:
        """Test parameter index layer * n + qubit drives Ry on that qubit."""
        spec = AnsatzSpec(kind=AnsatzKind.HEA, n=2, layers=2)
        circuit = build_hea(spec, [0.1, 0.2, 0.3, 0.4])
        rotations = [gate for gate in circuit.gates if gate.kind is GateKind.RY]
        assert [(gate.target, gate.angle) for gate in rotations] == [(0, 0.1), (1, 0.2), (0, 0.3), (1, 0.4)]

    def test_wrong_parameter_count(self, gea3: AnsatzSpec) -> None:
        """Test the parameter vector length is checked."""
        with pytest.raises(CircuitError):
            build_gea(gea3, np.zeros(8))

    def test_wrong_family(self, gea3: AnsatzSpec) -> None:
        """Test a GEA spec cannot build an HEA circuit."""
        with pytest.raises(CircuitError):
            build_hea(gea3, np.zeros(9))

    def test_dispatch(self, gea3: AnsatzSpec) -> None:
        """Test build_ansatz follows the spec kind."""
        params = np.linspace(0, 1, 9)
        assert build_ansatz(gea3, params) == build_gea(gea3, params)

    def test_one_qubit_gea_at_zero_is_plus(self) -> None:
        """Test the one-qubit GEA at zero angles prepares |+>."""
        spec = AnsatzSpec(kind=AnsatzKind.GEA, n=1)
        state = run_circuit(build_gea(spec, np.zeros(3)), StateVector.zero(1))
        assert np.allclose(state.amps, [2**-0.5, 2**-0.5])

    def test_uniform_rhs(self) -> None:
        """Test U_b prepares the uniform state."""
        state = run_circuit(prepare_b(3), StateVector.zero(3))
        assert np.allclose(state.amps, np.full(8, 8**-0.5))


class TestReferenceParams:
    """Test reference_params."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("layers", [2, 3, 5])
    def test_gea_prepares_uniform_state(self, n: int, layers: int) -> None:
        """Test the preconditioned GEA prepares U_b|0> at its reference angles."""
        spec = AnsatzSpec(kind=AnsatzKind.GEA, n=n, layers=layers)
        state = run_circuit(build_gea(spec, reference_params(spec)), StateVector.zero(n))
        assert np.allclose(state.amps, np.full(2**n, 2 ** (-n / 2)), atol=1e-12)

    def test_three_qubit_start_overlaps_solution(self, gea3: AnsatzSpec) -> None:
        """Test zero angles give a state orthogonal to the n=3 Poisson solution while the reference does not."""
        solution = thomas_solve(3).x_normalized
        at_zero = run_circuit(build_gea(gea3, np.zeros(9)), StateVector.zero(3))
        at_reference = run_circuit(build_gea(gea3, reference_params(gea3)), StateVector.zero(3))
        assert abs(np.vdot(solution, at_zero.amps)) < 1e-12  # noqa: PLR2004
        assert abs(np.vdot(solution, at_reference.amps)) > 0.95  # noqa: PLR2004

    def test_other_specs_start_at_zero(self) -> None:
        """Test HEA, unconditioned and single-layer GEA specs use zero angles."""
        specs = [
            AnsatzSpec(kind=AnsatzKind.HEA, n=3),
            AnsatzSpec(kind=AnsatzKind.GEA, n=3, precondition_b=False),
            AnsatzSpec(kind=AnsatzKind.GEA, n=3, layers=1),
        ]
        for spec in specs:
            params = reference_params(spec)
            assert params.shape == (spec.parameter_count,)
            assert not params.any()


class TestAmplitudeEmbedding:
    """Test amplitude_embedding."""

    @pytest.mark.parametrize("n", range(1, 6))
    def test_random_vectors(self, n: int, rng: np.random.Generator) -> None:
        """Test signed real unit vectors are prepared exactly."""
        vector = rng.normal(size=2**n)
        vector /= np.linalg.norm(vector)
        state = run_circuit(amplitude_embedding(vector), StateVector.zero(n))
        assert np.allclose(state.amps, vector, atol=1e-10)

    def test_sparse_vector(self) -> None:
        """Test vectors with zero blocks."""
        vector = np.array([0, 0, 0, 1, 0, 0, 0, 0], dtype=float)
        state = run_circuit(amplitude_embedding(vector), StateVector.zero(3))
        assert np.allclose(state.amps, vector)

    def test_poisson_solution(self) -> None:
        """Test the classical solution state can be embedded."""
        target = thomas_solve(4).x_normalized
        state = run_circuit(amplitude_embedding(target), StateVector.zero(4))
        assert np.allclose(state.amps, target, atol=1e-10)

    def test_invalid(self) -> None:
        """Test non-unit and wrongly sized vectors are rejected."""
        with pytest.raises(CircuitError):
            amplitude_embedding([1.0, 1.0])
        with pytest.raises(CircuitError):
            amplitude_embedding([0.6, 0.8, 0.0])
        with pytest.raises(CircuitError):
            amplitude_embedding([1.0])
