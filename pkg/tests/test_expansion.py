import math

import numpy as np
import pytest

from qcdiff import (
    Circuit,
    Control,
    ExpansionMode,
    ExpansionResult,
    GateKind,
    Layer,
    expand_circuit,
    expand_gate,
    gate,
    gate_matrix,
    single_gate_circuit,
    swap,
    verify_expansion,
)
from oracles import NON_CORE_KINDS, circuit_unitary, random_params

BASIC = ExpansionMode(use_generalized=False)
GENERALIZED = ExpansionMode(use_generalized=True)

BASIC_COSTS = {
    GateKind.SQRT_X: 3, GateKind.SQRT_X_INV: 3,
    GateKind.SQRT_Y: 3, GateKind.SQRT_Y_INV: 3,
    GateKind.XPOW: 3, GateKind.YPOW: 7,
    GateKind.RX: 4, GateKind.RY: 8, GateKind.RZ: 2,
}
GENERALIZED_COSTS = {
    GateKind.SQRT_X: 2, GateKind.SQRT_X_INV: 2,
    GateKind.SQRT_Y: 1, GateKind.SQRT_Y_INV: 2,
    GateKind.XPOW: 2, GateKind.YPOW: 4,
    GateKind.RX: 2, GateKind.RY: 4, GateKind.RZ: 1,
}


def _placement(rng, kind):
    return gate(kind, 0, *random_params(rng, kind))


class TestExpandGate:
    def test_sqrt_x_basic_row(self):
        result = expand_gate(gate(GateKind.SQRT_X, 0), BASIC)
        assert [g.kind for g in result.gates] == [GateKind.H, GateKind.S, GateKind.H]
        assert result.cost == 3

    def test_rz_generalized_row(self):
        theta = 1.1
        result = expand_gate(gate(GateKind.RZ, 0, theta), GENERALIZED)
        assert result.cost == 1
        only = result.gates[0]
        assert only.kind is GateKind.ZG
        assert only.params == (-theta / 2, theta / 2)

    def test_rz_basic_without_global_phase(self):
        theta = 0.9
        mode = ExpansionMode(keep_global_phase=False)
        result = expand_gate(gate(GateKind.RZ, 0, theta), mode)
        assert [g.kind for g in result.gates] == [GateKind.ZPOW]
        assert result.cost == 1
        product = gate_matrix(GateKind.ZPOW, (theta / math.pi,))
        rz = gate_matrix(GateKind.RZ, (theta,))
        assert np.abs(product * np.exp(-1j * theta / 2) - rz).max() <= 1e-12
        assert verify_expansion(gate(GateKind.RZ, 0, theta), result, keep_global_phase=False) <= 1e-12

    def test_core_gates_pass_through(self):
        placement = gate(GateKind.HG, 0, 0.2, 0.3, controls=(Control(1),))
        result = expand_gate(placement, BASIC)
        assert result == ExpansionResult((placement,), 1)

    def test_emitted_gates_carry_the_controls(self):
        controls = (Control(1), Control(2, anti=True))
        result = expand_gate(gate(GateKind.RY, 0, 0.4, controls=controls), BASIC)
        assert len(result.gates) == 8
        assert all(g.controls == controls for g in result.gates)
        assert all(g.targets == (0,) for g in result.gates)

    def test_controlled_global_phase_is_kept_with_warning(self):
        mode = ExpansionMode(keep_global_phase=False)
        placement = gate(GateKind.RX, 0, 0.8, controls=(Control(1),))
        with pytest.warns(UserWarning, match="GlobalPhase"):
            result = expand_gate(placement, mode)
        assert any(g.kind is GateKind.GLOBAL_PHASE for g in result.gates)
        assert verify_expansion(placement, result, keep_global_phase=True) <= 1e-12

    def test_uncontrolled_global_phase_is_dropped_silently(self):
        mode = ExpansionMode(keep_global_phase=False)
        result = expand_gate(gate(GateKind.RX, 0, 0.8), mode)
        assert all(g.kind is not GateKind.GLOBAL_PHASE for g in result.gates)
        assert result.cost == BASIC_COSTS[GateKind.RX] - 1


class TestTables:
    @pytest.mark.parametrize("kind", NON_CORE_KINDS)
    def test_basic_rows_match_matrices(self, kind):
        rng = np.random.default_rng(NON_CORE_KINDS.index(kind))
        for _ in range(100):
            placement = _placement(rng, kind)
            result = expand_gate(placement, BASIC)
            assert result.cost == BASIC_COSTS[kind]
            assert verify_expansion(placement, result, keep_global_phase=True) <= 1e-12

    @pytest.mark.parametrize("kind", NON_CORE_KINDS)
    def test_generalized_rows_match_matrices(self, kind):
        rng = np.random.default_rng(100 + NON_CORE_KINDS.index(kind))
        for _ in range(100):
            placement = _placement(rng, kind)
            result = expand_gate(placement, GENERALIZED)
            assert result.cost == GENERALIZED_COSTS[kind]
            assert verify_expansion(placement, result, keep_global_phase=True) <= 1e-12

    def test_every_expansion_emits_core_gates_only(self):
        rng = np.random.default_rng(0)
        for kind in NON_CORE_KINDS:
            for mode in (BASIC, GENERALIZED):
                result = expand_gate(_placement(rng, kind), mode)
                assert all(g.kind.is_core for g in result.gates)


class TestVerifyExpansion:
    def test_y_as_s_x_s_inverse(self):
        result = ExpansionResult(
            (gate(GateKind.SDG, 0), gate(GateKind.X, 0), gate(GateKind.S, 0)), 3)
        assert verify_expansion(gate(GateKind.Y, 0), result) <= 1e-12

    def test_sqrt_y_single_generalized_hadamard(self):
        result = ExpansionResult((gate(GateKind.HG, 0, math.pi / 4, 5 * math.pi / 4),), 1)
        assert verify_expansion(gate(GateKind.SQRT_Y, 0), result) <= 1e-12

    def test_deliberate_mismatch_is_loud(self):
        result = ExpansionResult((gate(GateKind.Z, 0),), 1)
        deviation = verify_expansion(gate(GateKind.X, 0), result)
        assert deviation == pytest.approx(math.sqrt(2), abs=1e-9)

    def test_circuit_order_matters_for_asymmetric_rows(self):
        # reversing a Y^k expansion realizes a different unitary
        placement = gate(GateKind.YPOW, 0, 0.37)
        forward = expand_gate(placement, BASIC)
        backward = ExpansionResult(tuple(reversed(forward.gates)), forward.cost)
        assert verify_expansion(placement, forward) <= 1e-12
        assert verify_expansion(placement, backward) > 1e-3


class TestExpandCircuit:
    def test_all_core_circuit_unchanged(self):
        circuit = Circuit(2, (
            Layer((gate(GateKind.H, 0),)),
            Layer((gate(GateKind.X, 1, controls=(Control(0),)),)),
            Layer((swap(0, 1),)),
        ))
        assert expand_circuit(circuit, BASIC) == circuit

    def test_controlled_rx_basic_becomes_four_controlled_layers(self):
        placement = gate(GateKind.RX, 1, 0.83, controls=(Control(0),))
        circuit = single_gate_circuit(2, placement)
        expanded = expand_circuit(circuit, BASIC)
        assert expanded.depth == 4
        kinds = [layer.gates[0].kind for layer in expanded.layers]
        assert sorted(k.name for k in kinds) == ["GLOBAL_PHASE", "H", "H", "ZPOW"]
        assert all(layer.gates[0].controls == (Control(0),) for layer in expanded.layers)
        assert np.abs(circuit_unitary(expanded) - circuit_unitary(circuit)).max() <= 1e-10

    def test_ry_generalized_grows_depth_by_three(self):
        circuit = Circuit(3, (
            Layer((gate(GateKind.H, 0),)),
            Layer((gate(GateKind.RY, 2, 1.2),)),
            Layer((gate(GateKind.Z, 1),)),
        ))
        expanded = expand_circuit(circuit, GENERALIZED)
        assert expanded.depth == circuit.depth + 3

    def test_depth_is_sum_of_costs(self):
        rng = np.random.default_rng(13)
        kinds = list(NON_CORE_KINDS) + [GateKind.H, GateKind.T]
        layers = []
        total = 0
        for _ in range(12):
            kind = kinds[rng.integers(len(kinds))]
            placement = gate(kind, int(rng.integers(3)), *random_params(rng, kind))
            layers.append(Layer((placement,)))
            total += BASIC_COSTS.get(kind, 1)
        expanded = expand_circuit(Circuit(3, tuple(layers)), BASIC)
        assert expanded.depth == total

    @pytest.mark.parametrize("mode", [BASIC, GENERALIZED], ids=["basic", "generalized"])
    def test_expanded_circuit_realizes_the_same_unitary(self, mode):
        rng = np.random.default_rng(14)
        for _ in range(6):
            layers = []
            for _ in range(5):
                kind = NON_CORE_KINDS[rng.integers(len(NON_CORE_KINDS))]
                target = int(rng.integers(3))
                controls = tuple(Control(w) for w in rng.choice(
                    [w for w in range(3) if w != target],
                    size=rng.integers(0, 2), replace=False))
                layers.append(Layer((gate(kind, target, *random_params(rng, kind),
                                          controls=controls),)))
            circuit = Circuit(3, tuple(layers))
            expanded = expand_circuit(circuit, mode)
            assert np.abs(circuit_unitary(expanded) - circuit_unitary(circuit)).max() <= 1e-10

    def test_mixed_multi_gate_layer_is_serialized(self):
        layer = Layer((gate(GateKind.H, 0), gate(GateKind.RZ, 1, 0.4)))
        circuit = Circuit(2, (layer,))
        expanded = expand_circuit(circuit, BASIC)
        assert all(len(l.gates) == 1 for l in expanded.layers)
        assert expanded.depth == 1 + 2
        assert np.abs(circuit_unitary(expanded) - circuit_unitary(circuit)).max() <= 1e-10


class TestControlledProducts:
    def test_controlled_expansion_equals_controlled_gate_on_three_qubits(self):
        # C-U == product of the controlled factors, checked densely
        rng = np.random.default_rng(15)
        for kind in (GateKind.YPOW, GateKind.RY, GateKind.SQRT_Y):
            placement = gate(kind, 1, *random_params(rng, kind),
                             controls=(Control(0), Control(2, anti=True)))
            circuit = single_gate_circuit(3, placement)
            for mode in (BASIC, GENERALIZED):
                expanded = expand_circuit(circuit, mode)
                assert np.abs(circuit_unitary(expanded) - circuit_unitary(circuit)).max() <= 1e-10
