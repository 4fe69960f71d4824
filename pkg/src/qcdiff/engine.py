"""Layer-by-layer circuit execution on the state vector."""
from __future__ import annotations

from .circuit import Circuit, GateKind, GatePlacement, Layer, gate_matrix
from .statevector import (
    StateVector,
    apply_global_phase,
    apply_single_qubit_gate,
    apply_swap,
    init_basis_state,
)


def apply_placement(state: StateVector, placement: GatePlacement) -> StateVector:
    if placement.kind is GateKind.SWAP:
        i, j = placement.targets
        return apply_swap(state, i, j, placement.controls)
    if placement.kind is GateKind.GLOBAL_PHASE:
        return apply_global_phase(state, placement.params[0], placement.controls)
    matrix = gate_matrix(placement.kind, placement.params)
    return apply_single_qubit_gate(state, matrix, placement.targets[0], placement.controls)


def apply_layer(state: StateVector, layer: Layer) -> StateVector:
    # Placements in a valid layer touch disjoint targets, so they commute;
    # applying top-down keeps the result deterministic anyway.
    for placement in layer.gates:
        state = apply_placement(state, placement)
    return state


def run_circuit(circuit: Circuit, initial: StateVector | None = None) -> list[StateVector]:
    """States before/after every layer: result[k] is the state after k layers.

    Length is depth + 1; result[0] is |0...0> unless an initial state is given.
    The norm is checked after every layer and drift raises NormDriftError.
    """
    state = initial if initial is not None else init_basis_state(circuit.num_wires, "0" * circuit.num_wires)
    if state.num_qubits != circuit.num_wires:
        raise ValueError(f"initial state has {state.num_qubits} qubits, circuit has {circuit.num_wires} wires")
    states = [state]
    for layer in circuit.layers:
        state = apply_layer(state, layer)
        state.check_norm()
        states.append(state)
    return states
