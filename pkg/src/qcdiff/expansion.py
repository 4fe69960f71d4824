"""Rewrites non-core gates into annotatable core sequences.

Each table row is stored in circuit-time order: the first listed gate is
applied first, so the realized unitary is the matrix product of the entries
taken right-to-left. Emitted gates inherit the original gate's controls.

Dropping GlobalPhase entries (keep_global_phase=False) changes the unitary
only by a global factor -- except when the gate is controlled, in which case
the phase is relative and the GlobalPhase gate is kept with a warning.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import pi
from typing import Callable

import numpy as np

from .circuit import Circuit, GateKind, GatePlacement, Layer, gate_matrix


@dataclass(frozen=True)
class ExpansionMode:
    use_generalized: bool = False
    keep_global_phase: bool = True


@dataclass(frozen=True)
class ExpansionResult:
    gates: tuple[GatePlacement, ...]  # circuit-time order
    cost: int


# (kind, params-builder); params-builder maps the original gate's params
_Row = list[tuple[GateKind, Callable[[tuple[float, ...]], tuple[float, ...]]]]

def _const(*values: float) -> Callable[[tuple[float, ...]], tuple[float, ...]]:
    return lambda _p: values


_NO_PARAMS = _const()

BASIC_TABLE: dict[GateKind, _Row] = {
    GateKind.SQRT_X: [(GateKind.H, _NO_PARAMS), (GateKind.S, _NO_PARAMS), (GateKind.H, _NO_PARAMS)],
    GateKind.SQRT_X_INV: [(GateKind.H, _NO_PARAMS), (GateKind.SDG, _NO_PARAMS), (GateKind.H, _NO_PARAMS)],
    GateKind.SQRT_Y: [(GateKind.GLOBAL_PHASE, _const(pi / 4)), (GateKind.Z, _NO_PARAMS),
                      (GateKind.H, _NO_PARAMS)],
    GateKind.SQRT_Y_INV: [(GateKind.GLOBAL_PHASE, _const(-pi / 4)), (GateKind.H, _NO_PARAMS),
                          (GateKind.Z, _NO_PARAMS)],
    GateKind.XPOW: [(GateKind.H, _NO_PARAMS), (GateKind.ZPOW, lambda p: (p[0],)),
                    (GateKind.H, _NO_PARAMS)],
    GateKind.YPOW: [(GateKind.H, _NO_PARAMS), (GateKind.S, _NO_PARAMS), (GateKind.H, _NO_PARAMS),
                    (GateKind.ZPOW, lambda p: (p[0],)),
                    (GateKind.H, _NO_PARAMS), (GateKind.SDG, _NO_PARAMS), (GateKind.H, _NO_PARAMS)],
    GateKind.RX: [(GateKind.GLOBAL_PHASE, lambda p: (-p[0] / 2,)),
                  (GateKind.H, _NO_PARAMS), (GateKind.ZPOW, lambda p: (p[0] / pi,)),
                  (GateKind.H, _NO_PARAMS)],
    GateKind.RY: [(GateKind.GLOBAL_PHASE, lambda p: (-p[0] / 2,)),
                  (GateKind.H, _NO_PARAMS), (GateKind.S, _NO_PARAMS), (GateKind.H, _NO_PARAMS),
                  (GateKind.ZPOW, lambda p: (p[0] / pi,)),
                  (GateKind.H, _NO_PARAMS), (GateKind.SDG, _NO_PARAMS), (GateKind.H, _NO_PARAMS)],
    GateKind.RZ: [(GateKind.GLOBAL_PHASE, lambda p: (-p[0] / 2,)),
                  (GateKind.ZPOW, lambda p: (p[0] / pi,))],
}

GENERALIZED_TABLE: dict[GateKind, _Row] = {
    GateKind.SQRT_X: [(GateKind.H, _NO_PARAMS), (GateKind.HG, _const(0.0, pi / 2))],
    GateKind.SQRT_X_INV: [(GateKind.H, _NO_PARAMS), (GateKind.HG, _const(0.0, -pi / 2))],
    GateKind.SQRT_Y: [(GateKind.HG, _const(pi / 4, 5 * pi / 4))],
    GateKind.SQRT_Y_INV: [(GateKind.H, _NO_PARAMS), (GateKind.ZG, _const(-pi / 4, -5 * pi / 4))],
    GateKind.XPOW: [(GateKind.H, _NO_PARAMS), (GateKind.HG, lambda p: (0.0, p[0] * pi))],
    GateKind.YPOW: [(GateKind.H, _NO_PARAMS), (GateKind.HG, _const(0.0, pi / 2)),
                    (GateKind.HG, lambda p: (0.0, p[0] * pi)), (GateKind.HG, _const(0.0, -pi / 2))],
    GateKind.RX: [(GateKind.HG, lambda p: (-p[0] / 2, -p[0] / 2)),
                  (GateKind.HG, lambda p: (0.0, p[0]))],
    GateKind.RY: [(GateKind.HG, lambda p: (-p[0] / 2, -p[0] / 2)),
                  (GateKind.HG, _const(0.0, pi / 2)),
                  (GateKind.HG, lambda p: (0.0, p[0])),
                  (GateKind.HG, _const(0.0, -pi / 2))],
    GateKind.RZ: [(GateKind.ZG, lambda p: (-p[0] / 2, p[0] / 2))],
}


def expand_gate(placement: GatePlacement, mode: ExpansionMode) -> ExpansionResult:
    """Core gates pass through with cost 1; everything else is rewritten."""
    if placement.kind.is_core:
        return ExpansionResult((placement,), 1)
    table = GENERALIZED_TABLE if mode.use_generalized else BASIC_TABLE
    row = table.get(placement.kind)
    if row is None:
        raise ValueError(f"no expansion for {placement.kind.name}")
    gates = []
    for kind, params_of in row:
        if kind is GateKind.GLOBAL_PHASE and not mode.keep_global_phase:
            if placement.controls:
                warnings.warn(
                    "a controlled GlobalPhase is not a global phase; keeping it "
                    f"in the expansion of {placement.kind.name}", stacklevel=2)
            else:
                continue
        gates.append(GatePlacement(kind, placement.targets, params_of(placement.params),
                                   placement.controls))
    return ExpansionResult(tuple(gates), len(gates))


def expand_circuit(circuit: Circuit, mode: ExpansionMode) -> Circuit:
    """Replace every non-core placement with its expansion, one gate per layer.

    All-core layers are copied through unchanged (including multi-gate layers).
    A mixed layer is serialized placement by placement; its placements act on
    disjoint wires, so ordering them does not change the realized unitary.
    """
    layers: list[Layer] = []
    for layer in circuit.layers:
        if all(p.kind.is_core for p in layer.gates):
            layers.append(layer)
            continue
        for placement in layer.gates:
            for emitted in expand_gate(placement, mode).gates:
                layers.append(Layer((emitted,)))
    return Circuit(circuit.num_wires, tuple(layers))


def verify_expansion(placement: GatePlacement, result: ExpansionResult,
                     keep_global_phase: bool = True) -> float:
    """Spectral-norm deviation between the expansion's product and the gate.

    With keep_global_phase=False the product is first phase-aligned by the
    largest-magnitude entry, so a pure global-phase difference scores 0.
    """
    if placement.kind is GateKind.SWAP:
        raise ValueError("verify_expansion works on single-target gates")
    target = gate_matrix(placement.kind, placement.params)
    product = np.eye(2, dtype=complex)
    for emitted in result.gates:
        if emitted.kind is GateKind.SWAP:
            raise ValueError("expansions of single-target gates cannot contain SWAP")
        product = gate_matrix(emitted.kind, emitted.params) @ product
    if not keep_global_phase:
        k = np.unravel_index(np.argmax(np.abs(product)), product.shape)
        phase = np.angle(product[k]) - np.angle(target[k])
        product = product * np.exp(-1j * phase)
    return float(np.linalg.norm(product - target, 2))
