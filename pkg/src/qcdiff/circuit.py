"""Gate vocabulary and circuit structure (wires x layers).

Wire convention: wire 0 is the top wire and contributes bit value 2^0 to the
amplitude index, so printed bitstrings read b_{n-1}...b_0 with the bottom wire
left-most.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import pi, sqrt
import cmath
import math

import numpy as np

MAX_WIRES = 16

_SQRT2_INV = 1 / sqrt(2)


class GateKind(Enum):
    # Core set: directly annotatable.
    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"
    S = "S"
    SDG = "Sdg"
    T = "T"
    TDG = "Tdg"
    ZPOW = "Z^"
    PHASE = "P"
    GLOBAL_PHASE = "GP"
    SWAP = "SWAP"
    ZG = "ZG"
    YG = "YG"
    HG = "HG"
    # Non-core set: simulable, expandable, not annotatable.
    XPOW = "X^"
    YPOW = "Y^"
    SQRT_X = "SX"
    SQRT_X_INV = "SXdg"
    SQRT_Y = "SY"
    SQRT_Y_INV = "SYdg"
    RX = "RX"
    RY = "RY"
    RZ = "RZ"

    @property
    def num_params(self) -> int:
        return _NUM_PARAMS[self]

    @property
    def num_targets(self) -> int:
        return 2 if self is GateKind.SWAP else 1

    @property
    def is_core(self) -> bool:
        return self in _CORE_KINDS


_CORE_KINDS = frozenset({
    GateKind.H, GateKind.X, GateKind.Y, GateKind.Z,
    GateKind.S, GateKind.SDG, GateKind.T, GateKind.TDG,
    GateKind.ZPOW, GateKind.PHASE, GateKind.GLOBAL_PHASE,
    GateKind.SWAP, GateKind.ZG, GateKind.YG, GateKind.HG,
})

_NUM_PARAMS = {
    GateKind.ZPOW: 1, GateKind.PHASE: 1, GateKind.GLOBAL_PHASE: 1,
    GateKind.XPOW: 1, GateKind.YPOW: 1,
    GateKind.RX: 1, GateKind.RY: 1, GateKind.RZ: 1,
    GateKind.ZG: 2, GateKind.YG: 2, GateKind.HG: 2,
}
_NUM_PARAMS.update({k: 0 for k in GateKind if k not in _NUM_PARAMS})


@dataclass(frozen=True)
class Control:
    """A control (bit must be 1) or anticontrol (bit must be 0) qubit."""
    wire: int
    anti: bool = False


@dataclass(frozen=True)
class GatePlacement:
    """A gate in one column. Control order and SWAP target order carry no
    meaning, so both are canonicalized (ascending) at construction."""
    kind: GateKind
    targets: tuple[int, ...]
    params: tuple[float, ...] = ()
    controls: tuple[Control, ...] = ()

    def __post_init__(self):
        if len(self.targets) != self.kind.num_targets:
            raise ValueError(f"{self.kind.name} takes {self.kind.num_targets} target(s), "
                             f"got {self.targets}")
        if len(self.params) != self.kind.num_params:
            raise ValueError(f"{self.kind.name} takes {self.kind.num_params} parameter(s), "
                             f"got {self.params}")
        for p in self.params:
            if not math.isfinite(p):
                raise ValueError(f"non-finite parameter {p} for {self.kind.name}")
        if self.kind is GateKind.SWAP:
            object.__setattr__(self, "targets", tuple(sorted(self.targets)))
        object.__setattr__(self, "controls",
                           tuple(sorted(self.controls, key=lambda c: (c.wire, c.anti))))

    @property
    def wires(self) -> tuple[int, ...]:
        return self.targets + tuple(c.wire for c in self.controls)


@dataclass(frozen=True)
class Layer:
    """Gate placements sharing one circuit column, kept sorted by target wire
    (placements in a valid layer touch disjoint wires, so order is cosmetic)."""
    gates: tuple[GatePlacement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates",
                           tuple(sorted(self.gates, key=lambda g: g.targets[0])))


@dataclass(frozen=True)
class Circuit:
    num_wires: int
    layers: tuple[Layer, ...] = ()

    def __post_init__(self):
        if self.num_wires < 1:
            raise ValueError("a circuit needs at least one wire")

    @property
    def depth(self) -> int:
        return len(self.layers)


def gate(kind: GateKind, target: int, *params: float,
         controls: tuple[Control, ...] = ()) -> GatePlacement:
    """Shorthand constructor for single-target placements."""
    return GatePlacement(kind, (target,), tuple(float(p) for p in params), controls)


def swap(i: int, j: int, controls: tuple[Control, ...] = ()) -> GatePlacement:
    return GatePlacement(GateKind.SWAP, (i, j), (), controls)


def single_gate_circuit(num_wires: int, placement: GatePlacement) -> Circuit:
    return Circuit(num_wires, (Layer((placement,)),))


# -- matrices ---------------------------------------------------------------

_FIXED_MATRICES = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, cmath.exp(1j * pi / 4)]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, cmath.exp(-1j * pi / 4)]], dtype=complex),
}


def _zpow(k: float) -> np.ndarray:
    # Principal branch: Z^k = diag(1, e^{i pi k}), consistent with Phase(theta) = Z^{theta/pi}.
    return np.array([[1, 0], [0, cmath.exp(1j * pi * k)]], dtype=complex)


def _xpow(k: float) -> np.ndarray:
    # H Z^k H, written out: (1/2) [[1+e, 1-e], [1-e, 1+e]] with e = e^{i pi k}.
    e = cmath.exp(1j * pi * k)
    return 0.5 * np.array([[1 + e, 1 - e], [1 - e, 1 + e]], dtype=complex)


def _ypow(k: float) -> np.ndarray:
    # Principal power via the Y eigenbasis: (1/2) [[1+e, i(e-1)], [-i(e-1), 1+e]].
    e = cmath.exp(1j * pi * k)
    return 0.5 * np.array([[1 + e, 1j * (e - 1)], [-1j * (e - 1), 1 + e]], dtype=complex)


def gate_matrix(kind: GateKind, params: tuple[float, ...] = ()) -> np.ndarray:
    """2x2 matrix of a single-target gate; GlobalPhase is e^{i theta} I.

    SWAP has no 2x2 matrix and is rejected; callers treat it specially.
    """
    if kind is GateKind.SWAP:
        raise ValueError("SWAP is a two-target gate with no 2x2 matrix")
    if len(params) != kind.num_params:
        raise ValueError(f"{kind.name} takes {kind.num_params} parameter(s), got {params}")
    if kind in _FIXED_MATRICES:
        return _FIXED_MATRICES[kind].copy()
    if kind is GateKind.ZPOW:
        return _zpow(params[0])
    if kind is GateKind.PHASE:
        return np.array([[1, 0], [0, cmath.exp(1j * params[0])]], dtype=complex)
    if kind is GateKind.GLOBAL_PHASE:
        return cmath.exp(1j * params[0]) * np.eye(2, dtype=complex)
    if kind is GateKind.ZG:
        a, b = params
        return np.array([[cmath.exp(1j * a), 0], [0, cmath.exp(1j * b)]], dtype=complex)
    if kind is GateKind.YG:
        a, b = params
        return np.array([[0, cmath.exp(1j * b)], [cmath.exp(1j * a), 0]], dtype=complex)
    if kind is GateKind.HG:
        a, b = params
        ea, eb = cmath.exp(1j * a), cmath.exp(1j * b)
        return _SQRT2_INV * np.array([[ea, eb], [ea, -eb]], dtype=complex)
    if kind is GateKind.XPOW:
        return _xpow(params[0])
    if kind is GateKind.YPOW:
        return _ypow(params[0])
    if kind is GateKind.SQRT_X:
        return _xpow(0.5)
    if kind is GateKind.SQRT_X_INV:
        return _xpow(-0.5)
    if kind is GateKind.SQRT_Y:
        return _ypow(0.5)
    if kind is GateKind.SQRT_Y_INV:
        return _ypow(-0.5)
    if kind is GateKind.RX:
        t = params[0] / 2
        return np.array([[math.cos(t), -1j * math.sin(t)],
                         [-1j * math.sin(t), math.cos(t)]], dtype=complex)
    if kind is GateKind.RY:
        t = params[0] / 2
        return np.array([[math.cos(t), -math.sin(t)],
                         [math.sin(t), math.cos(t)]], dtype=complex)
    if kind is GateKind.RZ:
        t = params[0] / 2
        return np.array([[cmath.exp(-1j * t), 0], [0, cmath.exp(1j * t)]], dtype=complex)
    raise ValueError(f"no matrix for {kind}")
