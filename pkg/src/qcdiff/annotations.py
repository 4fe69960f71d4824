"""Difference-highlighting annotations: a machine-readable record of how one
layer's state vector becomes the next.

Every annotatable layer maps to one of four replayable semantics:

    Rotation      a subset of amplitudes multiplied by e^{i theta}
    DualRotation  even/odd subsets rotated independently, optionally exchanged
    Butterfly     even' = (e^{ia} even + e^{ib} odd)/sqrt(2), odd' the difference
    SwapPairs     listed index pairs exchanged

Replaying the annotation with `apply_annotation` must reproduce the simulator's
next state to within 1e-12; that equivalence is the module's master invariant.
Even subsets render purple, odd subsets green; rotations of a single subset are
green. Colors are labels, not pixels.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import pi, sqrt

import numpy as np

from .circuit import Circuit, Control, GateKind, GatePlacement
from .statevector import StateVector, control_mask

_SQRT2_INV = 1 / sqrt(2)


def normalize_angle(theta: float) -> float:
    """Wrap into (-pi, pi]."""
    if -pi < theta <= pi:
        return theta
    a = theta % (2 * pi)  # [0, 2*pi)
    if a > pi:
        a -= 2 * pi
    return a


@dataclass(frozen=True)
class GridLayout:
    """Wrapped display of 2^n amplitudes as 2^(n-k) rows x 2^k columns."""
    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"column bits k={self.k} must be in [0, {self.n}]")

    @property
    def rows(self) -> int:
        return 2 ** (self.n - self.k)

    @property
    def cols(self) -> int:
        return 2 ** self.k


def default_layout(n: int) -> GridLayout:
    return GridLayout(n, max(0, n - 4))


def layout_position(index: int, layout: GridLayout) -> tuple[int, int]:
    """(row, col) of an amplitude: low k bits give the column, row 0 on top."""
    if not 0 <= index < 2 ** layout.n:
        raise ValueError(f"index {index} out of range for n={layout.n}")
    return index >> layout.k, index & (layout.cols - 1)


@dataclass(frozen=True)
class AmplitudePartition:
    """Control-matching amplitudes split by the target-wire bit (0 = even)."""
    even: tuple[int, ...]
    odd: tuple[int, ...]


def affected_set(n: int, controls: tuple[Control, ...] = ()) -> tuple[int, ...]:
    """Sorted indices whose control bits match; 2^(n-|controls|) of them."""
    return tuple(np.flatnonzero(control_mask(n, controls)).tolist())


def even_odd_partition(n: int, target: int,
                       controls: tuple[Control, ...] = ()) -> AmplitudePartition:
    if any(c.wire == target for c in controls):
        raise ValueError(f"target wire {target} collides with a control")
    idx = np.flatnonzero(control_mask(n, controls))
    bit = (idx >> target) & 1
    return AmplitudePartition(tuple(idx[bit == 0].tolist()), tuple(idx[bit == 1].tolist()))


# -- annotation variants -----------------------------------------------------

@dataclass(frozen=True)
class Rotation:
    subset: tuple[int, ...]
    angle: float            # normalized to (-pi, pi]
    raw_angle: float        # as parameterized; replay uses this
    color: str = "green"


@dataclass(frozen=True)
class DualRotation:
    partition: AmplitudePartition
    angle_even: float
    angle_odd: float
    raw_angle_even: float
    raw_angle_odd: float
    exchange: bool


@dataclass(frozen=True)
class Butterfly:
    partition: AmplitudePartition
    angle_even: float
    angle_odd: float
    raw_angle_even: float
    raw_angle_odd: float


@dataclass(frozen=True)
class SwapPairs:
    pairs: tuple[tuple[int, int], ...]
    layout_class: str  # same_column | same_row | diagonal


@dataclass(frozen=True)
class Unsupported:
    reason: str


LayerAnnotation = Rotation | DualRotation | Butterfly | SwapPairs | Unsupported


def swap_layout_class(i: int, j: int, layout: GridLayout) -> str:
    if i == j:
        raise ValueError("SWAP wires must differ")
    i, j = min(i, j), max(i, j)
    if layout.k <= i:
        return "same_column"
    if j < layout.k:
        return "same_row"
    return "diagonal"


def _swap_pairs(n: int, i: int, j: int, controls: tuple[Control, ...]) -> tuple[tuple[int, int], ...]:
    i, j = min(i, j), max(i, j)
    idx = np.arange(2 ** n)
    sel = ((idx >> i) & 1 == 1) & ((idx >> j) & 1 == 0) & control_mask(n, controls)
    src = idx[sel]
    dst = src ^ ((1 << i) | (1 << j))
    return tuple(zip(src.tolist(), dst.tolist()))


_ROTATION_ANGLES = {
    GateKind.Z: pi,
    GateKind.S: pi / 2,
    GateKind.SDG: -pi / 2,
    GateKind.T: pi / 4,
    GateKind.TDG: -pi / 4,
}


def _dual(partition: AmplitudePartition, a: float, b: float, exchange: bool) -> DualRotation:
    return DualRotation(partition, normalize_angle(a), normalize_angle(b), a, b, exchange)


def _butterfly(partition: AmplitudePartition, a: float, b: float) -> Butterfly:
    return Butterfly(partition, normalize_angle(a), normalize_angle(b), a, b)


def annotate_placement(n: int, placement: GatePlacement,
                       layout: GridLayout | None = None) -> LayerAnnotation:
    """Annotation of a lone placement; Unsupported for non-core kinds."""
    kind = placement.kind
    if not kind.is_core:
        return Unsupported("non-core gate")
    controls = placement.controls
    if kind is GateKind.SWAP:
        i, j = placement.targets
        if layout is None:
            layout = default_layout(n)
        return SwapPairs(_swap_pairs(n, i, j, controls), swap_layout_class(i, j, layout))
    if kind is GateKind.GLOBAL_PHASE:
        theta = placement.params[0]
        return Rotation(affected_set(n, controls), normalize_angle(theta), theta)
    target = placement.targets[0]
    if kind in _ROTATION_ANGLES or kind in (GateKind.ZPOW, GateKind.PHASE):
        if kind is GateKind.ZPOW:
            theta = placement.params[0] * pi
        elif kind is GateKind.PHASE:
            theta = placement.params[0]
        else:
            theta = _ROTATION_ANGLES[kind]
        odd = even_odd_partition(n, target, controls).odd
        return Rotation(odd, normalize_angle(theta), theta)
    partition = even_odd_partition(n, target, controls)
    if kind is GateKind.X:
        return _dual(partition, 0.0, 0.0, exchange=True)
    if kind is GateKind.Y:
        return _dual(partition, pi / 2, -pi / 2, exchange=True)
    if kind is GateKind.H:
        return _butterfly(partition, 0.0, 0.0)
    if kind is GateKind.ZG:
        return _dual(partition, placement.params[0], placement.params[1], exchange=False)
    if kind is GateKind.YG:
        return _dual(partition, placement.params[0], placement.params[1], exchange=True)
    if kind is GateKind.HG:
        return _butterfly(partition, placement.params[0], placement.params[1])
    return Unsupported(f"no annotation rule for {kind.name}")


def annotate_layer(circuit: Circuit, layer_index: int,
                   layout: GridLayout | None = None) -> LayerAnnotation:
    """Annotation of one layer; difference highlighting needs exactly one gate."""
    if not 0 <= layer_index < circuit.depth:
        raise IndexError(f"layer {layer_index} out of range for depth {circuit.depth}")
    layer = circuit.layers[layer_index]
    if len(layer.gates) == 0:
        return Unsupported("empty layer")
    if len(layer.gates) > 1:
        return Unsupported("multiple gates in one layer")
    return annotate_placement(circuit.num_wires, layer.gates[0], layout)


def apply_annotation(state: StateVector, annotation: LayerAnnotation) -> StateVector:
    """Replay the annotation literally; must match the simulated gate to 1e-12."""
    if isinstance(annotation, Unsupported):
        raise ValueError(f"cannot replay an unsupported layer: {annotation.reason}")
    amps = state.amplitudes.copy()
    if isinstance(annotation, Rotation):
        subset = list(annotation.subset)
        amps[subset] = amps[subset] * np.exp(1j * annotation.raw_angle)
    elif isinstance(annotation, DualRotation):
        even, odd = list(annotation.partition.even), list(annotation.partition.odd)
        rotated_even = amps[even] * np.exp(1j * annotation.raw_angle_even)
        rotated_odd = amps[odd] * np.exp(1j * annotation.raw_angle_odd)
        if annotation.exchange:
            # even[i] and odd[i] differ only in the target bit, so sorted
            # order pairs them positionally
            amps[even], amps[odd] = rotated_odd, rotated_even
        else:
            amps[even], amps[odd] = rotated_even, rotated_odd
    elif isinstance(annotation, Butterfly):
        even, odd = list(annotation.partition.even), list(annotation.partition.odd)
        ve = amps[even] * np.exp(1j * annotation.raw_angle_even)
        vo = amps[odd] * np.exp(1j * annotation.raw_angle_odd)
        amps[even] = (ve + vo) * _SQRT2_INV
        amps[odd] = (ve - vo) * _SQRT2_INV
    elif isinstance(annotation, SwapPairs):
        src = [a for a, _ in annotation.pairs]
        dst = [b for _, b in annotation.pairs]
        amps[src], amps[dst] = amps[dst].copy(), amps[src].copy()
    else:
        raise TypeError(f"unknown annotation {annotation!r}")
    return StateVector(state.num_qubits, amps)


# -- JSON form (appears verbatim in simulation reports) ------------------------

def annotation_to_json(annotation: LayerAnnotation) -> dict | None:
    """JSON-ready dict with stable key order; None for unsupported layers."""
    if isinstance(annotation, Unsupported):
        return None
    if isinstance(annotation, Rotation):
        return {
            "kind": "rotation",
            "color": annotation.color,
            "subset": list(annotation.subset),
            "angle": annotation.angle,
            "raw_angle": annotation.raw_angle,
        }
    if isinstance(annotation, DualRotation):
        return {
            "kind": "dual_rotation",
            "even": list(annotation.partition.even),
            "odd": list(annotation.partition.odd),
            "angle_even": annotation.angle_even,
            "angle_odd": annotation.angle_odd,
            "raw_angle_even": annotation.raw_angle_even,
            "raw_angle_odd": annotation.raw_angle_odd,
            "exchange": annotation.exchange,
        }
    if isinstance(annotation, Butterfly):
        return {
            "kind": "butterfly",
            "even": list(annotation.partition.even),
            "odd": list(annotation.partition.odd),
            "angle_even": annotation.angle_even,
            "angle_odd": annotation.angle_odd,
            "raw_angle_even": annotation.raw_angle_even,
            "raw_angle_odd": annotation.raw_angle_odd,
        }
    if isinstance(annotation, SwapPairs):
        return {
            "kind": "swap_pairs",
            "pairs": [list(p) for p in annotation.pairs],
            "layout_class": annotation.layout_class,
        }
    raise TypeError(f"unknown annotation {annotation!r}")
