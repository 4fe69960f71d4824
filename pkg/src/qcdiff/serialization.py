"""Circuit text format: parsing, canonical serialization, validation.

The format is a JSON object {"wires": n, "cols": [[token, ...], ...]} where
each column lists one token per wire, top wire first. Tokens:

    "-" empty        "C" control        "A" anticontrol
    "H" "X" "Y" "Z" "S" "Sdg" "T" "Tdg" "SWAP" "SX" "SXdg" "SY" "SYdg"
    "Z^(k)" "X^(k)" "Y^(k)" "P(t)" "GP(t)" "RX(t)" "RY(t)" "RZ(t)"
    "ZG(a,b)" "YG(a,b)" "HG(a,b)"

Angles are radians; a "deg" suffix inside the parentheses converts from
degrees. Control/anticontrol tokens attach to every gate in their column.
The canonical form is minimal-whitespace JSON with angles as shortest
round-trip decimals, safe for URL embedding after percent-encoding.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from urllib.parse import unquote

from .circuit import MAX_WIRES, Circuit, Control, GateKind, GatePlacement, Layer


class CircuitParseError(ValueError):
    """Unparseable or structurally invalid circuit text.

    `position` is (column, wire) when the offending token is known.
    """

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        if position is not None:
            message = f"column {position[0]}, wire {position[1]}: {message}"
        super().__init__(message)
        self.position = position


_SIMPLE_TOKENS = {
    "H": GateKind.H, "X": GateKind.X, "Y": GateKind.Y, "Z": GateKind.Z,
    "S": GateKind.S, "Sdg": GateKind.SDG, "T": GateKind.T, "Tdg": GateKind.TDG,
    "SX": GateKind.SQRT_X, "SXdg": GateKind.SQRT_X_INV,
    "SY": GateKind.SQRT_Y, "SYdg": GateKind.SQRT_Y_INV,
}

_PARAM_TOKENS = {
    "Z^": GateKind.ZPOW, "X^": GateKind.XPOW, "Y^": GateKind.YPOW,
    "P": GateKind.PHASE, "GP": GateKind.GLOBAL_PHASE,
    "RX": GateKind.RX, "RY": GateKind.RY, "RZ": GateKind.RZ,
    "ZG": GateKind.ZG, "YG": GateKind.YG, "HG": GateKind.HG,
}

_PARAM_RE = re.compile(r"^(Z\^|X\^|Y\^|GP|P|RX|RY|RZ|ZG|YG|HG)\((.*)\)$")


def _parse_angle(text: str, pos: tuple[int, int]) -> float:
    text = text.strip()
    degrees = text.endswith("deg")
    if degrees:
        text = text[:-3].strip()
    try:
        value = float(text)
    except ValueError:
        raise CircuitParseError(f"malformed parameter {text!r}", pos) from None
    if not math.isfinite(value):
        raise CircuitParseError(f"non-finite parameter {text!r}", pos)
    return math.radians(value) if degrees else value


def _parse_token(token: str, pos: tuple[int, int]) -> tuple[GateKind, tuple[float, ...]]:
    if token in _SIMPLE_TOKENS:
        return _SIMPLE_TOKENS[token], ()
    m = _PARAM_RE.match(token)
    if m is None:
        raise CircuitParseError(f"unknown token {token!r}", pos)
    kind = _PARAM_TOKENS[m.group(1)]
    parts = m.group(2).split(",")
    if len(parts) != kind.num_params:
        raise CircuitParseError(
            f"{token!r}: expected {kind.num_params} parameter(s), got {len(parts)}", pos)
    return kind, tuple(_parse_angle(p, pos) for p in parts)


def _parse_column(col_index: int, tokens: list, num_wires: int) -> Layer:
    controls: list[Control] = []
    singles: list[tuple[int, GateKind, tuple[float, ...]]] = []
    swap_wires: list[int] = []
    for wire, token in enumerate(tokens):
        pos = (col_index, wire)
        if not isinstance(token, str):
            raise CircuitParseError(f"token must be a string, got {token!r}", pos)
        if token == "-":
            continue
        if token == "C":
            controls.append(Control(wire, anti=False))
        elif token == "A":
            controls.append(Control(wire, anti=True))
        elif token == "SWAP":
            swap_wires.append(wire)
        else:
            kind, params = _parse_token(token, pos)
            singles.append((wire, kind, params))
    if len(swap_wires) not in (0, 2):
        raise CircuitParseError(
            f"column {col_index}: SWAP needs exactly two SWAP tokens, got {len(swap_wires)}")
    gates: list[GatePlacement] = []
    if swap_wires:
        gates.append(GatePlacement(GateKind.SWAP, tuple(swap_wires), (), tuple(controls)))
    for wire, kind, params in singles:
        gates.append(GatePlacement(kind, (wire,), params, tuple(controls)))
    if controls and not gates:
        raise CircuitParseError(f"column {col_index}: control qubits without a gate")
    gates.sort(key=lambda g: g.targets[0])
    return Layer(tuple(gates))


def parse_circuit(text: str) -> Circuit:
    """Parse circuit text (plain or "circuit=..." percent-encoded query form)."""
    stripped = text.strip()
    if stripped.startswith("circuit="):
        stripped = unquote(stripped[len("circuit="):])
    try:
        doc = json.loads(stripped)
    except json.JSONDecodeError as e:
        raise CircuitParseError(f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise CircuitParseError("top level must be a JSON object")
    unknown = set(doc) - {"wires", "cols"}
    if unknown:
        raise CircuitParseError(f"unknown keys {sorted(unknown)}")
    wires = doc.get("wires")
    if not isinstance(wires, int) or isinstance(wires, bool) or wires < 1:
        raise CircuitParseError(f'"wires" must be a positive integer, got {wires!r}')
    cols = doc.get("cols", [])
    if not isinstance(cols, list):
        raise CircuitParseError('"cols" must be a list of columns')
    layers = []
    for c, col in enumerate(cols):
        if not isinstance(col, list) or len(col) != wires:
            raise CircuitParseError(f"column {c} must list exactly {wires} tokens")
        layers.append(_parse_column(c, col, wires))
    circuit = Circuit(wires, tuple(layers))
    violations = validate(circuit)
    if violations:
        v = violations[0]
        raise CircuitParseError(str(v))
    return circuit


# -- serialization -----------------------------------------------------------

def _format_angle(value: float) -> str:
    return repr(float(value))


def _token_for(placement: GatePlacement) -> str:
    kind = placement.kind
    for token, k in _SIMPLE_TOKENS.items():
        if k is kind:
            return token
    for prefix, k in _PARAM_TOKENS.items():
        if k is kind:
            args = ",".join(_format_angle(p) for p in placement.params)
            return f"{prefix}({args})"
    raise ValueError(f"no token for {kind}")


def serialize_circuit(circuit: Circuit) -> str:
    """Canonical text: minimal whitespace, shortest round-trip decimals."""
    cols = []
    for layer in circuit.layers:
        col = ["-"] * circuit.num_wires
        for placement in layer.gates:
            for control in placement.controls:
                col[control.wire] = "A" if control.anti else "C"
        for placement in layer.gates:
            if placement.kind is GateKind.SWAP:
                for w in placement.targets:
                    col[w] = "SWAP"
            else:
                col[placement.targets[0]] = _token_for(placement)
        cols.append(col)
    doc = {"wires": circuit.num_wires, "cols": cols}
    return json.dumps(doc, separators=(",", ":"))


# -- validation --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    layer: int | None
    wires: tuple[int, ...]
    reason: str

    def __str__(self) -> str:
        where = f"layer {self.layer}" if self.layer is not None else "circuit"
        wires = f" wires {list(self.wires)}" if self.wires else ""
        return f"{where}{wires}: {self.reason}"


def validate(circuit: Circuit) -> list[Violation]:
    """All structural violations, empty iff the circuit is well formed."""
    out: list[Violation] = []
    n = circuit.num_wires
    if n > MAX_WIRES:
        out.append(Violation(None, (), f"width {n} exceeds the {MAX_WIRES}-wire maximum"))
    for li, layer in enumerate(circuit.layers):
        targets_seen: set[int] = set()
        control_polarity: dict[int, bool] = {}
        for placement in layer.gates:
            for w in placement.wires:
                if not 0 <= w < n:
                    out.append(Violation(li, (w,), f"wire {w} out of range"))
            if placement.kind is GateKind.SWAP and placement.targets[0] == placement.targets[1]:
                out.append(Violation(li, placement.targets, "SWAP wires must differ"))
            target_set = set(placement.targets)
            if len(target_set) < len(placement.targets):
                out.append(Violation(li, placement.targets, "repeated target wire"))
            overlap = target_set & targets_seen
            if overlap:
                out.append(Violation(li, tuple(sorted(overlap)), "wire already used in this layer"))
            targets_seen |= target_set
            for control in placement.controls:
                if control.wire in target_set:
                    out.append(Violation(li, (control.wire,),
                                         "control wire coincides with a target wire"))
                prior = control_polarity.get(control.wire)
                if prior is not None and prior != control.anti:
                    out.append(Violation(li, (control.wire,),
                                         "wire is both control and anticontrol"))
                control_polarity[control.wire] = control.anti
        clash = targets_seen & set(control_polarity)
        if clash:
            out.append(Violation(li, tuple(sorted(clash)),
                                 "control wire coincides with a target wire"))
    # de-duplicate identical findings (shared-column controls report once)
    seen: set[tuple] = set()
    unique = []
    for v in out:
        key = (v.layer, v.wires, v.reason)
        if key not in seen:
            seen.add(key)
            unique.append(v)
    return unique
