"""SimulationReport: the versioned JSON interchange document.

Layer records run from the initial all-zeros state to the final state
(depth + 1 records). Record k carries the state after k layers plus the
annotation describing how layer k transforms it into record k+1; the final
record and un-annotatable layers carry null annotations. Keys are emitted in
a fixed order and floats as shortest round-trip decimals, so identical inputs
produce byte-identical reports.
"""
from __future__ import annotations

import json
from typing import Any

from .analytics import HalfMatrix, QubitStats, half_matrix, qubit_stats_all
from .annotations import annotate_layer, annotation_to_json, default_layout, GridLayout
from .circuit import Circuit
from .engine import run_circuit
from .serialization import serialize_circuit

SCHEMA_VERSION = "1"

BAR_MODES = ("probability", "magnitude", "log")


def _qubit_stats_json(stats: QubitStats) -> dict[str, Any]:
    return {
        "prob_one": float(stats.prob_one),
        "phase": None if stats.phase is None else float(stats.phase),
        "purity": float(stats.purity),
        "linear_entropy": float(stats.linear_entropy),
        "von_neumann_entropy": float(stats.von_neumann_entropy),
    }


def _half_matrix_json(hm: HalfMatrix) -> dict[str, Any]:
    return {
        "num_qubits": hm.n,
        "cells": [
            {
                "wires": [cell.i, cell.j],
                "correlation": float(cell.stats.correlation),
                "concurrence": float(cell.stats.concurrence),
                "linear_entropy": float(cell.stats.linear_entropy),
                "von_neumann_entropy": float(cell.stats.von_neumann_entropy),
            }
            for cell in hm.cells
        ],
    }


def build_report(circuit: Circuit, layout_k: int | None = None,
                 bars: str = "probability", decades: int = 6) -> dict[str, Any]:
    """Simulate and assemble the full report as a JSON-ready dict."""
    if bars not in BAR_MODES:
        raise ValueError(f"bars must be one of {BAR_MODES}, got {bars!r}")
    if decades < 1:
        raise ValueError("decades must be a positive integer")
    n = circuit.num_wires
    layout = default_layout(n) if layout_k is None else GridLayout(n, layout_k)
    states = run_circuit(circuit)
    layers = []
    for k, state in enumerate(states):
        if k < circuit.depth:
            annotation = annotation_to_json(annotate_layer(circuit, k, layout))
        else:
            annotation = None
        amps = state.amplitudes
        layers.append({
            "amplitudes": [[float(a.real), float(a.imag)] for a in amps],
            "probabilities": [float(p) for p in state.probabilities],
            "annotation": annotation,
            "qubit_stats": [_qubit_stats_json(s) for s in qubit_stats_all(state)],
        })
    final = states[-1]
    return {
        "schema_version": SCHEMA_VERSION,
        "circuit": serialize_circuit(circuit),
        "num_qubits": n,
        "layout_k": layout.k,
        "options": {"bars": bars, "decades": decades},
        "layers": layers,
        "half_matrix": _half_matrix_json(half_matrix(final)) if n >= 2 else None,
    }


def report_to_json(report: dict[str, Any]) -> str:
    """Compact UTF-8 JSON with stable key order (insertion order of the dict)."""
    return json.dumps(report, separators=(",", ":"), allow_nan=False)
