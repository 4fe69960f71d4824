"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with `pytest -s` to see them inline).

Tolerances are fixed here and are not calibration knobs.
"""
import json
import statistics
import subprocess
import sys
import time
from contextlib import contextmanager
from math import pi, sqrt

import numpy as np
import pytest

from qcdiff import (
    Control,
    ExpansionMode,
    GateKind,
    annotate_layer,
    apply_annotation,
    apply_single_qubit_gate,
    concurrence,
    correlation,
    expand_circuit,
    expand_gate,
    gate,
    gate_matrix,
    parse_circuit,
    partial_trace_pair,
    partial_trace_single,
    qubit_stats,
    run_circuit,
    state_from_amplitudes,
    verify_expansion,
)
from oracles import (
    CORE_KINDS,
    NON_CORE_KINDS,
    circuit_unitary,
    random_circuit,
    random_params,
)
from sample_circuits import (
    GROVER3_MARKED_INDEX,
    GROVER3_MARKED_PROBABILITY,
    GROVER3_TEXT,
    W4_TEXT,
    partially_entangled_state,
)


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL  {name}")
        raise
    print(f"PASS  {name}")


BASIC_COSTS = {
    GateKind.SQRT_X: 3, GateKind.SQRT_X_INV: 3, GateKind.SQRT_Y: 3,
    GateKind.SQRT_Y_INV: 3, GateKind.XPOW: 3, GateKind.YPOW: 7,
    GateKind.RX: 4, GateKind.RY: 8, GateKind.RZ: 2,
}
GENERALIZED_COSTS = {
    GateKind.SQRT_X: 2, GateKind.SQRT_X_INV: 2, GateKind.SQRT_Y: 1,
    GateKind.SQRT_Y_INV: 2, GateKind.XPOW: 2, GateKind.YPOW: 4,
    GateKind.RX: 2, GateKind.RY: 4, GateKind.RZ: 1,
}


def test_expansion_tables_all_18_rows():
    with criterion("expansion tables: 18 rows x 100 draws, <= 1e-12, exact costs, < 1 s"):
        rng = np.random.default_rng(2024)
        start = time.perf_counter()
        for mode, costs in ((ExpansionMode(False), BASIC_COSTS),
                            (ExpansionMode(True), GENERALIZED_COSTS)):
            for kind in NON_CORE_KINDS:
                for _ in range(100):
                    placement = gate(kind, 0, *random_params(rng, kind))
                    result = expand_gate(placement, mode)
                    assert result.cost == costs[kind]
                    assert verify_expansion(placement, result, True) <= 1e-12
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"took {elapsed:.2f} s"


def test_generalized_gate_identities():
    with criterion("generalized-gate identities and Y = S X S^-1, <= 1e-12"):
        rng = np.random.default_rng(2025)
        X = gate_matrix(GateKind.X)
        H = gate_matrix(GateKind.H)
        for _ in range(200):
            a, b = rng.uniform(-2 * pi, 2 * pi, size=2)
            zpa = gate_matrix(GateKind.ZPOW, (a / pi,))
            zpb = gate_matrix(GateKind.ZPOW, (b / pi,))
            zg = gate_matrix(GateKind.ZG, (a, b))
            assert np.abs(zg - X @ zpa @ X @ zpb).max() <= 1e-12
            assert np.abs(gate_matrix(GateKind.YG, (a, b)) - zpa @ X @ zpb).max() <= 1e-12
            assert np.abs(gate_matrix(GateKind.HG, (a, b)) - H @ zg).max() <= 1e-12
        y = gate_matrix(GateKind.S) @ X @ gate_matrix(GateKind.SDG)
        assert np.abs(y - gate_matrix(GateKind.Y)).max() <= 1e-12


def test_annotation_replay_corpus():
    with criterion("annotation replay: 200 random circuits, every layer <= 1e-12, < 10 s"):
        rng = np.random.default_rng(2026)
        start = time.perf_counter()
        for _ in range(200):
            n = int(rng.integers(1, 6))
            circuit = random_circuit(rng, n, int(rng.integers(1, 13)), CORE_KINDS)
            states = run_circuit(circuit)
            for k in range(circuit.depth):
                replayed = apply_annotation(states[k], annotate_layer(circuit, k))
                deviation = np.abs(replayed.amplitudes - states[k + 1].amplitudes).max()
                assert deviation <= 1e-12
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"took {elapsed:.2f} s"


def test_oracle_equivalence_and_expansion_equivalence():
    with criterion("oracle equivalence: dense product <= 1e-10; expansions preserve unitary"):
        rng = np.random.default_rng(2027)
        for _ in range(25):
            n = int(rng.integers(1, 5))
            circuit = random_circuit(rng, n, int(rng.integers(1, 21)),
                                     CORE_KINDS + NON_CORE_KINDS)
            dense = circuit_unitary(circuit)[:, 0]
            fast = run_circuit(circuit)[-1].amplitudes
            assert np.abs(fast - dense).max() <= 1e-10
            original = circuit_unitary(circuit)
            for use_generalized in (False, True):
                expanded = expand_circuit(circuit, ExpansionMode(use_generalized, True))
                assert np.abs(circuit_unitary(expanded) - original).max() <= 1e-10


def _pairs(n, target):
    idx = np.arange(2 ** n)
    even = idx[(idx >> target) & 1 == 0]
    return even, even | (1 << target)


def test_hadamard_probability_cases():
    with criterion("Hadamard cases: spread (p,0); cancel to even; cancel to odd, <= 1e-12"):
        H = gate_matrix(GateKind.H)
        # case 1: a cascade over empty odd halves splits every pair evenly
        state = state_from_amplitudes([1, 0, 0, 0, 0, 0, 0, 0])
        for target in (0, 1, 2):
            even, odd = _pairs(3, target)
            before = state.probabilities
            assert np.abs(before[odd]).max() <= 1e-12
            state = apply_single_qubit_gate(state, H, target)
            after = state.probabilities
            assert np.abs(after[even] - before[even] / 2).max() <= 1e-12
            assert np.abs(after[odd] - before[even] / 2).max() <= 1e-12
        # case 2: equal pairs with aligned phases concentrate on the even state
        uniform = state
        even, odd = _pairs(3, 0)
        before = uniform.probabilities
        assert np.abs(before[even] - before[odd]).max() <= 1e-12
        after = apply_single_qubit_gate(uniform, H, 0).probabilities
        assert np.abs(after[even] - 2 * before[even]).max() <= 1e-12
        assert np.abs(after[odd]).max() <= 1e-12
        # case 3: equal pairs with phases pi apart concentrate on the odd state
        z2 = apply_single_qubit_gate(uniform, gate_matrix(GateKind.Z), 2)
        even, odd = _pairs(3, 2)
        before = z2.probabilities
        after = apply_single_qubit_gate(z2, H, 2).probabilities
        assert np.abs(after[even]).max() <= 1e-12
        assert np.abs(after[odd] - 2 * before[odd]).max() <= 1e-12


def test_partially_entangled_reference_values():
    with criterion("reference state: correlations +1/-1/0.707, concurrences "
                   "0.707/0.707/0, purities 0.5 (+/- 1e-3)"):
        state = partially_entangled_state()
        top = partial_trace_pair(state, 0, 1)
        middle = partial_trace_pair(state, 1, 2)
        bottom = partial_trace_pair(state, 2, 3)
        assert correlation(top) == pytest.approx(1.0, abs=1e-3)
        assert correlation(bottom) == pytest.approx(-1.0, abs=1e-3)
        assert correlation(middle) == pytest.approx(0.707, abs=1e-3)
        assert concurrence(top) == pytest.approx(0.707, abs=1e-3)
        assert concurrence(bottom) == pytest.approx(0.707, abs=1e-3)
        assert concurrence(middle) == pytest.approx(0.0, abs=1e-3)
        for q in range(4):
            stats = qubit_stats(partial_trace_single(state, q))
            assert stats.purity == pytest.approx(0.5, abs=1e-3)


def test_algorithm_circuits():
    with criterion("algorithm circuits: W-4 at 0.25 x 4; Grover marked state at 25/32"):
        w4 = run_circuit(parse_circuit(W4_TEXT))[-1]
        probs = w4.probabilities
        hot = {1, 2, 4, 8}
        for index in range(16):
            expected = 0.25 if index in hot else 0.0
            assert abs(probs[index] - expected) <= 1e-9
        grover = run_circuit(parse_circuit(GROVER3_TEXT))[-1]
        marked = grover.probabilities[GROVER3_MARKED_INDEX]
        assert abs(marked - GROVER3_MARKED_PROBABILITY) <= 1e-9


def test_gate_application_performance_at_16_qubits():
    with criterion("performance: 16-qubit single-qubit gate <= 50 ms median over 100 gates"):
        rng = np.random.default_rng(2028)
        amps = rng.normal(size=2 ** 16) + 1j * rng.normal(size=2 ** 16)
        state = state_from_amplitudes(amps / np.linalg.norm(amps))
        H = gate_matrix(GateKind.H)
        times = []
        for k in range(100):
            target = k % 16
            start = time.perf_counter()
            state = apply_single_qubit_gate(state, H, target)
            times.append(time.perf_counter() - start)
        median = statistics.median(times)
        assert median <= 0.050, f"median {median * 1e3:.2f} ms"


def test_cli_determinism():
    with criterion("CLI determinism: byte-identical reports across 5 runs"):
        outputs = set()
        for _ in range(5):
            result = subprocess.run(
                [sys.executable, "-m", "qcdiff.cli", "simulate", "-"],
                input=GROVER3_TEXT, capture_output=True, text=True)
            assert result.returncode == 0, result.stderr
            outputs.add(result.stdout)
        assert len(outputs) == 1
        json.loads(outputs.pop())  # and it is valid JSON


def test_controls_everywhere_in_replay_corpus():
    # companion check: the replay corpus above exercises random control sets;
    # make sure generation actually produces controls and anticontrols
    rng = np.random.default_rng(2026)
    saw_control = saw_anti = False
    for _ in range(50):
        n = int(rng.integers(1, 6))
        circuit = random_circuit(rng, n, int(rng.integers(1, 13)), CORE_KINDS)
        for layer in circuit.layers:
            for placement in layer.gates:
                for control in placement.controls:
                    saw_control = True
                    saw_anti = saw_anti or control.anti
    assert saw_control and saw_anti
