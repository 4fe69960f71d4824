import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcdiff import (
    Control,
    DensityMatrix,
    GateKind,
    apply_single_qubit_gate,
    bar_length,
    concurrence,
    correlation,
    gate_matrix,
    half_matrix,
    init_basis_state,
    partial_trace_pair,
    partial_trace_single,
    qubit_stats,
    state_from_amplitudes,
)
from oracles import pure_pair_concurrence
from sample_circuits import partially_entangled_state

H = gate_matrix(GateKind.H)
X = gate_matrix(GateKind.X)


def bell_pair_rdm():
    s = init_basis_state(2, "00")
    s = apply_single_qubit_gate(s, H, 0)
    s = apply_single_qubit_gate(s, X, 1, (Control(0),))
    return partial_trace_pair(s, 0, 1)


def ghz_state(n):
    s = init_basis_state(n, "0" * n)
    s = apply_single_qubit_gate(s, H, 0)
    for t in range(1, n):
        s = apply_single_qubit_gate(s, X, t, (Control(0),))
    return s


def random_pure_state(rng, n):
    amps = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
    return state_from_amplitudes(amps / np.linalg.norm(amps))


class TestQubitStats:
    def test_pure_one(self):
        stats = qubit_stats(partial_trace_single(init_basis_state(2, "01"), 0))
        assert stats.prob_one == pytest.approx(1.0, abs=1e-12)
        assert stats.purity == pytest.approx(1.0, abs=1e-12)
        assert stats.linear_entropy == pytest.approx(0.0, abs=1e-12)
        assert stats.von_neumann_entropy == pytest.approx(0.0, abs=1e-12)
        assert stats.phase is None

    def test_maximally_mixed(self):
        stats = qubit_stats(DensityMatrix(np.eye(2) / 2))
        assert stats.purity == pytest.approx(0.5, abs=1e-12)
        assert stats.linear_entropy == pytest.approx(1.0, abs=1e-12)
        assert stats.von_neumann_entropy == pytest.approx(1.0, abs=1e-12)

    def test_relative_phase_of_plus_state_variant(self):
        amps = np.array([1, np.exp(1j * np.pi / 4)]) / np.sqrt(2)
        stats = qubit_stats(partial_trace_single(state_from_amplitudes(amps), 0))
        assert stats.phase == pytest.approx(np.pi / 4, abs=1e-12)

    def test_phase_undefined_for_diagonal_state(self):
        stats = qubit_stats(DensityMatrix(np.diag([0.25, 0.75])))
        assert stats.phase is None

    def test_rejects_invalid_density_matrix(self):
        with pytest.raises(ValueError):
            qubit_stats(DensityMatrix(np.diag([0.9, 0.9])))

    def test_entropy_zero_iff_pure(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            state = random_pure_state(rng, 3)
            stats = qubit_stats(partial_trace_single(state, int(rng.integers(3))))
            assert (stats.von_neumann_entropy < 1e-9) == (abs(stats.purity - 1) < 1e-9)


class TestCorrelation:
    def test_bell_pair_is_plus_one(self):
        assert correlation(bell_pair_rdm()) == pytest.approx(1.0, abs=1e-12)

    def test_product_state_is_zero(self):
        s = init_basis_state(2, "00")
        s = apply_single_qubit_gate(s, H, 0)
        s = apply_single_qubit_gate(s, H, 1)
        assert correlation(partial_trace_pair(s, 0, 1)) == pytest.approx(0.0, abs=1e-12)

    def test_degenerate_distribution_returns_zero(self):
        assert correlation(partial_trace_pair(init_basis_state(2, "00"), 0, 1)) == 0.0

    def test_reference_state_pairs(self):
        s = partially_entangled_state()
        assert correlation(partial_trace_pair(s, 0, 1)) == pytest.approx(1.0, abs=1e-9)
        assert correlation(partial_trace_pair(s, 2, 3)) == pytest.approx(-1.0, abs=1e-9)
        assert correlation(partial_trace_pair(s, 1, 2)) == pytest.approx(0.707, abs=1e-3)

    def test_symmetric_in_pair_order(self):
        rng = np.random.default_rng(32)
        state = random_pure_state(rng, 4)
        a = correlation(partial_trace_pair(state, 1, 3))
        b = correlation(partial_trace_pair(state, 3, 1))
        assert a == b

    def test_range(self):
        rng = np.random.default_rng(33)
        for _ in range(25):
            state = random_pure_state(rng, 3)
            c = correlation(partial_trace_pair(state, 0, 2))
            assert -1 - 1e-9 <= c <= 1 + 1e-9


class TestConcurrence:
    def test_bell_pair_is_one(self):
        rho = bell_pair_rdm()
        assert concurrence(rho) == pytest.approx(1.0, abs=1e-9)

    def test_product_state_is_zero(self):
        s = init_basis_state(2, "00")
        s = apply_single_qubit_gate(s, H, 1)
        assert concurrence(partial_trace_pair(s, 0, 1)) == pytest.approx(0.0, abs=1e-9)

    def test_matches_pure_state_formula(self):
        # sqrt of near-zero eigenvalues costs ~sqrt(eps), so expect ~1e-8
        rng = np.random.default_rng(34)
        for _ in range(50):
            amps = rng.normal(size=4) + 1j * rng.normal(size=4)
            amps /= np.linalg.norm(amps)
            state = state_from_amplitudes(amps)
            got = concurrence(partial_trace_pair(state, 0, 1))
            assert got == pytest.approx(pure_pair_concurrence(amps), abs=1e-6)

    def test_reference_state_pairs(self):
        s = partially_entangled_state()
        assert concurrence(partial_trace_pair(s, 0, 1)) == pytest.approx(0.707, abs=1e-3)
        assert concurrence(partial_trace_pair(s, 2, 3)) == pytest.approx(0.707, abs=1e-3)
        assert concurrence(partial_trace_pair(s, 1, 2)) == pytest.approx(0.0, abs=1e-3)

    def test_range_and_symmetry(self):
        rng = np.random.default_rng(35)
        for _ in range(25):
            state = random_pure_state(rng, 4)
            a = concurrence(partial_trace_pair(state, 0, 3))
            b = concurrence(partial_trace_pair(state, 3, 0))
            assert 0.0 <= a <= 1 + 1e-9
            assert a == b


class TestHalfMatrix:
    def test_two_qubit_product_state(self):
        s = init_basis_state(2, "00")
        s = apply_single_qubit_gate(s, H, 0)
        hm = half_matrix(s)
        assert len(hm.cells) == 1
        cell = hm.cell(0, 1)
        assert cell.concurrence == pytest.approx(0.0, abs=1e-9)
        assert cell.correlation == pytest.approx(0.0, abs=1e-12)
        assert cell.von_neumann_entropy == pytest.approx(0.0, abs=1e-9)

    def test_ghz4_cells_all_correlated_but_pairwise_unentangled(self):
        hm = half_matrix(ghz_state(4))
        assert len(hm.cells) == 6
        for cell in hm.cells:
            assert cell.stats.correlation == pytest.approx(1.0, abs=1e-9)
            assert cell.stats.concurrence == pytest.approx(0.0, abs=1e-9)
            # two-outcome mixture: one bit of pair entropy
            assert cell.stats.von_neumann_entropy == pytest.approx(1.0, abs=1e-9)

    def test_pair_linear_entropy_normalization(self):
        # maximally mixed pair state scores exactly 1
        from qcdiff.analytics import pair_stats
        stats = pair_stats(DensityMatrix(np.eye(4) / 4))
        assert stats.linear_entropy == pytest.approx(1.0, abs=1e-12)
        assert stats.von_neumann_entropy == pytest.approx(2.0, abs=1e-12)

    def test_needs_at_least_two_qubits(self):
        with pytest.raises(ValueError):
            half_matrix(init_basis_state(1, "0"))

    def test_pure_product_states_have_no_pair_entropy(self):
        rng = np.random.default_rng(36)
        single = [random_pure_state(rng, 1).amplitudes for _ in range(3)]
        amps = np.kron(np.kron(single[2], single[1]), single[0])
        hm = half_matrix(state_from_amplitudes(amps))
        for cell in hm.cells:
            assert cell.stats.concurrence == pytest.approx(0.0, abs=1e-9)
            assert cell.stats.von_neumann_entropy == pytest.approx(0.0, abs=1e-9)


class TestBarLength:
    def test_probability_mode_is_identity(self):
        assert bar_length(0.25, "probability") == 0.25

    def test_magnitude_mode_is_square_root(self):
        assert bar_length(0.25, "magnitude") == 0.5

    def test_log_mode_midpoint(self):
        assert bar_length(1e-3, "log", decades=6) == pytest.approx(0.5, abs=1e-12)

    def test_log_mode_at_zero(self):
        assert bar_length(0.0, "log") == 0.0

    def test_log_mode_clamps_below_visible_range(self):
        assert bar_length(1e-9, "log", decades=6) == 0.0

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            bar_length(0.5, "linear")

    def test_rejects_bad_decades(self):
        with pytest.raises(ValueError):
            bar_length(0.5, "log", decades=0)

    @given(st.floats(min_value=0, max_value=1), st.floats(min_value=0, max_value=1),
           st.sampled_from(["probability", "magnitude", "log"]))
    @settings(max_examples=200, deadline=None)
    def test_monotonic_in_probability(self, p, q, mode):
        lo, hi = sorted((p, q))
        assert bar_length(lo, mode) <= bar_length(hi, mode)
        assert 0.0 <= bar_length(p, mode) <= 1.0
