"""Per-qubit and per-pair statistics feeding the half-matrix view.

Correlation is the Pearson correlation of +/-1-valued computational-basis
outcomes (z = 1 - 2*bit). Concurrence uses the Wootters spin-flip
construction. Linear entropies are normalized to [0, 1]: factor 2 for one
qubit, 4/3 for a pair, so a maximally mixed state scores 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .statevector import DensityMatrix, StateVector, partial_trace_pair, partial_trace_single

PHASE_EPS = 1e-9
_SIGMA_EPS = 1e-12

# Y (x) Y is real: it flips both bits and signs the odd-parity couplings
_YY = np.array([
    [0, 0, 0, -1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
], dtype=complex)


@dataclass(frozen=True)
class QubitStats:
    prob_one: float
    phase: float | None  # None when the off-diagonal vanishes
    purity: float
    linear_entropy: float
    von_neumann_entropy: float  # bits


@dataclass(frozen=True)
class PairStats:
    correlation: float
    concurrence: float
    linear_entropy: float
    von_neumann_entropy: float  # bits


@dataclass(frozen=True)
class PairCell:
    i: int
    j: int
    stats: PairStats


@dataclass(frozen=True)
class HalfMatrix:
    n: int
    cells: tuple[PairCell, ...]  # one per unordered pair, (i, j) ascending

    def cell(self, i: int, j: int) -> PairStats:
        i, j = min(i, j), max(i, j)
        for c in self.cells:
            if (c.i, c.j) == (i, j):
                return c.stats
        raise KeyError((i, j))


def _eigvals_2x2(rho: np.ndarray) -> np.ndarray:
    mean = (rho[0, 0].real + rho[1, 1].real) / 2
    half_gap = (rho[0, 0].real - rho[1, 1].real) / 2
    r = math.sqrt(half_gap * half_gap + abs(rho[0, 1]) ** 2)
    return np.array([mean - r, mean + r])


def _entropy_bits(eigenvalues: np.ndarray) -> float:
    total = 0.0
    for lam in eigenvalues:
        if lam > 0:
            total -= lam * math.log2(lam)
    return total


def qubit_stats(rho: DensityMatrix) -> QubitStats:
    if rho.dim != 2:
        raise ValueError("qubit_stats needs a 2x2 density matrix")
    rho.validate()
    m = rho.entries
    off = m[1, 0]
    phase = float(np.angle(off)) if abs(off) > PHASE_EPS else None
    purity = rho.purity
    eigenvalues = np.clip(_eigvals_2x2(m), 0.0, None)
    return QubitStats(
        prob_one=float(m[1, 1].real),
        phase=phase,
        purity=purity,
        linear_entropy=2.0 * (1.0 - purity),
        von_neumann_entropy=_entropy_bits(eigenvalues),
    )


def correlation(rho: DensityMatrix) -> float:
    """Pearson correlation of the two qubits' +/-1 outcomes; 0 if degenerate."""
    if rho.dim != 4:
        raise ValueError("correlation needs a 4x4 density matrix")
    rho.validate()
    p = rho.entries.diagonal().real
    z_lo = 1.0 - 2.0 * (np.arange(4) & 1)
    z_hi = 1.0 - 2.0 * ((np.arange(4) >> 1) & 1)
    e_lo = float(p @ z_lo)
    e_hi = float(p @ z_hi)
    e_both = float(p @ (z_lo * z_hi))
    var = (1.0 - e_lo * e_lo) * (1.0 - e_hi * e_hi)
    if var < _SIGMA_EPS ** 2:
        return 0.0
    return (e_both - e_lo * e_hi) / math.sqrt(var)


def concurrence(rho: DensityMatrix) -> float:
    """Wootters: C = max(0, l1 - l2 - l3 - l4), l_k from eigvals of rho*rho~."""
    if rho.dim != 4:
        raise ValueError("concurrence needs a 4x4 density matrix")
    rho.validate()
    m = rho.entries
    rho_tilde = _YY @ m.conj() @ _YY
    eigenvalues = np.linalg.eigvals(m @ rho_tilde).real
    lams = np.sort(np.sqrt(np.clip(eigenvalues, 0.0, None)))[::-1]
    return max(0.0, float(lams[0] - lams[1] - lams[2] - lams[3]))


def pair_stats(rho: DensityMatrix) -> PairStats:
    purity = rho.purity
    eigenvalues = np.clip(np.linalg.eigvalsh(rho.entries), 0.0, None)
    return PairStats(
        correlation=correlation(rho),
        concurrence=concurrence(rho),
        linear_entropy=(4.0 / 3.0) * (1.0 - purity),
        von_neumann_entropy=_entropy_bits(eigenvalues),
    )


def half_matrix(state: StateVector) -> HalfMatrix:
    """One PairStats cell per unordered qubit pair of the state."""
    n = state.num_qubits
    if n < 2:
        raise ValueError("the half-matrix needs at least 2 qubits")
    cells = []
    for i in range(n):
        for j in range(i + 1, n):
            cells.append(PairCell(i, j, pair_stats(partial_trace_pair(state, i, j))))
    return HalfMatrix(n, tuple(cells))


def qubit_stats_all(state: StateVector) -> list[QubitStats]:
    return [qubit_stats(partial_trace_single(state, q)) for q in range(state.num_qubits)]


def bar_length(p: float, mode: str, decades: int = 6) -> float:
    """Displayed bar length in [0, 1] for a probability p."""
    if decades < 1:
        raise ValueError("decades must be a positive integer")
    p = min(max(float(p), 0.0), 1.0)
    if mode == "probability":
        return p
    if mode == "magnitude":
        return math.sqrt(p)
    if mode == "log":
        if p == 0.0:
            return 0.0
        return max(0.0, 1.0 + math.log10(p) / decades)
    raise ValueError(f"unknown bar mode {mode!r}")
