"""Dense state vector with matrix-free gate application and partial traces.

Amplitude index convention: wire j contributes bit value 2^j, so the amplitude
at index k belongs to the basis state whose printed bitstring is k in binary,
bottom wire left-most. No 2^n x 2^n matrix is ever materialized; every gate
costs O(2^n). No renormalization is performed anywhere: unitarity keeps the
norm, and drift beyond NORM_TOL is a reported error rather than something to
silently correct.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .circuit import MAX_WIRES, Control

NORM_TOL = 1e-9
UNITARITY_TOL = 1e-9


class NormDriftError(RuntimeError):
    """State vector norm drifted beyond NORM_TOL."""


@dataclass(frozen=True)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray  # complex128, length 2^num_qubits, read-only

    def __post_init__(self):
        if not 1 <= self.num_qubits <= MAX_WIRES:
            raise ValueError(f"num_qubits must be in [1, {MAX_WIRES}], got {self.num_qubits}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2 ** self.num_qubits,):
            raise ValueError(f"expected {2 ** self.num_qubits} amplitudes, got {amps.shape}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        if amps.flags.writeable:
            amps = amps.copy()  # never alias caller-owned storage
            amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def check_norm(self) -> None:
        drift = abs(self.norm_squared - 1.0)
        if drift > NORM_TOL:
            raise NormDriftError(f"squared norm off by {drift:.3e} (> {NORM_TOL})")

    def bitstring(self, index: int) -> str:
        return format(index, f"0{self.num_qubits}b")


def init_basis_state(n: int, bits: str) -> StateVector:
    """Basis state |bits>, written b_{n-1}...b_0 (bottom wire left-most)."""
    if not 1 <= n <= MAX_WIRES:
        raise ValueError(f"n must be in [1, {MAX_WIRES}], got {n}")
    if len(bits) != n or any(b not in "01" for b in bits):
        raise ValueError(f"bits must be a length-{n} bitstring, got {bits!r}")
    amps = np.zeros(2 ** n, dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return StateVector(n, amps)


def state_from_amplitudes(amplitudes: Iterable[complex]) -> StateVector:
    """Wrap an explicit amplitude list; length must be a power of two."""
    amps = np.asarray(list(amplitudes), dtype=np.complex128)
    n = int(amps.size).bit_length() - 1
    if amps.size != 2 ** n:
        raise ValueError(f"amplitude count {amps.size} is not a power of two")
    return StateVector(n, amps)


# -- control handling --------------------------------------------------------

def _check_wires(n: int, targets: tuple[int, ...], controls: tuple[Control, ...]) -> None:
    wires = list(targets) + [c.wire for c in controls]
    for w in wires:
        if not 0 <= w < n:
            raise ValueError(f"wire {w} out of range for {n} qubits")
    if len(set(wires)) != len(wires):
        raise ValueError(f"wire collision among targets {targets} and controls {controls}")


def control_mask(n: int, controls: tuple[Control, ...]) -> np.ndarray:
    """Boolean mask over all 2^n indices whose control bits match."""
    idx = np.arange(2 ** n)
    mask = np.ones(2 ** n, dtype=bool)
    for c in controls:
        bit = (idx >> c.wire) & 1
        mask &= (bit == 0) if c.anti else (bit == 1)
    return mask


def _require_unitary(matrix: np.ndarray) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    dev = np.abs(m.conj().T @ m - np.eye(2)).max()
    if dev > UNITARITY_TOL:
        raise ValueError(f"matrix is not unitary (deviation {dev:.3e})")
    return m


# -- gate application --------------------------------------------------------

def apply_single_qubit_gate(state: StateVector, matrix: np.ndarray, target: int,
                            controls: tuple[Control, ...] = ()) -> StateVector:
    """Qubit-wise multiplication: touch only index pairs differing in bit `target`."""
    n = state.num_qubits
    _check_wires(n, (target,), controls)
    m = _require_unitary(matrix)
    idx = np.arange(2 ** n)
    sel = (idx >> target) & 1 == 0
    if controls:
        sel &= control_mask(n, controls)
    lo = idx[sel]
    hi = lo | (1 << target)
    amps = state.amplitudes.copy()
    a, b = amps[lo], amps[hi]
    amps[lo] = m[0, 0] * a + m[0, 1] * b
    amps[hi] = m[1, 0] * a + m[1, 1] * b
    return StateVector(n, amps)


def apply_global_phase(state: StateVector, theta: float,
                       controls: tuple[Control, ...] = ()) -> StateVector:
    """Multiply every control-matching amplitude by e^{i theta}."""
    n = state.num_qubits
    _check_wires(n, (), controls)
    amps = state.amplitudes.copy()
    phase = np.exp(1j * theta)
    if controls:
        mask = control_mask(n, controls)
        amps[mask] *= phase
    else:
        amps *= phase
    return StateVector(n, amps)


def apply_swap(state: StateVector, i: int, j: int,
               controls: tuple[Control, ...] = ()) -> StateVector:
    """Exchange amplitudes of index pairs (..0_j..1_i.., ..1_j..0_i..)."""
    n = state.num_qubits
    if i == j:
        raise ValueError("SWAP needs two distinct wires")
    _check_wires(n, (i, j), controls)
    idx = np.arange(2 ** n)
    sel = ((idx >> i) & 1 == 1) & ((idx >> j) & 1 == 0)
    if controls:
        sel &= control_mask(n, controls)
    src = idx[sel]
    dst = src ^ ((1 << i) | (1 << j))
    amps = state.amplitudes.copy()
    tmp = amps[src].copy()
    amps[src] = amps[dst]
    amps[dst] = tmp
    return StateVector(n, amps)


# -- reduced density matrices -------------------------------------------------

@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-1 reduced state of one qubit (dim 2) or a pair (dim 4)."""
    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.complex128)
        if m.shape not in ((2, 2), (4, 4)):
            raise ValueError(f"density matrix must be 2x2 or 4x4, got {m.shape}")
        if m.flags.writeable:
            m = m.copy()
            m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    @property
    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)

    def validate(self, tol: float = 1e-9) -> None:
        m = self.entries
        if np.abs(m - m.conj().T).max() > tol:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > tol or abs(np.trace(m).imag) > tol:
            raise ValueError("density matrix trace is not 1")
        if np.linalg.eigvalsh(m).min() < -tol:
            raise ValueError("density matrix has a negative eigenvalue")


def _axis_of_wire(n: int, wire: int) -> int:
    # reshape([2]*n) puts the most significant bit (wire n-1) on axis 0
    return n - 1 - wire


def partial_trace_single(state: StateVector, q: int) -> DensityMatrix:
    """2x2 reduced state of wire q: rho_ab = sum_rest psi_a conj(psi_b)."""
    n = state.num_qubits
    if not 0 <= q < n:
        raise ValueError(f"wire {q} out of range for {n} qubits")
    tensor = state.amplitudes.reshape([2] * n)
    a = np.moveaxis(tensor, _axis_of_wire(n, q), 0).reshape(2, -1)
    rho = np.einsum("ar,br->ab", a, a.conj())
    return DensityMatrix(rho)


def partial_trace_pair(state: StateVector, q1: int, q2: int) -> DensityMatrix:
    """4x4 reduced state of wires {q1, q2}; row index = 2*bit(hi) + bit(lo)."""
    n = state.num_qubits
    if q1 == q2:
        raise ValueError("pair trace needs two distinct wires")
    for q in (q1, q2):
        if not 0 <= q < n:
            raise ValueError(f"wire {q} out of range for {n} qubits")
    lo, hi = sorted((q1, q2))
    tensor = state.amplitudes.reshape([2] * n)
    a = np.moveaxis(tensor, (_axis_of_wire(n, hi), _axis_of_wire(n, lo)), (0, 1)).reshape(4, -1)
    rho = np.einsum("ar,br->ab", a, a.conj())
    return DensityMatrix(rho)
