"""Dense state-vector backend for cross-validating the stabilizer engine.

States live on at most 16 qubits (65536 amplitudes). Qubit q (1-based)
maps to bit q-1 of the basis-state index, matching the bit packing used
everywhere else, so a classical codeword's int value is its basis index.

The phase convention is the same as :mod:`rmconv.pauli`: an operator is
``i^phase * prod_q X_q^{x_q} Z_q^{z_q}`` with X applied after Z on each
qubit (X to the left of Z).
"""

from __future__ import annotations

import numpy as np

from .codes import CssCode
from .pauli import PauliOperator

MAX_QUBITS = 16
NORM_TOL = 1e-10

_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
_T = np.array([[1.0, 0.0], [0.0, np.exp(1j * np.pi / 4)]], dtype=complex)
_T_DAGGER = _T.conj().T


class DenseState:
    """Normalized pure state on n <= 16 qubits."""

    __slots__ = ("n", "vec")

    def __init__(self, n: int, vec: np.ndarray) -> None:
        if n > MAX_QUBITS:
            raise ValueError(f"dense oracle is capped at {MAX_QUBITS} qubits")
        if vec.shape != (1 << n,):
            raise ValueError("amplitude count must be 2^n")
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm {norm})")
        self.n = n
        self.vec = vec.astype(complex)

    def copy(self) -> DenseState:
        return DenseState(self.n, self.vec.copy())


def _z_parity(dim: int, z_bits: int) -> np.ndarray:
    """Parity of (index & z_bits) for every basis index, vectorized per bit."""
    par = np.zeros(dim, dtype=np.uint8)
    idx = np.arange(dim, dtype=np.uint32)
    b = z_bits
    while b:
        low = b & -b
        par ^= ((idx >> np.uint32(low.bit_length() - 1)) & 1).astype(np.uint8)
        b ^= low
    return par


def apply_pauli(state: DenseState, P: PauliOperator) -> DenseState:
    """Apply i^phase X^x Z^z: a Z-dependent phase then an index XOR."""
    if P.n != state.n:
        raise ValueError("qubit count mismatch")
    dim = 1 << state.n
    amps = state.vec
    if P.z.bits:
        amps = amps * np.where(_z_parity(dim, P.z.bits), -1.0, 1.0)
    if P.x.bits:
        amps = amps[np.arange(dim) ^ P.x.bits]
    if P.phase:
        amps = amps * (1j**P.phase)
    return DenseState(state.n, amps)


def project(state: DenseState, P: PauliOperator, outcome: int) -> tuple[DenseState, float]:
    """Apply (I + (-1)^outcome P)/2 and renormalize; returns (state, prob)."""
    moved = apply_pauli(state, P)
    sign = 1.0 if outcome == 0 else -1.0
    vec = (state.vec + sign * moved.vec) / 2.0
    prob = float(np.vdot(vec, vec).real)
    if prob < 1e-12:
        raise ValueError("projection onto a zero-probability branch")
    return DenseState(state.n, vec / np.sqrt(prob)), prob


def expectation(state: DenseState, P: PauliOperator) -> float:
    return float(np.vdot(state.vec, apply_pauli(state, P).vec).real)


def _apply_single(vec: np.ndarray, n: int, qubit0: int, gate: np.ndarray) -> np.ndarray:
    shaped = vec.reshape(1 << (n - qubit0 - 1), 2, 1 << qubit0)
    return np.einsum("ab,ibj->iaj", gate, shaped).reshape(-1)


def apply_transversal(state: DenseState, gate: np.ndarray) -> DenseState:
    """Apply one single-qubit gate to every qubit."""
    vec = state.vec
    for q in range(state.n):
        vec = _apply_single(vec, state.n, q, gate)
    return DenseState(state.n, vec)


def transversal_h(state: DenseState) -> DenseState:
    return apply_transversal(state, _H)


def transversal_t(state: DenseState) -> DenseState:
    return apply_transversal(state, _T)


def fidelity(a: DenseState, b: DenseState) -> float:
    """|<a|b>|^2; global phase drops out."""
    return float(abs(np.vdot(a.vec, b.vec)) ** 2)


def dense_encode(alpha: complex, beta: complex, code: CssCode) -> DenseState:
    """Encode alpha|0> + beta|1> into a CSS code's codespace.

    The logical zero is the uniform superposition of the classical span of
    the X-check supports; the logical one is its image under the code's
    logical X. Requires |alpha|^2 + |beta|^2 = 1 and n <= 16.
    """
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > NORM_TOL:
        raise ValueError("amplitudes must be normalized")
    if code.n > MAX_QUBITS:
        raise ValueError(f"dense oracle is capped at {MAX_QUBITS} qubits")
    words = [0]
    for stab in code.x_stabs:
        words += [w ^ stab.x.bits for w in words]
    vec = np.zeros(1 << code.n, dtype=complex)
    scale = 1.0 / np.sqrt(len(words))
    lx = code.logical_x.x.bits
    for w in words:
        vec[w] += alpha * scale
        vec[w ^ lx] += beta * scale
    return DenseState(code.n, vec)
