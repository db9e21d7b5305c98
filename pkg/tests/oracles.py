"""Independent reference implementations used to freeze expected values.

Everything here is deliberately written against numpy arrays and dense
matrices rather than the package's bit-packed types, so the tests check
two unrelated code paths against each other.
"""

from __future__ import annotations

import numpy as np


def to_array(rows: list[int], cols: int) -> np.ndarray:
    return np.array(
        [[(r >> c) & 1 for c in range(cols)] for r in rows], dtype=np.int64
    )


def np_rank_gf2(a: np.ndarray) -> int:
    """Row rank over GF(2) by dense elimination."""
    a = a.copy() % 2
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if a[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        a[[r, pivot]] = a[[pivot, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def np_matmul_t_gf2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a @ b.T) % 2


def np_in_rowspace(a: np.ndarray, v: np.ndarray) -> bool:
    stacked = np.vstack([a, v.reshape(1, -1)])
    return np_rank_gf2(stacked) == np_rank_gf2(a)


_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def pauli_matrix(n: int, x_bits: int, z_bits: int, phase: int) -> np.ndarray:
    """Dense matrix of i^phase * prod_q X^x Z^z, qubit 1 least significant."""
    mat = np.array([[1.0 + 0j]])
    for q in range(n):
        factor = _I2
        if (x_bits >> q) & 1:
            factor = _X
        if (z_bits >> q) & 1:
            factor = factor @ _Z
        mat = np.kron(factor, mat)
    return (1j**phase) * mat


def op_matrix(op) -> np.ndarray:
    return pauli_matrix(op.n, op.x.bits, op.z.bits, op.phase)


def enumerate_rowspace(rows: list[int]) -> set[int]:
    """All GF(2) combinations of the given packed rows."""
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return words
