"""Punctured order-one Reed-Muller quantum codes and their relatives.

Builds, for any m >= 3:

* ``generator_matrix(m)`` -- the m x (2^m - 1) generator matrix G(1,m) of
  the punctured first-order Reed-Muller code, defined recursively from the
  explicit 3 x 7 base case,
* ``h_tilde(m)`` -- the complementary parity-check block H(1,m) whose rows,
  together with G(1,m), span the code's dual,
* ``rm_code(m)`` -- the [[2^m - 1, 1, 3]] CSS code (m = 3 is the Steane
  code, m = 4 the 15-qubit code),
* ``extended_code(m)`` -- the (2^{m+1} - 1)-qubit code obtained by
  adjoining a cat-like ancilla block to rm_code(m); it shares a subsystem
  code with rm_code(m+1),
* ``subsystem_spec(m)`` -- that common subsystem code: shared stabilizers
  plus the gauge generators distinguishing the two codes.

Row and qubit labels in origin strings are 1-based to match reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import BitMatrix, BitVector
from .pauli import PauliOperator


@lru_cache(maxsize=None)
def generator_matrix(m: int) -> BitMatrix:
    """Generator matrix G(1,m), shape m x (2^m - 1)."""
    if m < 3:
        raise ValueError("m must be >= 3")
    if m == 3:
        return BitMatrix.from_strings(["1010101", "0110011", "0001111"])
    prev = generator_matrix(m - 1)
    half = 1 << (m - 1)  # previous block size 2^{m-1}
    cols = (1 << m) - 1
    data = [r | (r << half) for r in prev.data]
    data.append(((1 << half) - 1) << (half - 1))  # 0^{half-1} | 1 | 1^{half-1}
    return BitMatrix(m, cols, data)


def _quad_row(cols: int, x: int, y: int, shift: int) -> int:
    """Weight-4 row with 1-based positions x, y, x+shift, y+shift."""
    return (1 << (x - 1)) | (1 << (y - 1)) | (1 << (x + shift - 1)) | (1 << (y + shift - 1))


@lru_cache(maxsize=None)
def _h_rows(m: int) -> tuple[int, ...]:
    # H(1,3) is empty: the Steane code's Z checks are exactly G(1,3).
    if m == 3:
        return ()
    half = 1 << (m - 1)
    cols = (1 << m) - 1
    rows = [_quad_row(cols, 1, 3, half), _quad_row(cols, 2, 3, half)]
    for k in range(3, m):
        rows.append(_quad_row(cols, 3, 3 + (1 << (k - 1)), half))
    prev_g = generator_matrix(m - 1)
    rows.extend(prev_g.data)  # G(1,m-1) | 0
    prev_h = _h_rows(m - 1)
    rows.extend(prev_h)  # H(1,m-1) | 0
    rows.extend(r << half for r in prev_h)  # 0 | H(1,m-1)
    return tuple(rows)


def h_tilde(m: int) -> BitMatrix:
    """Complement block H(1,m), shape (2^m - 2m - 2) x (2^m - 1)."""
    if m < 4:
        raise ValueError("m must be >= 4")
    return BitMatrix(len(_h_rows(m)), (1 << m) - 1, list(_h_rows(m)))


@dataclass(frozen=True)
class CssCode:
    """A CSS stabilizer code encoding one logical qubit.

    ``x_origins`` / ``z_origins`` name each generator's source matrix row,
    e.g. "G(1,4)_2" or "[G(1,3)|0]_1", for rendering and reports.
    """

    label: str
    n: int
    m: int
    x_stabs: tuple[PauliOperator, ...]
    z_stabs: tuple[PauliOperator, ...]
    x_origins: tuple[str, ...]
    z_origins: tuple[str, ...]
    logical_x: PauliOperator
    logical_z: PauliOperator

    @property
    def stabilizers(self) -> tuple[PauliOperator, ...]:
        return self.x_stabs + self.z_stabs

    @property
    def origins(self) -> tuple[str, ...]:
        return self.x_origins + self.z_origins

    def validate(self) -> None:
        """Check the code's structural invariants; raises AssertionError."""
        from .gf2 import BitMatrix as _BM
        from .gf2 import rank as _rank
        from .gf2 import solve as _solve

        gens = self.stabilizers
        assert len(gens) == self.n - 1, "need n-1 generators for one logical qubit"
        for i, g in enumerate(gens):
            for h in gens[i + 1 :]:
                assert g.commutes(h), f"non-commuting generators {g} / {h}"
        assert self.logical_x.anticommutes(self.logical_z)
        for g in gens:
            assert self.logical_x.commutes(g) and self.logical_z.commutes(g)
        # Independence: full symplectic rank.
        sym = _BM.from_rows(
            2 * self.n, [g.x.bits | (g.z.bits << self.n) for g in gens]
        )
        assert _rank(sym) == self.n - 1, "dependent generator set"
        # Logical operators must lie outside the stabilizer group.
        for logical in (self.logical_x, self.logical_z):
            lsym = BitVector(2 * self.n, logical.x.bits | (logical.z.bits << self.n))
            assert _solve(sym, lsym) is None, "logical operator is a stabilizer"


def _xop(row: int, n: int) -> PauliOperator:
    return PauliOperator.from_row(BitVector(n, row), "X")


def _zop(row: int, n: int) -> PauliOperator:
    return PauliOperator.from_row(BitVector(n, row), "Z")


@lru_cache(maxsize=None)
def rm_code(m: int) -> CssCode:
    """The [[2^m - 1, 1, 3]] code with X checks G(1,m) and Z checks G;H."""
    if m < 3:
        raise ValueError("m must be >= 3")
    n = (1 << m) - 1
    g = generator_matrix(m)
    h = _h_rows(m)
    x_stabs = tuple(_xop(r, n) for r in g.data)
    x_origins = tuple(f"G(1,{m})_{i + 1}" for i in range(m))
    z_stabs = tuple(_zop(r, n) for r in g.data) + tuple(_zop(r, n) for r in h)
    z_origins = tuple(f"G(1,{m})_{i + 1}" for i in range(m)) + tuple(
        f"H(1,{m})_{i + 1}" for i in range(len(h))
    )
    ones = (1 << n) - 1
    return CssCode(
        label=f"RM(1,{m})",
        n=n,
        m=m,
        x_stabs=x_stabs,
        z_stabs=z_stabs,
        x_origins=x_origins,
        z_origins=z_origins,
        logical_x=_xop(ones, n),
        logical_z=_zop(ones, n),
    )


@lru_cache(maxsize=None)
def extended_code(m: int) -> CssCode:
    """rm_code(m) entangled with a 2^m-qubit cat-like block.

    Lives on 2^{m+1} - 1 qubits: the rm_code(m) block, one interconnect
    qubit, and a second rm_code(m) block. The logical qubit stays on the
    first block, so the logical operators are rm_code(m)'s, padded.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    n = (1 << (m + 1)) - 1
    half = 1 << m
    g_m = generator_matrix(m)
    g_next = generator_matrix(m + 1)
    h_m = _h_rows(m)
    x_rows = list(g_m.data) + list(g_next.data)
    x_origins = [f"[G(1,{m})|0]_{i + 1}" for i in range(m)] + [
        f"G(1,{m + 1})_{i + 1}" for i in range(m + 1)
    ]
    z_rows = list(g_m.data) + list(g_next.data)
    z_origins = [f"[G(1,{m})|0]_{i + 1}" for i in range(m)] + [
        f"G(1,{m + 1})_{i + 1}" for i in range(m + 1)
    ]
    z_rows += list(h_m) + [r << half for r in h_m]
    z_origins += [f"[H(1,{m})|0]_{i + 1}" for i in range(len(h_m))] + [
        f"[0|H(1,{m})]_{i + 1}" for i in range(len(h_m))
    ]
    ones_first = (1 << (half - 1)) - 1
    return CssCode(
        label=f"extended RM(1,{m})",
        n=n,
        m=m,
        x_stabs=tuple(_xop(r, n) for r in x_rows),
        z_stabs=tuple(_zop(r, n) for r in z_rows),
        x_origins=tuple(x_origins),
        z_origins=tuple(z_origins),
        logical_x=_xop(ones_first, n),
        logical_z=_zop(ones_first, n),
    )


@dataclass(frozen=True)
class SubsystemSpec:
    """Shared subsystem code for rm_code(m+1) and extended_code(m).

    ``stabilizers`` generate the common stabilizer group; fixing the listed
    ``gauge_generators`` to +1 selects one of the two codes.
    """

    m: int
    stabilizers: tuple[PauliOperator, ...]
    stab_origins: tuple[str, ...]
    gauge_generators: tuple[PauliOperator, ...]
    gauge_origins: tuple[str, ...]

    def validate(self) -> None:
        for g in self.gauge_generators:
            for s in self.stabilizers:
                assert g.commutes(s), f"gauge {g} disturbs stabilizer {s}"


@lru_cache(maxsize=None)
def subsystem_spec(m: int) -> SubsystemSpec:
    if m < 3:
        raise ValueError("m must be >= 3")
    n = (1 << (m + 1)) - 1
    half = 1 << m
    g_m = generator_matrix(m)
    g_next = generator_matrix(m + 1)
    h_m = _h_rows(m)
    h_next = _h_rows(m + 1)

    stabs: list[PauliOperator] = []
    origins: list[str] = []
    for i, r in enumerate(g_next.data):
        stabs.append(_xop(r, n))
        origins.append(f"G(1,{m + 1})_{i + 1}")
    for i, r in enumerate(g_next.data):
        stabs.append(_zop(r, n))
        origins.append(f"G(1,{m + 1})_{i + 1}")
    for i, r in enumerate(g_m.data):
        stabs.append(_zop(r, n))
        origins.append(f"[G(1,{m})|0]_{i + 1}")
    for i, r in enumerate(h_m):
        stabs.append(_zop(r, n))
        origins.append(f"[H(1,{m})|0]_{i + 1}")
    for i, r in enumerate(h_m):
        stabs.append(_zop(r << half, n))
        origins.append(f"[0|H(1,{m})]_{i + 1}")

    gauge: list[PauliOperator] = []
    gauge_origins: list[str] = []
    for i, r in enumerate(g_m.data):
        gauge.append(_xop(r, n))
        gauge_origins.append(f"[G(1,{m})|0]_{i + 1}")
    for i in range(m):
        gauge.append(_zop(h_next[i], n))
        gauge_origins.append(f"H(1,{m + 1})_{i + 1}")

    return SubsystemSpec(
        m=m,
        stabilizers=tuple(stabs),
        stab_origins=tuple(origins),
        gauge_generators=tuple(gauge),
        gauge_origins=tuple(gauge_origins),
    )
