"""Symplectic n-qubit Pauli operators with i-exponent phase tracking.

A ``PauliOperator`` represents ``i^phase * prod_q X_q^{x_q} Z_q^{z_q}``
with the X factor written to the left of the Z factor on every qubit.
Under this convention the single-qubit Y is ``x = z = 1`` with phase 1
(``Y = i X Z``), and an operator is Hermitian iff ``phase`` and the number
of qubits carrying both an X and a Z part have the same parity.

Qubit indices are 0-based internally; the text rendering and parser use
the 1-based labels that the rest of the package reports.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

from .gf2 import BitVector

_LABEL_RE = re.compile(r"([XYZ])(\d+)$")


class PauliOperator:
    """n-qubit Pauli in (x-bits, z-bits, phase) form."""

    __slots__ = ("n", "x", "z", "phase")

    def __init__(self, n: int, x: BitVector, z: BitVector, phase: int = 0) -> None:
        if len(x) != n or len(z) != n:
            raise ValueError("x/z length must equal qubit count")
        self.n = n
        self.x = x
        self.z = z
        self.phase = phase % 4

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n, BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def from_row(cls, row: BitVector, kind: str) -> PauliOperator:
        """Lift a matrix row to a pure X-type or Z-type operator."""
        if kind == "X":
            return cls(row.n, row, BitVector.zeros(row.n))
        if kind == "Z":
            return cls(row.n, BitVector.zeros(row.n), row)
        raise ValueError(f"kind must be 'X' or 'Z', got {kind!r}")

    @classmethod
    def from_qubits(
        cls, n: int, xs: Iterable[int] = (), zs: Iterable[int] = ()
    ) -> PauliOperator:
        """Build from 0-based qubit indices carrying X and/or Z parts.

        A qubit listed in both gets a Y, contributing phase 1 apiece.
        """
        x = BitVector.from_support(n, xs)
        z = BitVector.from_support(n, zs)
        return cls(n, x, z, (x.bits & z.bits).bit_count())

    @classmethod
    def from_text(cls, n: int, text: str) -> PauliOperator:
        """Parse 1-based labels like "X12 X13" or "Y2"; "I" is identity."""
        text = text.strip()
        if text in ("", "I"):
            return cls.identity(n)
        xs, zs = [], []
        for token in text.split():
            m = _LABEL_RE.match(token)
            if not m:
                raise ValueError(f"bad Pauli token {token!r}")
            letter, qubit = m.group(1), int(m.group(2))
            if not 1 <= qubit <= n:
                raise ValueError(f"qubit {qubit} out of range 1..{n}")
            if letter in ("X", "Y"):
                xs.append(qubit - 1)
            if letter in ("Z", "Y"):
                zs.append(qubit - 1)
        return cls.from_qubits(n, xs, zs)

    # -- algebra ---------------------------------------------------------

    def commutes(self, other: PauliOperator) -> bool:
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        a = (self.x.bits & other.z.bits).bit_count()
        b = (self.z.bits & other.x.bits).bit_count()
        return ((a + b) & 1) == 0

    def anticommutes(self, other: PauliOperator) -> bool:
        return not self.commutes(other)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        # Moving other's X factor past self's Z factor costs (-1) per overlap.
        phase = self.phase + other.phase + 2 * ((self.z.bits & other.x.bits).bit_count() & 1)
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z, phase)

    @property
    def weight(self) -> int:
        return (self.x.bits | self.z.bits).bit_count()

    def is_identity(self) -> bool:
        return self.x.bits == 0 and self.z.bits == 0

    def support(self) -> list[int]:
        return BitVector(self.n, self.x.bits | self.z.bits).support()

    def is_hermitian(self) -> bool:
        y_count = (self.x.bits & self.z.bits).bit_count()
        return (self.phase - y_count) % 2 == 0

    def sign(self) -> int:
        """+1 or -1 relative to the canonical positive Hermitian form."""
        y_count = (self.x.bits & self.z.bits).bit_count()
        rel = (self.phase - y_count) % 4
        if rel == 0:
            return 1
        if rel == 2:
            return -1
        raise ValueError("operator is not Hermitian")

    def base(self) -> PauliOperator:
        """Canonical positive form: same x/z with phase = (#Y) mod 4."""
        y_count = (self.x.bits & self.z.bits).bit_count()
        return PauliOperator(self.n, self.x, self.z, y_count)

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        y_count = (self.x.bits & self.z.bits).bit_count()
        rel = (self.phase - y_count) % 4
        prefix = {0: "", 1: "i ", 2: "-", 3: "-i "}[rel]
        if self.is_identity():
            return prefix + "I" if prefix else "I"
        parts = []
        for q in self.support():
            xb = (self.x.bits >> q) & 1
            zb = (self.z.bits >> q) & 1
            letter = "Y" if xb and zb else ("X" if xb else "Z")
            parts.append(f"{letter}{q + 1}")
        return prefix + " ".join(parts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PauliOperator)
            and self.n == other.n
            and self.x == other.x
            and self.z == other.z
            and self.phase == other.phase
        )

    def __hash__(self) -> int:
        return hash((self.n, self.x, self.z, self.phase))

    def __repr__(self) -> str:
        return f"PauliOperator({self!s}, n={self.n})"
