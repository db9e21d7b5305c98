"""Symbolic stabilizer-state simulation with signed generator frames.

A frame holds n-1 signed stabilizer generators plus a tracked signed
logical pair, so it represents one encoded qubit with symbolic (never
numeric) logical amplitudes. Pauli errors flip generator signs; ideal
projective Pauli measurements either read a deterministic outcome off the
signed group or collapse along a supplied branch bit. Exhaustive branch
enumeration replaces sampling wherever outcomes are random.

Internally a Pauli's symplectic part is packed as ``x | (z << n)`` so the
hot loops are plain int arithmetic; signs are kept separately from the
canonical positive operators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .codes import CssCode, extended_code
from .gf2 import BitVector
from .pauli import PauliOperator


class EngineError(Exception):
    """Raised for measurements or updates a frame cannot support."""


@dataclass(frozen=True)
class MeasurementResult:
    outcome: int
    deterministic: bool


def _sym(op: PauliOperator) -> int:
    return op.x.bits | (op.z.bits << op.n)


def _op_from_sym(sym: int, n: int, mask: int) -> PauliOperator:
    x = sym & mask
    z = sym >> n
    return PauliOperator(n, BitVector(n, x), BitVector(n, z), (x & z).bit_count())


def _anticommute(a: int, b: int, n: int, mask: int) -> int:
    ax, az = a & mask, a >> n
    bx, bz = b & mask, b >> n
    return ((ax & bz).bit_count() + (az & bx).bit_count()) & 1


def _mul_signed(a: int, a_sign: int, b: int, b_sign: int, n: int, mask: int) -> tuple[int, int]:
    """Multiply signed canonical-positive Paulis; returns (sym, sign)."""
    ax, az = a & mask, a >> n
    bx, bz = b & mask, b >> n
    raw = (ax & az).bit_count() + (bx & bz).bit_count() + 2 * ((az & bx).bit_count() & 1)
    out = a ^ b
    rel = (raw - ((out & mask) & (out >> n)).bit_count()) % 4
    if rel == 0:
        return out, a_sign * b_sign
    if rel == 2:
        return out, -a_sign * b_sign
    raise EngineError("product of Hermitian stabilizer elements must be Hermitian")


class _Echelon:
    """Row-reduced view of a generator list with combination tracking."""

    def __init__(self, syms: list[int]) -> None:
        self.count = len(syms)
        self.pivots: list[tuple[int, int, int]] = []  # (pivot bit, row, combo mask)
        for i, s in enumerate(syms):
            row, combo = s, 1 << i
            for pbit, prow, pcombo in self.pivots:
                if row & pbit:
                    row ^= prow
                    combo ^= pcombo
            if row:
                pbit = row & -row
                self.pivots = [
                    (b, r ^ row, c ^ combo) if r & pbit else (b, r, c)
                    for b, r, c in self.pivots
                ]
                self.pivots.append((pbit, row, combo))

    def express(self, sym: int) -> int | None:
        """Combination mask of generators whose product matches sym, or None."""
        combo = 0
        for pbit, prow, pcombo in self.pivots:
            if sym & pbit:
                sym ^= prow
                combo ^= pcombo
        return combo if sym == 0 else None


class StabilizerFrame:
    """Signed stabilizer generators plus a tracked signed logical pair."""

    __slots__ = ("n", "_mask", "_syms", "_signs", "_lx", "_lx_sign", "_lz", "_lz_sign", "_ech")

    def __init__(
        self,
        n: int,
        syms: list[int],
        signs: list[int],
        lx: int,
        lx_sign: int,
        lz: int,
        lz_sign: int,
    ) -> None:
        self.n = n
        self._mask = (1 << n) - 1
        self._syms = syms
        self._signs = signs
        self._lx = lx
        self._lx_sign = lx_sign
        self._lz = lz
        self._lz_sign = lz_sign
        self._ech: _Echelon | None = None

    @classmethod
    def from_code(cls, code: CssCode) -> StabilizerFrame:
        """All generators and both logicals at +1."""
        syms = [_sym(op) for op in code.stabilizers]
        return cls(
            code.n,
            syms,
            [1] * len(syms),
            _sym(code.logical_x),
            1,
            _sym(code.logical_z),
            1,
        )

    # -- views -------------------------------------------------------------

    @property
    def gens(self) -> list[tuple[PauliOperator, int]]:
        return [
            (_op_from_sym(s, self.n, self._mask), sign)
            for s, sign in zip(self._syms, self._signs)
        ]

    @property
    def logical_x(self) -> tuple[PauliOperator, int]:
        return _op_from_sym(self._lx, self.n, self._mask), self._lx_sign

    @property
    def logical_z(self) -> tuple[PauliOperator, int]:
        return _op_from_sym(self._lz, self.n, self._mask), self._lz_sign

    def signs(self) -> list[int]:
        return list(self._signs)

    def _copy(self) -> StabilizerFrame:
        return StabilizerFrame(
            self.n,
            list(self._syms),
            list(self._signs),
            self._lx,
            self._lx_sign,
            self._lz,
            self._lz_sign,
        )

    def validate(self) -> None:
        n, mask = self.n, self._mask
        assert len(self._syms) == n - 1
        for i, a in enumerate(self._syms):
            for b in self._syms[i + 1 :]:
                assert not _anticommute(a, b, n, mask)
            assert not _anticommute(a, self._lx, n, mask)
            assert not _anticommute(a, self._lz, n, mask)
        assert _anticommute(self._lx, self._lz, n, mask)
        ech = _Echelon(self._syms)
        assert len(ech.pivots) == n - 1, "dependent generators"

    # -- evolution -----------------------------------------------------------

    def apply_pauli(self, P: PauliOperator) -> StabilizerFrame:
        """Flip the sign of every generator and logical anticommuting with P."""
        if P.n != self.n:
            raise EngineError("qubit count mismatch")
        n, mask = self.n, self._mask
        p = _sym(P)
        out = self._copy()
        out._signs = [
            -s if _anticommute(g, p, n, mask) else s
            for g, s in zip(self._syms, self._signs)
        ]
        if _anticommute(self._lx, p, n, mask):
            out._lx_sign = -out._lx_sign
        if _anticommute(self._lz, p, n, mask):
            out._lz_sign = -out._lz_sign
        out._ech = self._ech  # generators unchanged
        return out

    def _echelon(self) -> _Echelon:
        if self._ech is None:
            self._ech = _Echelon(self._syms)
        return self._ech

    def _signed_combination(self, combo: int, expect: int) -> int:
        """Sign of the ascending-index product of the generators in combo.

        ``expect`` is the symplectic part the product must reproduce.
        """
        n, mask = self.n, self._mask
        acc_sym, acc_sign = 0, 1
        c = combo
        while c:
            low = c & -c
            i = low.bit_length() - 1
            acc_sym, acc_sign = _mul_signed(
                acc_sym, acc_sign, self._syms[i], self._signs[i], n, mask
            )
            c ^= low
        if acc_sym != expect:
            raise EngineError("combination does not reproduce the operator")
        return acc_sign

    def is_deterministic(self, P: PauliOperator) -> bool:
        n, mask = self.n, self._mask
        p = _sym(P)
        return all(not _anticommute(g, p, n, mask) for g in self._syms)

    def coset_sign(self, P: PauliOperator) -> int | None:
        """Sign with which P occurs in the signed stabilizer group.

        None when P (up to sign) is not a stabilizer of this frame.
        """
        if not P.is_hermitian():
            raise EngineError("sign query requires a Hermitian operator")
        p = _sym(P)
        combo = self._echelon().express(p)
        if combo is None:
            return None
        return self._signed_combination(combo, p) * P.sign()

    def measure(
        self,
        P: PauliOperator,
        branch: int | None = None,
        rng: random.Random | None = None,
    ) -> tuple[StabilizerFrame, MeasurementResult]:
        """Ideal projective measurement of the Hermitian Pauli P.

        Deterministic outcomes are read off the signed group and leave the
        frame unchanged. Random outcomes take the forced ``branch`` bit, or
        a draw from ``rng``; the frame collapses accordingly. Measuring an
        operator that would collapse the encoded qubit is rejected.
        """
        if P.n != self.n:
            raise EngineError("qubit count mismatch")
        if not P.is_hermitian():
            raise EngineError("measurement requires a Hermitian operator")
        n, mask = self.n, self._mask
        p = _sym(P)
        anti = [i for i, g in enumerate(self._syms) if _anticommute(g, p, n, mask)]
        if not anti:
            if _anticommute(self._lx, p, n, mask) or _anticommute(self._lz, p, n, mask):
                raise EngineError("measurement would destroy the encoded qubit")
            sign = self.coset_sign(P)
            if sign is None:
                raise EngineError("operator commutes with the frame but is not in it")
            return self, MeasurementResult(outcome=(1 - sign) // 2, deterministic=True)
        if branch is None:
            if rng is None:
                raise EngineError("random measurement needs a branch bit or an rng")
            branch = rng.randrange(2)
        if branch not in (0, 1):
            raise EngineError("branch must be 0 or 1")
        out = self._copy()
        pivot = anti[0]
        g_sym, g_sign = self._syms[pivot], self._signs[pivot]
        for i in anti[1:]:
            out._syms[i], out._signs[i] = _mul_signed(
                self._syms[i], self._signs[i], g_sym, g_sign, n, mask
            )
        if _anticommute(self._lx, p, n, mask):
            out._lx, out._lx_sign = _mul_signed(
                self._lx, self._lx_sign, g_sym, g_sign, n, mask
            )
        if _anticommute(self._lz, p, n, mask):
            out._lz, out._lz_sign = _mul_signed(
                self._lz, self._lz_sign, g_sym, g_sign, n, mask
            )
        out._syms[pivot] = p
        out._signs[pivot] = (1 if branch == 0 else -1) * P.sign()
        out._ech = None
        return out, MeasurementResult(outcome=branch, deterministic=False)

    def logical_matches(self, target_x: PauliOperator, target_z: PauliOperator) -> bool:
        """True when the tracked logicals equal the targets up to +1 stabilizers."""
        n, mask = self.n, self._mask
        for (lsym, lsign), target in (
            ((self._lx, self._lx_sign), target_x),
            ((self._lz, self._lz_sign), target_z),
        ):
            t = _sym(target)
            combo = self._echelon().express(lsym ^ t)
            if combo is None:
                return False
            s_sym, s_sign = 0, 1
            c = combo
            while c:
                low = c & -c
                i = low.bit_length() - 1
                s_sym, s_sign = _mul_signed(
                    s_sym, s_sign, self._syms[i], self._signs[i], n, mask
                )
                c ^= low
            prod_sym, prod_sign = _mul_signed(s_sym, s_sign, t, target.sign(), n, mask)
            if prod_sym != lsym or prod_sign != lsign:
                return False
        return True


def prepare_extended(m: int, state_label: str = "(alpha, beta)") -> StabilizerFrame:
    """Fresh extended-code frame: all stabilizers and both logicals at +1.

    The encoded amplitudes stay symbolic; ``state_label`` is only a tag for
    reports. Errors enter later as explicit Paulis, never at preparation.
    """
    del state_label  # amplitudes are symbolic by construction
    return StabilizerFrame.from_code(extended_code(m))


def branch_enumerate(
    frame: StabilizerFrame, ops: list[PauliOperator]
) -> list[tuple[tuple[int, ...], StabilizerFrame]]:
    """All measurement branches of ``ops``, in branch-bit order.

    Deterministic measurements contribute their forced bit to every
    branch's outcome vector; each random measurement doubles the branch
    count. ``ops`` must pairwise commute.
    """
    for a, b in combinations(ops, 2):
        if a.anticommutes(b):
            raise EngineError("branch enumeration requires commuting operators")
    branches: list[tuple[tuple[int, ...], StabilizerFrame]] = [((), frame)]
    for op in ops:
        nxt: list[tuple[tuple[int, ...], StabilizerFrame]] = []
        for bits, fr in branches:
            if fr.is_deterministic(op):
                fr2, res = fr.measure(op)
                nxt.append((bits + (res.outcome,), fr2))
            else:
                for b in (0, 1):
                    fr2, _ = fr.measure(op, branch=b)
                    nxt.append((bits + (b,), fr2))
        branches = nxt
    return branches
