"""Gauge-fixing conversion between adjacent Reed-Muller quantum codes.

Forward conversion takes an extended_code(m) frame to rm_code(m+1);
backward takes rm_code(m+1) to extended_code(m), after which the last 2^m
qubits carry no information and can be discarded. Both directions measure
the m gauge operators that distinguish source from target, then simplified
remainders of the target's remaining same-type checks (so every random bit
is followed only by deterministic ones), diagnose a possible single-qubit
input error from the recombined check values, repair the gauge syndromes
for that error's influence, and apply one composite Pauli correction.

In full mode the opposite-type checks are also measured, so both error
components are diagnosed and the output is exact. In fault-tolerant (ft)
mode they are omitted; a single residual error of the undiagnosed type may
remain on the output, which the target code can correct downstream.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .codes import CssCode, extended_code, generator_matrix, _h_rows, rm_code
from .gf2 import BitMatrix, BitVector, solve
from .pauli import PauliOperator
from .engine import StabilizerFrame

Direction = str  # "forward" | "backward"
Mode = str  # "full" | "ft"

SCHEMA = "rmconv/1"


class ConversionError(Exception):
    pass


def _check_direction(direction: str) -> str:
    if direction not in ("forward", "backward"):
        raise ConversionError(f"direction must be 'forward' or 'backward', got {direction!r}")
    return direction


def _check_mode(mode: str) -> str:
    if mode not in ("full", "ft"):
        raise ConversionError(f"mode must be 'full' or 'ft', got {mode!r}")
    return mode


@dataclass(frozen=True)
class PlannedMeasurement:
    label: str
    op: PauliOperator
    role: str  # "gauge" | "remainder" | "split" | "diagnostic"


@dataclass(frozen=True)
class CombinationRule:
    """target check value = XOR of the listed measured syndromes."""

    target: str
    members: tuple[str, ...]


@dataclass(frozen=True)
class SyndromePlan:
    direction: str
    m: int
    mode: str
    gauge_measurements: tuple[PlannedMeasurement, ...]  # gauge + remainders (+ split)
    diagnostic_measurements: tuple[PlannedMeasurement, ...]
    combination_rules: tuple[CombinationRule, ...]
    split_applied: bool

    def measurements(self) -> tuple[PlannedMeasurement, ...]:
        return self.gauge_measurements + self.diagnostic_measurements

    def gauge_rows(self) -> tuple[PlannedMeasurement, ...]:
        return self.gauge_measurements[: self.m]

    def counts(self) -> tuple[int, int]:
        ms = self.measurements()
        return len(ms), sum(pm.op.weight for pm in ms)

    def pre_split_count(self) -> int:
        return len(self.measurements()) - (1 if self.split_applied else 0)


def _label(direction: str, idx: int) -> str:
    return f"S{idx}" if direction == "forward" else f"S'{idx}"


def _target_label(m: int, i: int, kind: str) -> str:
    return f"S(1,{m + 1})_{i}^{kind}"


def _best_remainder(
    target_bits: int, measured: list[tuple[str, int]], cap: int
) -> tuple[int, tuple[int, ...]]:
    """Lowest-weight leftover of target after XOR-ing measured syndromes.

    Scans combinations of already-measured operators by increasing size,
    examining at most ``cap`` candidates; ties on weight prefer smaller
    combinations, then the lexicographically smallest leftover support.
    Returns (remainder bits, indices of the chosen combination).
    """
    best_key: tuple[int, int, tuple[int, ...]] | None = None
    best: tuple[int, tuple[int, ...]] | None = None
    seen = 0
    for size in range(len(measured) + 1):
        for combo in combinations(range(len(measured)), size):
            if seen >= cap and best is not None:
                return best
            seen += 1
            s = 0
            for i in combo:
                s ^= measured[i][1]
            rem = target_bits ^ s
            w = rem.bit_count()
            if best_key is not None and (w, size) > best_key[:2]:
                continue
            supp = tuple(i for i in range(rem.bit_length()) if (rem >> i) & 1)
            key = (w, size, supp)
            if best_key is None or key < best_key:
                best_key = key
                best = (rem, combo)
    assert best is not None
    return best


@lru_cache(maxsize=None)
def build_plan(direction: str, m: int, mode: str = "full") -> SyndromePlan:
    """Measurement schedule and syndrome recombination rules.

    Forward measures the m weight-4 gauge rows of H(1,m+1) as Z checks,
    then a minimum-weight remainder for each of G(1,m+1)'s first m Z rows
    (XOR-ing out already-measured syndromes), then the last Z row, split
    into two halves when both halves commute with every source stabilizer.
    Backward measures the m first-block X rows of G(1,m), then remainders
    for all m+1 G(1,m+1) X rows. Full mode appends the m+1 opposite-type
    G(1,m+1) rows for error diagnosis.
    """
    _check_direction(direction)
    _check_mode(mode)
    if m < 3:
        raise ConversionError("m must be >= 3")
    n = (1 << (m + 1)) - 1
    g_next = generator_matrix(m + 1)
    cap = 1 << (2 * m)
    gauge_kind = "Z" if direction == "forward" else "X"
    diag_kind = "X" if direction == "forward" else "Z"

    measured: list[tuple[str, int]] = []
    plan_meas: list[PlannedMeasurement] = []
    rules: list[CombinationRule] = []
    idx = 1

    if direction == "forward":
        gauge_bits = list(_h_rows(m + 1)[:m])
    else:
        gauge_bits = list(generator_matrix(m).data)
    for row in gauge_bits:
        lbl = _label(direction, idx)
        plan_meas.append(
            PlannedMeasurement(lbl, PauliOperator.from_row(BitVector(n, row), gauge_kind), "gauge")
        )
        measured.append((lbl, row))
        idx += 1

    n_remainders = m if direction == "forward" else m + 1
    for i in range(n_remainders):
        target_bits = g_next.data[i]
        rem, combo = _best_remainder(target_bits, measured, cap)
        lbl = _label(direction, idx)
        plan_meas.append(
            PlannedMeasurement(lbl, PauliOperator.from_row(BitVector(n, rem), gauge_kind), "remainder")
        )
        members = sorted([measured[j][0] for j in combo] + [lbl], key=_label_sort_key)
        rules.append(CombinationRule(_target_label(m, i + 1, gauge_kind), tuple(members)))
        measured.append((lbl, rem))
        idx += 1

    split_applied = False
    if direction == "forward":
        last = g_next.data[m]
        halves = _try_split(last, m)
        if halves is not None:
            split_applied = True
            labels = []
            for h in halves:
                lbl = _label(direction, idx)
                plan_meas.append(
                    PlannedMeasurement(lbl, PauliOperator.from_row(BitVector(n, h), gauge_kind), "split")
                )
                measured.append((lbl, h))
                labels.append(lbl)
                idx += 1
            rules.append(CombinationRule(_target_label(m, m + 1, gauge_kind), tuple(labels)))
        else:
            lbl = _label(direction, idx)
            plan_meas.append(
                PlannedMeasurement(lbl, PauliOperator.from_row(BitVector(n, last), gauge_kind), "split")
            )
            measured.append((lbl, last))
            rules.append(CombinationRule(_target_label(m, m + 1, gauge_kind), (lbl,)))
            idx += 1

    diagnostics: list[PlannedMeasurement] = []
    if mode == "full":
        for i, row in enumerate(g_next.data):
            lbl = _label(direction, idx)
            diagnostics.append(
                PlannedMeasurement(lbl, PauliOperator.from_row(BitVector(n, row), diag_kind), "diagnostic")
            )
            rules.append(CombinationRule(_target_label(m, i + 1, diag_kind), (lbl,)))
            idx += 1

    return SyndromePlan(
        direction=direction,
        m=m,
        mode=mode,
        gauge_measurements=tuple(plan_meas),
        diagnostic_measurements=tuple(diagnostics),
        combination_rules=tuple(rules),
        split_applied=split_applied,
    )


def _label_sort_key(label: str) -> int:
    return int(label.lstrip("S'"))


def _try_split(row_bits: int, m: int) -> tuple[int, int] | None:
    """Split a weight > 4 row at its median support position.

    Returns the halves only when both commute with every stabilizer of
    extended_code(m); otherwise None (the row is measured whole).
    """
    support = [i for i in range(row_bits.bit_length()) if (row_bits >> i) & 1]
    if len(support) <= 4:
        return None
    mid = len(support) // 2
    first = sum(1 << i for i in support[:mid])
    second = row_bits ^ first
    source = extended_code(m)
    for h in (first, second):
        op = PauliOperator.from_row(BitVector(source.n, h), "Z")
        if any(op.anticommutes(s) for s in source.stabilizers):
            return None
    return first, second


@dataclass(frozen=True)
class ErrorDiagnosis:
    """Single-qubit error locations, 1-based; None means no error seen."""

    x_error_qubit: int | None = None
    z_error_qubit: int | None = None


def diagnose(bits: list[int] | tuple[int, ...]) -> int | None:
    """Decode G(1,m+1) check values to a qubit index.

    Bit i (0-based, the first row) is binary digit i of the qubit label,
    so (1,0,1,0) names qubit 5. All-zero means no error.
    """
    j = 0
    for i, b in enumerate(bits):
        if b:
            j |= 1 << i
    return j if j else None


def fix_syndromes(
    plan: SyndromePlan, raw_gauge: list[int] | tuple[int, ...], diagnosed: int | None
) -> tuple[int, ...]:
    """Undo a diagnosed error's influence on the m gauge syndromes.

    Flips gauge bit k iff the diagnosed qubit lies in gauge row k's
    support (the error anticommutes with that gauge operator).
    """
    if len(raw_gauge) != plan.m:
        raise ConversionError(f"expected {plan.m} gauge bits")
    if diagnosed is None:
        return tuple(raw_gauge)
    fixed = []
    for bit, pm in zip(raw_gauge, plan.gauge_rows()):
        in_support = (diagnosed - 1) in pm.op.support()
        fixed.append(bit ^ (1 if in_support else 0))
    return tuple(fixed)


@lru_cache(maxsize=None)
def _fixing_basis(direction: str, m: int) -> tuple[tuple[PauliOperator, ...], BitMatrix]:
    """Gauge-partner operators and their anticommutation pattern.

    Forward uses the second-block X copies of G(1,m)'s rows (supported on
    qubits 2^m+1 .. 2^{m+1}-1); backward uses the first m rows of
    H(1,m+1) as Z operators, which reach both blocks. Each basis element
    commutes with every retained stabilizer of the respective target code
    and with both logicals; row k of the returned matrix records which
    gauge rows basis element k anticommutes with.
    """
    n = (1 << (m + 1)) - 1
    half = 1 << m
    if direction == "forward":
        basis = tuple(
            PauliOperator.from_row(BitVector(n, r << half), "X")
            for r in generator_matrix(m).data
        )
        gauge = [
            PauliOperator.from_row(BitVector(n, r), "Z") for r in _h_rows(m + 1)[:m]
        ]
    else:
        basis = tuple(
            PauliOperator.from_row(BitVector(n, r), "Z") for r in _h_rows(m + 1)[:m]
        )
        gauge = [
            PauliOperator.from_row(BitVector(n, r), "X") for r in generator_matrix(m).data
        ]
    pattern = BitMatrix.from_rows(
        m,
        [
            sum((1 << i) for i, g in enumerate(gauge) if b.anticommutes(g))
            for b in basis
        ],
    )
    return basis, pattern


def _retained_stabilizers(direction: str, m: int) -> list[PauliOperator]:
    """Target generators the fixing operator must commute with."""
    target = rm_code(m + 1) if direction == "forward" else extended_code(m)
    plan_gauge = {pm.op for pm in build_plan(direction, m, "full").gauge_rows()}
    return [s for s in target.stabilizers if s not in plan_gauge] + [
        target.logical_x,
        target.logical_z,
    ]


def solve_fixing_operator(
    plan: SyndromePlan,
    flagged: list[int] | tuple[int, ...],
    frame_stabilizers: list[PauliOperator] | None = None,
) -> PauliOperator:
    """Pauli that flips exactly the flagged gauge syndromes back to +1.

    Solves the flag pattern over the gauge-partner basis, whose products
    reproduce the conversion tables row for row. The result anticommutes
    with precisely the flagged gauge rows and commutes with every retained
    stabilizer of the target code and with both logicals; this contract is
    re-checked against ``frame_stabilizers`` (defaults to the target's
    retained generators) and a violation is a fatal plan inconsistency.
    """
    m = plan.m
    if len(flagged) != m:
        raise ConversionError(f"expected {m} flag bits")
    basis, pattern = _fixing_basis(plan.direction, m)
    want = BitVector.from_support(m, [i for i, b in enumerate(flagged) if b])
    combo = solve(pattern, want)
    if combo is None:
        raise ConversionError("gauge flags outside the fixing basis span; plan is inconsistent")
    op = PauliOperator.identity(basis[0].n)
    for i in combo.support():
        op = op * basis[i]
    gauge_ops = [pm.op for pm in plan.gauge_rows()]
    for bit, g in zip(flagged, gauge_ops):
        if op.anticommutes(g) != bool(bit):
            raise ConversionError("fixing operator does not match the flag pattern")
    retained = (
        frame_stabilizers
        if frame_stabilizers is not None
        else _retained_stabilizers(plan.direction, m)
    )
    for s in retained:
        if op.anticommutes(s):
            raise ConversionError(f"fixing operator disturbs retained stabilizer {s}")
    return op


@dataclass
class ConversionReport:
    direction: str
    mode: str
    m: int
    injected_error: str
    branch_outcomes: tuple[int, ...]
    raw_syndromes: dict[str, int]
    combined_syndromes: dict[str, int]
    fixed_syndromes: dict[str, int]
    diagnosis: ErrorDiagnosis
    correction: PauliOperator
    residual_error: PauliOperator
    logical_preserved: bool
    uncorrectable: bool
    measurement_count: int
    total_weight: int
    output_code: str
    discarded_qubits: tuple[int, ...] = field(default_factory=tuple)

    def passes(self) -> bool:
        """Pass criterion for this report's mode.

        Full mode demands an exact output; ft mode tolerates one residual
        error of the undiagnosed type.
        """
        if self.uncorrectable or not self.logical_preserved:
            return False
        limit = 0 if self.mode == "full" else 1
        return self.residual_error.weight <= limit

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "direction": self.direction,
            "mode": self.mode,
            "m": self.m,
            "injected_error": self.injected_error,
            "branch_outcomes": "".join(str(b) for b in self.branch_outcomes),
            "raw_syndromes": dict(self.raw_syndromes),
            "combined_syndromes": dict(self.combined_syndromes),
            "fixed_syndromes": dict(self.fixed_syndromes),
            "diagnosis": {
                "x_error_qubit": self.diagnosis.x_error_qubit,
                "z_error_qubit": self.diagnosis.z_error_qubit,
            },
            "correction": str(self.correction),
            "residual_error": str(self.residual_error),
            "logical_preserved": self.logical_preserved,
            "uncorrectable": self.uncorrectable,
            "measurement_count": self.measurement_count,
            "total_weight": self.total_weight,
            "output_code": self.output_code,
            "discarded_qubits": list(self.discarded_qubits),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _frame_m(frame: StabilizerFrame) -> int:
    m = (frame.n + 1).bit_length() - 2
    if (1 << (m + 1)) - 1 != frame.n:
        raise ConversionError(f"frame size {frame.n} is not 2^(m+1)-1")
    return m


def _residual_of(
    frame: StabilizerFrame, target: CssCode, m: int
) -> tuple[PauliOperator, bool]:
    """Pauli taking the frame onto the all-+1 target group, if one exists.

    Diagnoses the X component from the signs of G(1,m+1)'s Z rows and the
    Z component from its X rows, then demands the candidate explain every
    target generator's sign. Returns (residual, consistent).
    """
    n = target.n
    g_next = generator_matrix(m + 1)
    signs: dict[PauliOperator, int] = {}
    for t in target.stabilizers:
        s = frame.coset_sign(t)
        if s is None:
            return PauliOperator.identity(n), False
        signs[t] = s
    zx_bits = []
    xz_bits = []
    for row in g_next.data:
        zop = PauliOperator.from_row(BitVector(n, row), "Z")
        xop = PauliOperator.from_row(BitVector(n, row), "X")
        zx_bits.append(0 if signs.get(zop, frame.coset_sign(zop)) == 1 else 1)
        xz_bits.append(0 if signs.get(xop, frame.coset_sign(xop)) == 1 else 1)
    xq = diagnose(zx_bits)
    zq = diagnose(xz_bits)
    residual = PauliOperator.from_qubits(
        n,
        xs=((xq - 1,) if xq else ()),
        zs=((zq - 1,) if zq else ()),
    )
    for t, s in signs.items():
        if (s == -1) != residual.anticommutes(t):
            return residual, False
    return residual, True


def convert(
    frame: StabilizerFrame,
    direction: str,
    mode: str = "full",
    *,
    branch_bits: list[int] | tuple[int, ...] | None = None,
    rng: random.Random | None = None,
    injected_error: PauliOperator | None = None,
) -> ConversionReport:
    """Run one conversion on a (possibly single-error-corrupted) frame.

    ``branch_bits`` forces the outcomes of the random gauge measurements in
    order; otherwise ``rng`` draws them. ``injected_error`` is metadata for
    the report only; the caller applies it to the frame beforehand.
    """
    _check_direction(direction)
    _check_mode(mode)
    m = _frame_m(frame)
    plan = build_plan(direction, m, mode)
    target = rm_code(m + 1) if direction == "forward" else extended_code(m)

    bits = list(branch_bits) if branch_bits is not None else None
    used: list[int] = []
    raw: dict[str, int] = {}
    f = frame
    for pm in plan.measurements():
        if f.is_deterministic(pm.op):
            f, res = f.measure(pm.op)
        else:
            forced = None
            if bits is not None:
                if not bits:
                    raise ConversionError("not enough branch bits for the random measurements")
                forced = bits.pop(0)
            f, res = f.measure(pm.op, branch=forced, rng=rng)
            used.append(res.outcome)
        raw[pm.label] = res.outcome

    combined: dict[str, int] = {}
    for rule in plan.combination_rules:
        v = 0
        for lbl in rule.members:
            v ^= raw[lbl]
        combined[rule.target] = v

    def _combined_bits(kind: str) -> list[int]:
        return [combined[_target_label(m, i + 1, kind)] for i in range(m + 1)]

    if direction == "forward":
        x_qubit = diagnose(_combined_bits("Z"))
        z_qubit = diagnose(_combined_bits("X")) if mode == "full" else None
        disturber = x_qubit
    else:
        z_qubit = diagnose(_combined_bits("X"))
        x_qubit = diagnose(_combined_bits("Z")) if mode == "full" else None
        disturber = z_qubit
    diag = ErrorDiagnosis(x_error_qubit=x_qubit, z_error_qubit=z_qubit)

    gauge_labels = [pm.label for pm in plan.gauge_rows()]
    raw_gauge = [raw[lbl] for lbl in gauge_labels]
    fixed = fix_syndromes(plan, raw_gauge, disturber)

    correction = solve_fixing_operator(plan, fixed)
    if x_qubit is not None:
        correction = correction * PauliOperator.from_qubits(frame.n, xs=(x_qubit - 1,))
    if z_qubit is not None:
        correction = correction * PauliOperator.from_qubits(frame.n, zs=(z_qubit - 1,))
    f = f.apply_pauli(correction)

    residual, consistent = _residual_of(f, target, m)
    f_clean = f.apply_pauli(residual) if not residual.is_identity() else f
    logical_ok = consistent and f_clean.logical_matches(target.logical_x, target.logical_z)

    count, weight = plan.counts()
    discarded: tuple[int, ...] = ()
    if direction == "backward":
        discarded = tuple(range(1 << m, 1 << (m + 1)))
    return ConversionReport(
        direction=direction,
        mode=mode,
        m=m,
        injected_error="none" if injected_error is None else str(injected_error),
        branch_outcomes=tuple(used),
        raw_syndromes=raw,
        combined_syndromes=combined,
        fixed_syndromes=dict(zip(gauge_labels, fixed)),
        diagnosis=diag,
        correction=correction,
        residual_error=residual,
        logical_preserved=logical_ok,
        uncorrectable=not consistent,
        measurement_count=count,
        total_weight=weight,
        output_code=target.label if direction == "forward" else f"RM(1,{m})",
        discarded_qubits=discarded,
    )
