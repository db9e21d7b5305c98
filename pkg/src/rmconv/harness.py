"""Exhaustive conversion verification and dense-oracle cross-checks.

``sweep`` drives every single-qubit input error (plus the no-error case)
through every gauge-measurement branch of a conversion and checks the
output frame, so correctness is established by enumeration rather than
sampling. ``cross_validate`` replays matched conversion runs on the dense
state-vector backend at m=3 and compares final states. The transversal
checks confirm the code-level gate facts this conversion scheme exists to
exploit: the 7-qubit code has a transversal logical Hadamard, and the
15-qubit code a transversal logical T (the oracle determines empirically
whether bitwise T implements logical T or its adjoint, and records which).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import dense
from .codes import extended_code, rm_code
from .conversion import ConversionReport, build_plan, convert
from .dense import DenseState, dense_encode, fidelity, project, transversal_h, transversal_t
from .engine import StabilizerFrame, prepare_extended
from .pauli import PauliOperator

FIDELITY_TOL = 1e-9


def error_catalog(n: int) -> list[tuple[str, PauliOperator | None]]:
    """The no-error case plus every single-qubit X, Y, Z error."""
    out: list[tuple[str, PauliOperator | None]] = [("none", None)]
    for q in range(1, n + 1):
        out.append((f"X:{q}", PauliOperator.from_qubits(n, xs=(q - 1,))))
        out.append((f"Y:{q}", PauliOperator.from_qubits(n, xs=(q - 1,), zs=(q - 1,))))
        out.append((f"Z:{q}", PauliOperator.from_qubits(n, zs=(q - 1,))))
    return out


def fresh_input_frame(m: int, direction: str) -> StabilizerFrame:
    if direction == "forward":
        return prepare_extended(m)
    return StabilizerFrame.from_code(rm_code(m + 1))


@dataclass
class SweepCase:
    error: str
    branch: str
    passed: bool
    report: ConversionReport | None = None


@dataclass
class SweepResult:
    m: int
    direction: str
    mode: str
    cases: list[SweepCase]
    total: int
    passed: int
    identity_fix_branches: int  # no-error branches needing no fixing operation

    @property
    def all_pass(self) -> bool:
        return self.passed == self.total

    def failures(self) -> list[SweepCase]:
        return [c for c in self.cases if not c.passed]

    def to_dict(self, include_cases: bool = True) -> dict:
        out = {
            "schema": "rmconv/1",
            "m": self.m,
            "direction": self.direction,
            "mode": self.mode,
            "total": self.total,
            "passed": self.passed,
            "failed": self.total - self.passed,
            "identity_fix_branches": self.identity_fix_branches,
        }
        if include_cases:
            out["cases"] = [
                {"error": c.error, "branch": c.branch, "passed": c.passed}
                for c in self.cases
            ]
        return out


def sweep(m: int, direction: str, mode: str, keep_reports: bool = False) -> SweepResult:
    """Run every (error, gauge branch) conversion case and check outputs.

    Covers 3*(2^{m+1}-1) + 1 error cases times all 2^m gauge branches, in
    canonical order (errors by qubit then letter, branches by bit value).
    """
    n = (1 << (m + 1)) - 1
    build_plan(direction, m, mode)  # fail fast on bad arguments
    cases: list[SweepCase] = []
    identity_fix = 0
    for err_label, err in error_catalog(n):
        base = fresh_input_frame(m, direction)
        if err is not None:
            base = base.apply_pauli(err)
        for bits in product((0, 1), repeat=m):
            report = convert(
                base, direction, mode, branch_bits=list(bits), injected_error=err
            )
            ok = report.passes()
            if err is None and report.correction.is_identity():
                identity_fix += 1
            cases.append(
                SweepCase(
                    error=err_label,
                    branch="".join(map(str, bits)),
                    passed=ok,
                    report=report if keep_reports else None,
                )
            )
    passed = sum(1 for c in cases if c.passed)
    return SweepResult(
        m=m,
        direction=direction,
        mode=mode,
        cases=cases,
        total=len(cases),
        passed=passed,
        identity_fix_branches=identity_fix,
    )


@dataclass
class CrossValidationResult:
    trials: int
    passed: int
    min_fidelity: float
    failures: list[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return self.passed == self.trials


def _dense_input(m: int, direction: str, alpha: complex, beta: complex) -> DenseState:
    code = extended_code(m) if direction == "forward" else rm_code(m + 1)
    return dense_encode(alpha, beta, code)


def _dense_target(m: int, direction: str, alpha: complex, beta: complex) -> DenseState:
    code = rm_code(m + 1) if direction == "forward" else extended_code(m)
    return dense_encode(alpha, beta, code)


def replay_on_oracle(
    m: int,
    direction: str,
    mode: str,
    report: ConversionReport,
    alpha: complex,
    beta: complex,
    error: PauliOperator | None,
) -> float:
    """Re-run a recorded conversion on the dense backend; returns fidelity.

    Every measurement is replayed as a projector onto the engine's recorded
    outcome. A deterministic engine outcome must hit probability 1 on the
    oracle; a disagreement raises.
    """
    plan = build_plan(direction, m, mode)
    state = _dense_input(m, direction, alpha, beta)
    if error is not None:
        state = dense.apply_pauli(state, error)
    gauge_labels = {pm.label for pm in plan.gauge_rows()}
    for pm in plan.measurements():
        outcome = report.raw_syndromes[pm.label]
        state, prob = project(state, pm.op, outcome)
        if pm.label in gauge_labels:
            if abs(prob - 0.5) > 1e-9:
                raise AssertionError(f"{pm.label}: expected a random outcome, prob={prob}")
        elif abs(prob - 1.0) > 1e-9:
            raise AssertionError(
                f"{pm.label}: engine said deterministic {outcome}, oracle prob={prob}"
            )
    state = dense.apply_pauli(state, report.correction)
    if not report.residual_error.is_identity():
        state = dense.apply_pauli(state, report.residual_error)
    return fidelity(state, _dense_target(m, direction, alpha, beta))


def cross_validate(m: int = 3, trials: int = 100, seed: int = 7) -> CrossValidationResult:
    """Randomized engine-vs-oracle agreement runs at m=3.

    Each trial draws amplitudes, a direction, an error (or none), and
    branch bits, runs the stabilizer-engine conversion, replays it densely,
    and requires final-state fidelity >= 1 - 1e-9 against the target
    encoding (after removing the tolerated ft-mode residual, when present).
    """
    rng = random.Random(seed)
    n = (1 << (m + 1)) - 1
    passed = 0
    min_fid = 1.0
    failures: list[str] = []
    for t in range(trials):
        z = [rng.gauss(0, 1) + 1j * rng.gauss(0, 1) for _ in range(2)]
        norm = np.sqrt(sum(abs(v) ** 2 for v in z))
        alpha, beta = z[0] / norm, z[1] / norm
        direction = rng.choice(["forward", "backward"])
        mode = rng.choice(["full", "ft"])
        kind = rng.choice(["none", "X", "Y", "Z"])
        if kind == "none":
            error = None
        else:
            q = rng.randrange(n)
            error = PauliOperator.from_qubits(
                n,
                xs=(q,) if kind in ("X", "Y") else (),
                zs=(q,) if kind in ("Z", "Y") else (),
            )
        bits = [rng.randrange(2) for _ in range(m)]
        frame = fresh_input_frame(m, direction)
        if error is not None:
            frame = frame.apply_pauli(error)
        report = convert(frame, direction, mode, branch_bits=bits, injected_error=error)
        try:
            fid = replay_on_oracle(m, direction, mode, report, alpha, beta, error)
        except AssertionError as exc:
            failures.append(f"trial {t}: {exc}")
            continue
        min_fid = min(min_fid, fid)
        if report.passes() and fid >= 1.0 - FIDELITY_TOL:
            passed += 1
        else:
            failures.append(
                f"trial {t}: direction={direction} mode={mode} error={report.injected_error} fid={fid}"
            )
    return CrossValidationResult(
        trials=trials, passed=passed, min_fidelity=min_fid, failures=failures
    )


@dataclass
class TransversalCheckResult:
    hadamard_ok: bool
    t_ok: bool
    t_implements: str  # "T" or "T_dagger"

    @property
    def all_pass(self) -> bool:
        return self.hadamard_ok and self.t_ok

    def to_dict(self) -> dict:
        return {
            "hadamard_ok": self.hadamard_ok,
            "t_ok": self.t_ok,
            "t_implements": self.t_implements,
        }


def transversal_checks(m: int = 3) -> TransversalCheckResult:
    steane = rm_code(m)
    big = rm_code(m + 1)
    s = 1 / np.sqrt(2)

    hadamard_ok = True
    for alpha, beta in ((1.0, 0.0), (0.0, 1.0), (s, s), (s, -1j * s)):
        got = transversal_h(dense_encode(alpha, beta, steane))
        want = dense_encode((alpha + beta) * s, (alpha - beta) * s, steane)
        if fidelity(got, want) < 1.0 - FIDELITY_TOL:
            hadamard_ok = False

    plus = dense_encode(s, s, big)
    after = transversal_t(plus)
    phase = np.exp(1j * np.pi / 4)
    fid_t = fidelity(after, dense_encode(s, s * phase, big))
    fid_tdg = fidelity(after, dense_encode(s, s * np.conj(phase), big))
    if fid_t >= 1.0 - FIDELITY_TOL:
        implements = "T"
        t_ok = True
    elif fid_tdg >= 1.0 - FIDELITY_TOL:
        implements = "T_dagger"
        t_ok = True
    else:
        implements = "neither"
        t_ok = False
    # A diagonal logical gate must also fix the logical zero state.
    zero = dense_encode(1.0, 0.0, big)
    if fidelity(transversal_t(zero), zero) < 1.0 - FIDELITY_TOL:
        t_ok = False
    return TransversalCheckResult(hadamard_ok=hadamard_ok, t_ok=t_ok, t_implements=implements)


def sweep_summary_json(results: list[SweepResult], include_cases: bool = False) -> str:
    return json.dumps(
        {
            "schema": "rmconv/1",
            "sweeps": [r.to_dict(include_cases=include_cases) for r in results],
            "all_pass": all(r.all_pass for r in results),
        },
        indent=2,
    )
