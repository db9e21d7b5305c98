"""Command-line entry point.

Subcommands:

* ``dump``    -- print the code matrices, stabilizer lists, and logicals
* ``convert`` -- run one conversion and print its JSON report
* ``sweep``   -- exhaustive error x branch verification, JSON + summary
* ``cost``    -- resource breakdowns for both accounting models
* ``oracle``  -- dense-oracle cross-validation and transversal-gate checks

Exit codes: 0 on success / all checks passing, 1 on a verification
failure, 2 on a usage error. All qubit labels are 1-based. Identical
flags and seeds produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from .codes import extended_code, generator_matrix, h_tilde, rm_code
from .conversion import build_plan, convert
from .cost import CostModel, cost_adp14, cost_ours, count_resources
from .engine import StabilizerFrame
from .harness import (
    cross_validate,
    fresh_input_frame,
    sweep,
    sweep_summary_json,
    transversal_checks,
)
from .pauli import PauliOperator

_DIRECTIONS = {"fwd": "forward", "forward": "forward", "bwd": "backward", "backward": "backward"}


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    m: int = 3
    direction: str = "forward"
    mode: str = "full"
    error_spec: str = "none"
    branch_spec: str = "all"
    out_path: str | None = None
    cost_config: str | None = None
    epsilon: float | None = None
    trials: int = 100
    seed: int = 7

    def n(self) -> int:
        return (1 << (self.m + 1)) - 1

    def parse_error(self) -> PauliOperator | None:
        spec = self.error_spec
        if spec == "none":
            return None
        try:
            kind, qubit_text = spec.split(":")
            qubit = int(qubit_text)
        except ValueError:
            raise UsageError(f"bad error spec {spec!r}; expected e.g. 'X:5' or 'none'") from None
        if kind not in ("X", "Y", "Z"):
            raise UsageError(f"error kind must be X, Y, or Z, got {kind!r}")
        if not 1 <= qubit <= self.n():
            raise UsageError(f"error qubit {qubit} out of range 1..{self.n()}")
        return PauliOperator.from_qubits(
            self.n(),
            xs=(qubit - 1,) if kind in ("X", "Y") else (),
            zs=(qubit - 1,) if kind in ("Z", "Y") else (),
        )

    def parse_branches(self) -> list[list[int]] | random.Random:
        spec = self.branch_spec
        if spec == "all":
            return [list(bits) for bits in product((0, 1), repeat=self.m)]
        if spec.startswith("random:"):
            try:
                return random.Random(int(spec.split(":", 1)[1]))
            except ValueError:
                raise UsageError(f"bad branch seed in {spec!r}") from None
        if len(spec) == self.m and set(spec) <= {"0", "1"}:
            return [[int(c) for c in spec]]
        raise UsageError(
            f"bad branch spec {spec!r}; expected {self.m} bits, 'random:SEED', or 'all'"
        )


def _matrix_block(title: str, strings: list[str]) -> str:
    if not strings:
        return f"{title}: (empty)"
    body = "\n".join(f"  {s}" for s in strings)
    return f"{title}:\n{body}"


def _code_block(code) -> str:
    lines = [f"{code.label} on {code.n} qubits:"]
    for origin, op in zip(code.x_origins, code.x_stabs):
        lines.append(f"  {origin}^X: {op}")
    for origin, op in zip(code.z_origins, code.z_stabs):
        lines.append(f"  {origin}^Z: {op}")
    lines.append(f"  logical X: {code.logical_x}")
    lines.append(f"  logical Z: {code.logical_z}")
    return "\n".join(lines)


def _cmd_dump(cfg: CliConfig) -> int:
    m = cfg.m
    print(_matrix_block(f"G(1,{m})", generator_matrix(m).to_strings()))
    h_strings = h_tilde(m).to_strings() if m >= 4 else []
    print(_matrix_block(f"H(1,{m})", h_strings))
    print(_code_block(rm_code(m)))
    print(_code_block(extended_code(m)))
    for direction in ("forward", "backward"):
        plan = build_plan(direction, m, "full")
        print(f"{direction} plan (full mode):")
        for pm in plan.measurements():
            print(f"  {pm.label} = M({pm.op})  [{pm.role}]")
        for rule in plan.combination_rules:
            print(f"  {rule.target} = {' ^ '.join(rule.members)}")
    return 0


def _cmd_convert(cfg: CliConfig) -> int:
    error = cfg.parse_error()
    frame = fresh_input_frame(cfg.m, cfg.direction)
    if error is not None:
        frame = frame.apply_pauli(error)
    branches = cfg.parse_branches()
    reports = []
    if isinstance(branches, random.Random):
        reports.append(
            convert(frame, cfg.direction, cfg.mode, rng=branches, injected_error=error)
        )
    else:
        for bits in branches:
            reports.append(
                convert(frame, cfg.direction, cfg.mode, branch_bits=bits, injected_error=error)
            )
    if len(reports) == 1:
        payload = reports[0].to_dict()
    else:
        payload = {"schema": "rmconv/1", "reports": [r.to_dict() for r in reports]}
    text = json.dumps(payload, indent=2)
    if cfg.out_path:
        Path(cfg.out_path).write_text(text + "\n")
    print(text)
    return 0 if all(r.passes() for r in reports) else 1


def _cmd_sweep(cfg: CliConfig, directions: list[str], modes: list[str], with_cases: bool) -> int:
    results = []
    for direction in directions:
        for mode in modes:
            res = sweep(cfg.m, direction, mode)
            results.append(res)
            print(f"m={cfg.m} {direction} {mode}: {res.passed}/{res.total} pass")
            for case in res.failures()[:10]:
                print(f"  FAIL error={case.error} branch={case.branch}", file=sys.stderr)
    if cfg.out_path:
        Path(cfg.out_path).write_text(sweep_summary_json(results, include_cases=with_cases) + "\n")
    return 0 if all(r.all_pass for r in results) else 1


def _cmd_cost(cfg: CliConfig, standard_cost: float | None, as_json: bool) -> int:
    model = CostModel.from_json(cfg.cost_config) if cfg.cost_config else CostModel.unit()
    if cfg.epsilon is not None:
        model = CostModel(
            entangle_s=model.entangle_s,
            cost_x=model.cost_x,
            cost_z=model.cost_z,
            cost_t=model.cost_t,
            avg_stab_cost=dict(model.avg_stab_cost),
            epsilon=cfg.epsilon,
        )
    baseline = cost_adp14(model)
    ours = cost_ours(model)
    fwd_plan = build_plan("forward", cfg.m, "full")
    bwd_plan = build_plan("backward", cfg.m, "full")
    resources = {
        "forward_full": count_resources(fwd_plan),
        "backward_full": count_resources(bwd_plan),
        "forward_ft": count_resources(build_plan("forward", cfg.m, "ft")),
        "backward_ft": count_resources(build_plan("backward", cfg.m, "ft")),
    }
    if as_json:
        payload = {
            "schema": "rmconv/1",
            "adp14": baseline.to_dict(),
            "ours": ours.to_dict(),
            "delta": baseline.total - ours.total,
            "plan_resources": {k: list(v) for k, v in resources.items()},
        }
        if standard_cost is not None:
            payload["standard_method_total"] = standard_cost
        print(json.dumps(payload, indent=2))
    else:
        print(baseline.render_table())
        print()
        print(ours.render_table())
        print()
        print(f"delta (ADP14 - ours): {baseline.total - ours.total:.4f}")
        if standard_cost is not None:
            print(f"standard method (user-supplied): {standard_cost:.4f}")
        for key, (count, weight) in resources.items():
            print(f"plan {key}: {count} measurements, total weight {weight}")
        print(f"note: {baseline.note}")
    return 0


def _cmd_oracle(cfg: CliConfig) -> int:
    cv = cross_validate(m=cfg.m, trials=cfg.trials, seed=cfg.seed)
    tc = transversal_checks(cfg.m)
    print(f"cross-validation: {cv.passed}/{cv.trials} pass (min fidelity {cv.min_fidelity:.12f})")
    for failure in cv.failures[:10]:
        print(f"  {failure}", file=sys.stderr)
    print(f"transversal H: {'ok' if tc.hadamard_ok else 'FAIL'}")
    print(f"transversal T implements logical {tc.t_implements}: {'ok' if tc.t_ok else 'FAIL'}")
    return 0 if cv.all_pass and tc.all_pass else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmconv")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_dump = sub.add_parser("dump", help="print matrices, stabilizers, and plans")
    p_dump.add_argument("--m", type=int, default=3)

    p_conv = sub.add_parser("convert", help="run one conversion")
    p_conv.add_argument("--m", type=int, default=3)
    p_conv.add_argument("--direction", choices=sorted(_DIRECTIONS), default="fwd")
    p_conv.add_argument("--mode", choices=["full", "ft"], default="full")
    p_conv.add_argument("--error", default="none", help="'none' or e.g. 'X:5'")
    p_conv.add_argument("--branch", default="all", help="bits, 'random:SEED', or 'all'")
    p_conv.add_argument("--out", default=None)

    p_sweep = sub.add_parser("sweep", help="exhaustive error x branch verification")
    p_sweep.add_argument("--m", type=int, default=3)
    p_sweep.add_argument("--direction", choices=sorted(_DIRECTIONS) + ["both"], default="both")
    p_sweep.add_argument("--mode", choices=["full", "ft", "both"], default="both")
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--cases", action="store_true", help="include per-case entries in the JSON")

    p_cost = sub.add_parser("cost", help="resource breakdowns")
    p_cost.add_argument("--m", type=int, default=3)
    p_cost.add_argument("--config", default=None, help="JSON file of primitive costs")
    p_cost.add_argument("--epsilon", type=float, default=None)
    p_cost.add_argument("--standard-cost", type=float, default=None,
                        help="user-supplied standard-method total for comparison")
    p_cost.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser("oracle", help="dense-oracle cross-validation")
    p_oracle.add_argument("--m", type=int, default=3)
    p_oracle.add_argument("--trials", type=int, default=100)
    p_oracle.add_argument("--seed", type=int, default=7)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.subcommand == "dump":
            if args.m < 3:
                raise UsageError("m must be >= 3")
            return _cmd_dump(CliConfig("dump", m=args.m))
        if args.subcommand == "convert":
            cfg = CliConfig(
                "convert",
                m=args.m,
                direction=_DIRECTIONS[args.direction],
                mode=args.mode,
                error_spec=args.error,
                branch_spec=args.branch,
                out_path=args.out,
            )
            if cfg.m < 3:
                raise UsageError("m must be >= 3")
            return _cmd_convert(cfg)
        if args.subcommand == "sweep":
            if args.m < 3:
                raise UsageError("m must be >= 3")
            directions = (
                ["forward", "backward"] if args.direction == "both" else [_DIRECTIONS[args.direction]]
            )
            modes = ["full", "ft"] if args.mode == "both" else [args.mode]
            cfg = CliConfig("sweep", m=args.m, out_path=args.out)
            return _cmd_sweep(cfg, directions, modes, args.cases)
        if args.subcommand == "cost":
            cfg = CliConfig("cost", m=args.m, cost_config=args.config, epsilon=args.epsilon)
            return _cmd_cost(cfg, args.standard_cost, args.json)
        if args.subcommand == "oracle":
            cfg = CliConfig("oracle", m=args.m, trials=args.trials, seed=args.seed)
            return _cmd_oracle(cfg)
        raise UsageError(f"unknown subcommand {args.subcommand!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
