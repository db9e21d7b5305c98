"""Resource accounting for one fault-tolerant logical T via code conversion.

Two breakdowns share the same structure: convert up, apply bitwise T,
convert back, with a stabilizer-measurement round and an expected fixing
cost on each leg. ``cost_adp14`` prices the baseline that measures all 14
checks of the 15-qubit code (eight weight-8, six weight-4); ``cost_ours``
prices the simplified plans of this package (eight weight-4 forward, seven
weight-4 backward). Primitive costs are inputs, not outputs: the published
absolute totals for this comparison depend on an external reference's
primitive cost tables, so configurations supply them and this module only
guarantees the structural claims (line items, totals, and the strict
dominance of the simplified method for positive primitives).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .conversion import SyndromePlan

ABSOLUTE_TOTALS_NOTE = (
    "Absolute published totals for this comparison are not reproducible from "
    "this model alone: they require the external reference's primitive cost "
    "tables (entangleS, AvgCost per stabilizer weight), which are inputs here."
)


class CostModelError(Exception):
    pass


@dataclass(frozen=True)
class CostModel:
    """Primitive costs: gates, the entangled-ancilla input, and per-weight
    average stabilizer-measurement costs, plus the assumed error rate."""

    entangle_s: float = 0.0
    cost_x: float = 1.0
    cost_z: float = 1.0
    cost_t: float = 1.0
    avg_stab_cost: dict[int, float] = field(default_factory=lambda: {4: 1.0, 8: 1.0})
    epsilon: float = 1e-6

    def __post_init__(self) -> None:
        values = [self.entangle_s, self.cost_x, self.cost_z, self.cost_t]
        values += list(self.avg_stab_cost.values())
        if any(v < 0 for v in values):
            raise CostModelError("primitive costs must be nonnegative")
        if not 0.0 < self.epsilon < 1.0:
            raise CostModelError("epsilon must lie in (0, 1)")
        weights = sorted(self.avg_stab_cost)
        costs = [self.avg_stab_cost[w] for w in weights]
        if any(a > b for a, b in zip(costs, costs[1:])):
            raise CostModelError("average stabilizer cost must be nondecreasing in weight")

    def stab(self, weight: int) -> float:
        try:
            return self.avg_stab_cost[weight]
        except KeyError:
            raise CostModelError(f"missing AvgCost for weight-{weight} stabilizers") from None

    @classmethod
    def unit(cls, epsilon: float = 1e-6) -> CostModel:
        return cls(epsilon=epsilon)

    @classmethod
    def from_json(cls, path: str | Path) -> CostModel:
        raw = json.loads(Path(path).read_text())
        return cls(
            entangle_s=float(raw.get("entangle_s", 0.0)),
            cost_x=float(raw.get("cost_x", 1.0)),
            cost_z=float(raw.get("cost_z", 1.0)),
            cost_t=float(raw.get("cost_t", 1.0)),
            avg_stab_cost={int(k): float(v) for k, v in raw.get("avg_stab_cost", {"4": 1.0, "8": 1.0}).items()},
            epsilon=float(raw.get("epsilon", 1e-6)),
        )


@dataclass(frozen=True)
class LineItem:
    label: str
    formula: str
    value: float


@dataclass(frozen=True)
class CostBreakdown:
    method: str
    line_items: tuple[LineItem, ...]
    epsilon: float
    note: str = ABSOLUTE_TOTALS_NOTE

    @property
    def total(self) -> float:
        return sum(item.value for item in self.line_items)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "epsilon": self.epsilon,
            "line_items": [
                {"label": it.label, "formula": it.formula, "value": it.value}
                for it in self.line_items
            ],
            "total": self.total,
            "note": self.note,
        }

    def render_table(self) -> str:
        width = max(len(it.label) for it in self.line_items)
        lines = [f"{self.method} (epsilon={self.epsilon:g})"]
        for it in self.line_items:
            lines.append(f"  {it.label:<{width}}  {it.value:>10.4f}  {it.formula}")
        lines.append(f"  {'total':<{width}}  {self.total:>10.4f}")
        return "\n".join(lines)


# Expected fixing-operation weights: forward applies a weight-4 X string in
# 7 of 8 branches; backward applies weight 4 in 6 of 8 branches and weight
# 8 in one (the remaining branch needs no fix).
_FWD_FIX = (0.875, 4)
_BWD_FIX = ((0.75, 4), (0.125, 8))


def cost_adp14(model: CostModel) -> CostBreakdown:
    """Baseline: both conversion legs measure all 14 stabilizers."""
    qec = 8 * model.stab(8) + 6 * model.stab(4)
    qec_formula = "8*AvgCost(S_i,8) + 6*AvgCost(S_i,4)"
    items = (
        LineItem("Cost(ancillary)", "Cost(entangleS)", model.entangle_s),
        LineItem("Cost(QEC_RM)", qec_formula, qec),
        LineItem("Cost(fix operation)", "0.875*4*Cost(X)", _FWD_FIX[0] * _FWD_FIX[1] * model.cost_x),
        LineItem("Cost(T)", "15*Cost(T)", 15 * model.cost_t),
        LineItem("Cost(QEC_RM)", qec_formula, qec),
        LineItem(
            "Cost(fix operation)",
            "0.75*4*Cost(Z) + 0.125*8*Cost(Z)",
            sum(p * w for p, w in _BWD_FIX) * model.cost_z,
        ),
    )
    return CostBreakdown(method="ADP14", line_items=items, epsilon=model.epsilon)


def cost_ours(model: CostModel) -> CostBreakdown:
    """Simplified plans: eight weight-4 checks up, seven weight-4 back."""
    items = (
        LineItem("Cost(ancillary)", "Cost(entangleS)", model.entangle_s),
        LineItem("Cost(QEC_RM)", "8*AvgCost(S_i,4)", 8 * model.stab(4)),
        LineItem("Cost(fix operation)", "0.875*4*Cost(X)", _FWD_FIX[0] * _FWD_FIX[1] * model.cost_x),
        LineItem("Cost(T)", "15*Cost(T)", 15 * model.cost_t),
        LineItem("Cost(QEC_RM)", "7*AvgCost(S_i,4)", 7 * model.stab(4)),
        LineItem(
            "Cost(fix operation)",
            "0.75*4*Cost(Z) + 0.125*8*Cost(Z)",
            sum(p * w for p, w in _BWD_FIX) * model.cost_z,
        ),
    )
    return CostBreakdown(method="simplified conversion", line_items=items, epsilon=model.epsilon)


def count_resources(plan: SyndromePlan, pre_split: bool = False) -> tuple[int, int]:
    """(measurement count, summed operator weight) for a plan.

    ``pre_split`` counts the split halves as their one parent stabilizer;
    the summed weight is unaffected by splitting.
    """
    count, weight = plan.counts()
    if pre_split:
        count = plan.pre_split_count()
    return count, weight
