"""Gauge-fixing conversion between adjacent punctured Reed-Muller quantum
codes, with exhaustive single-error verification and resource accounting."""

from .gf2 import BitMatrix, BitVector, mat_mul_t, nullspace, rank, solve, vstack
from .pauli import PauliOperator
from .codes import (
    CssCode,
    SubsystemSpec,
    extended_code,
    generator_matrix,
    h_tilde,
    rm_code,
    subsystem_spec,
)
from .engine import (
    EngineError,
    MeasurementResult,
    StabilizerFrame,
    branch_enumerate,
    prepare_extended,
)
from .conversion import (
    CombinationRule,
    ConversionError,
    ConversionReport,
    ErrorDiagnosis,
    PlannedMeasurement,
    SyndromePlan,
    build_plan,
    convert,
    diagnose,
    fix_syndromes,
    solve_fixing_operator,
)
from .dense import DenseState, dense_encode, fidelity
from .harness import (
    CrossValidationResult,
    SweepResult,
    TransversalCheckResult,
    cross_validate,
    sweep,
    transversal_checks,
)
from .cost import (
    CostBreakdown,
    CostModel,
    CostModelError,
    LineItem,
    cost_adp14,
    cost_ours,
    count_resources,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "CombinationRule",
    "ConversionError",
    "ConversionReport",
    "CostBreakdown",
    "CostModel",
    "CostModelError",
    "CrossValidationResult",
    "CssCode",
    "DenseState",
    "EngineError",
    "ErrorDiagnosis",
    "LineItem",
    "MeasurementResult",
    "PauliOperator",
    "PlannedMeasurement",
    "StabilizerFrame",
    "SubsystemSpec",
    "SweepResult",
    "SyndromePlan",
    "TransversalCheckResult",
    "branch_enumerate",
    "build_plan",
    "convert",
    "cost_adp14",
    "cost_ours",
    "count_resources",
    "cross_validate",
    "dense_encode",
    "diagnose",
    "extended_code",
    "fidelity",
    "fix_syndromes",
    "generator_matrix",
    "h_tilde",
    "mat_mul_t",
    "nullspace",
    "prepare_extended",
    "rank",
    "rm_code",
    "solve",
    "solve_fixing_operator",
    "subsystem_spec",
    "sweep",
    "transversal_checks",
    "vstack",
]
