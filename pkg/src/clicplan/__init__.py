"""Hybrid-cloud deployment planning engine.

Partitions a workload portfolio across the four CLIC quadrants, scores the
hybrid complexity of the resulting deployment per time window, predicts
deployment-and-sustenance effort in person-months, and calibrates the
model's empirical constants from historical deployment records.
"""

from .calibrate import (
    KCalibration,
    PlateauParams,
    QuotientDeltaViolation,
    aggregate_k,
    check_quotient_delta_consistency,
    complexity_quotient,
    estimate_delta_w,
    infer_k,
    normalize_effort,
)
from .complexity import (
    DEFAULT_QUADRANT_WEIGHTS,
    ComplexityReport,
    QuadrantWeights,
    WindowComplexity,
    complexity_terms,
    hybrid_complexity,
    hybrid_complexity_timeline,
    term_asymptotes,
)
from .defaults import default_industry_registry, default_provider_profile
from .effort import EffortEstimate, predict_effort, variance_pct
from .errors import (
    DocumentParseError,
    NoPlateauError,
    NotCalibratableError,
    PlanningError,
    RegistryConflictError,
    UnknownIndustryError,
    UnknownReferenceError,
    ValidationFailure,
)
from .model import (
    ClicConfig,
    DeploymentRecord,
    EffortCurve,
    EngagementFactors,
    Finding,
    IndustryRegistry,
    NfrGrade,
    NfrProfile,
    Portfolio,
    ProviderProfile,
    Quadrant,
    QuadrantCounts,
    WindowOverride,
    Workload,
    display_round,
    validate_portfolio,
)
from .partition import (
    DeploymentOption,
    Placement,
    PlacementPlan,
    assign_quadrant,
    build_plan,
    cheapest_feasible_quadrant,
    effective_quadrant,
    recommend_options,
    relative_cost,
)
from .pipeline import (
    EvaluationReport,
    estimate_pipeline,
    report_payload,
    run_what_if,
    to_canonical_bytes,
    whatif_payload,
)
from .scenario import (
    GroupEvaluation,
    Move,
    MoveOutcome,
    WhatIfDelta,
    apply_move,
    evaluate_groups,
    group_by_industry,
    what_if,
)

__version__ = "0.1.0"
