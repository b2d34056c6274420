"""End-to-end evaluation: portfolio in, self-describing report out.

The pipeline demarcates the workloads right of the CLIC, splits the rest
over the remaining quadrants, resolves each group's CLIC constant, deduces
the per-window hybrid complexity, and predicts the effort estimate. The
report records every constant and convention it used, so each number in it
is recomputable from the report alone.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .complexity import DEFAULT_QUADRANT_WEIGHTS, QuadrantWeights
from .effort import variance_pct
from .model import (
    EngagementFactors,
    IndustryRegistry,
    Portfolio,
    ProviderProfile,
    display_round,
)
from .partition import relative_cost
from .scenario import GroupEvaluation, Move, WhatIfDelta, evaluate_groups, what_if

H_DECIMALS = 4
H_DISPLAY_DECIMALS = 2
EFFORT_DECIMALS = 1


@dataclass(frozen=True)
class EvaluationReport:
    """Everything the evaluation produced, plus the constants that produced it."""

    portfolio_digest: str
    schedule: tuple[str, ...]
    groups: tuple[GroupEvaluation, ...]
    provider: ProviderProfile
    engagement: EngagementFactors
    registry: IndustryRegistry
    weights: QuadrantWeights
    observed_effort: Optional[float] = None
    variance_denominator: str = "predicted"

    @property
    def total_effort_pm(self) -> float:
        """Portfolio effort: sum of each group's peak-window estimate."""
        return sum(g.peak_effort_pm for g in self.groups)

    @property
    def warnings(self) -> tuple[str, ...]:
        return tuple(w for g in self.groups for w in g.plan.warnings)


def portfolio_digest(portfolio: Portfolio) -> str:
    """Stable content digest of a portfolio (used to tie reports to inputs)."""
    from .documents import portfolio_to_dict  # local import: documents imports this module's types

    canonical = json.dumps(portfolio_to_dict(portfolio), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canonical.encode()).hexdigest()[:16]


def estimate_pipeline(
    portfolio: Portfolio,
    registry: IndustryRegistry,
    provider: ProviderProfile,
    engagement: EngagementFactors = EngagementFactors(),
    observed_effort: Optional[float] = None,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
    variance_denominator: str = "predicted",
) -> EvaluationReport:
    """Run partition -> grouping -> complexity timeline -> effort for a portfolio."""
    groups = evaluate_groups(portfolio, registry, provider, engagement, weights)
    return EvaluationReport(
        portfolio_digest=portfolio_digest(portfolio),
        schedule=portfolio.schedule,
        groups=groups,
        provider=provider,
        engagement=engagement,
        registry=registry,
        weights=weights,
        observed_effort=observed_effort,
        variance_denominator=variance_denominator,
    )


def _group_payload(group: GroupEvaluation, weights: QuadrantWeights) -> dict:
    windows = []
    for wc in group.complexity.windows:
        windows.append(
            {
                "window": wc.window,
                "counts": wc.counts.as_dict(),
                "h": display_round(wc.h, H_DECIMALS),
                "h_display": display_round(wc.h, H_DISPLAY_DECIMALS),
                "terms": {q.value: display_round(t, H_DECIMALS) for q, t in wc.terms.items()},
                "effort_pm": display_round(group.effort_by_window[wc.window], EFFORT_DECIMALS),
                "relative_cost": relative_cost(wc.counts, weights),
            }
        )
    placements = []
    for workload_id in group.workload_ids:
        placements.append(
            {
                "workload_id": workload_id,
                "windows": [
                    {
                        "window": window,
                        "quadrant": group.plan.placements[window][workload_id].quadrant.value,
                        "options": [o.value for o in group.plan.placements[window][workload_id].options],
                    }
                    for window in group.plan.schedule
                ],
            }
        )
    peak = group.peak_window
    return {
        "industry": group.industry,
        "delta_w": group.delta_w,
        "x": group.x,
        "windows": windows,
        "peak": {
            "window": peak,
            "h": display_round(group.peak_h, H_DECIMALS),
            "h_display": display_round(group.peak_h, H_DISPLAY_DECIMALS),
            "effort_pm": display_round(group.peak_effort_pm, EFFORT_DECIMALS),
        },
        "placements": placements,
        "warnings": list(group.plan.warnings),
    }


def report_payload(report: EvaluationReport) -> dict:
    """JSON-compatible payload of a report; identical for every entry point."""
    payload = {
        "portfolio_digest": report.portfolio_digest,
        "schedule": list(report.schedule),
        "groups": [_group_payload(g, report.weights) for g in report.groups],
        "totals": {
            "workload_count": sum(len(g.workload_ids) for g in report.groups),
            "effort_pm": display_round(report.total_effort_pm, EFFORT_DECIMALS),
            "relative_cost": {
                window: sum(relative_cost(g.plan.counts[window], report.weights) for g in report.groups)
                for window in report.schedule
            },
        },
        "provider": {"k": report.provider.k, "y": report.engagement.y},
        "warnings": list(report.warnings),
        "constants": {
            "quadrant_weights": report.weights.as_dict(),
            "delta_w_registry": report.registry.as_dict(),
            "h_decimals": H_DECIMALS,
            "h_display_decimals": H_DISPLAY_DECIMALS,
            "effort_decimals": EFFORT_DECIMALS,
            "effort_input": "h_display",
            "effort_aggregation": "sum_of_group_peak_windows",
            "rounding": "half_up",
            "variance_denominator": report.variance_denominator,
        },
    }
    if report.observed_effort is None:
        payload["variance"] = None
    else:
        predicted = report.total_effort_pm
        payload["variance"] = {
            "convention": report.variance_denominator,
            "predicted_pm": display_round(predicted, EFFORT_DECIMALS),
            "observed_pm": report.observed_effort,
            "pct": display_round(
                variance_pct(predicted, report.observed_effort, report.variance_denominator), 1
            ),
        }
    return payload


def _delta_payload(delta: WhatIfDelta) -> dict:
    before_by_group = {g.industry: g for g in delta.before}
    after_by_group = {g.industry: g for g in delta.after}
    h_rows = []
    for industry, after_group in after_by_group.items():
        before_group = before_by_group.get(industry)
        for wc in after_group.complexity.windows:
            before_h = None
            if before_group is not None:
                before_h = next(w.h for w in before_group.complexity.windows if w.window == wc.window)
            h_rows.append(
                {
                    "industry": industry,
                    "window": wc.window,
                    "before": None if before_h is None else display_round(before_h, H_DECIMALS),
                    "after": display_round(wc.h, H_DECIMALS),
                    "delta": None if before_h is None else display_round(wc.h - before_h, H_DECIMALS),
                }
            )
    effort_rows = []
    for industry, after_group in after_by_group.items():
        before_group = before_by_group.get(industry)
        before_pm = None if before_group is None else before_group.peak_effort_pm
        effort_rows.append(
            {
                "industry": industry,
                "before": None if before_pm is None else display_round(before_pm, EFFORT_DECIMALS),
                "after": display_round(after_group.peak_effort_pm, EFFORT_DECIMALS),
                "delta": None if before_pm is None else display_round(after_group.peak_effort_pm - before_pm, EFFORT_DECIMALS),
            }
        )
    return {
        "h_by_group_window": h_rows,
        "effort_by_group": effort_rows,
        "total_effort_pm": {
            "before": display_round(delta.total_effort_before, EFFORT_DECIMALS),
            "after": display_round(delta.total_effort_after, EFFORT_DECIMALS),
            "delta": display_round(delta.total_effort_after - delta.total_effort_before, EFFORT_DECIMALS),
        },
    }


def whatif_payload(
    delta: WhatIfDelta,
    registry: IndustryRegistry,
    provider: ProviderProfile,
    engagement: EngagementFactors,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> dict:
    """JSON payload for a what-if answer: full before/after reports plus deltas."""
    before_report = estimate_pipeline(delta.portfolio_before, registry, provider, engagement, weights=weights)
    after_report = estimate_pipeline(delta.portfolio_after, registry, provider, engagement, weights=weights)
    return {
        "before": report_payload(before_report),
        "after": report_payload(after_report),
        "delta": _delta_payload(delta),
        "moves": [
            {
                "workload_id": m.move.workload_id,
                "window": m.move.window,
                "target_quadrant": m.move.target_quadrant.value,
                "quadrant_before": m.quadrant_before.value,
                "crossed_clic": m.crossed_clic,
            }
            for m in delta.moves
        ],
        "warnings": list(delta.warnings),
    }


def run_what_if(
    portfolio: Portfolio,
    registry: IndustryRegistry,
    provider: ProviderProfile,
    engagement: EngagementFactors,
    moves: Sequence[Move],
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> dict:
    """Evaluate a move set and return the canonical what-if payload."""
    delta = what_if(portfolio, registry, provider, engagement, moves, weights)
    return whatif_payload(delta, registry, provider, engagement, weights)


def to_canonical_bytes(payload: dict) -> bytes:
    """The one serialization used by both the CLI and the HTTP service."""
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
