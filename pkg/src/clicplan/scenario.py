"""What-if exploration: quadrant moves, industry grouping, and delta evaluation.

Mixed-industry portfolios are evaluated as separate hybrid environments,
one per workload category, each with its own CLIC constant; group
complexities are never blended into a single portfolio-wide value. Every
what-if answer comes from a fresh evaluation of the mutated portfolio, so
there is no incremental-update drift to worry about.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .complexity import (
    DEFAULT_QUADRANT_WEIGHTS,
    ComplexityReport,
    QuadrantWeights,
    hybrid_complexity_timeline,
)
from .effort import predict_effort
from .errors import UnknownReferenceError
from .model import (
    EngagementFactors,
    IndustryRegistry,
    Portfolio,
    ProviderProfile,
    Quadrant,
    WindowOverride,
    Workload,
    display_round,
    normalize_industry,
)
from .partition import PlacementPlan, build_plan, effective_quadrant


@dataclass(frozen=True)
class Move:
    """Pin one workload to a target quadrant for one window."""

    workload_id: str
    window: str
    target_quadrant: Quadrant


@dataclass(frozen=True)
class MoveOutcome:
    """A move as applied, with its CLIC-crossing flag."""

    move: Move
    quadrant_before: Quadrant
    crossed_clic: bool


@dataclass(frozen=True)
class GroupEvaluation:
    """Full evaluation of one industry group: plan, complexity timeline, efforts."""

    industry: str
    delta_w: float
    x: float
    workload_ids: tuple[str, ...]
    plan: PlacementPlan
    complexity: ComplexityReport
    effort_by_window: dict[str, float]

    @property
    def peak_window(self) -> str:
        """Window with the highest complexity (earliest wins ties)."""
        best = self.complexity.windows[0]
        for wc in self.complexity.windows[1:]:
            if wc.h > best.h:
                best = wc
        return best.window

    @property
    def peak_h(self) -> float:
        window = self.peak_window
        return next(wc.h for wc in self.complexity.windows if wc.window == window)

    @property
    def peak_effort_pm(self) -> float:
        return self.effort_by_window[self.peak_window]


@dataclass(frozen=True)
class WhatIfDelta:
    """Before/after evaluations for a move set, plus per-move crossing flags."""

    portfolio_before: Portfolio
    portfolio_after: Portfolio
    before: tuple[GroupEvaluation, ...]
    after: tuple[GroupEvaluation, ...]
    moves: tuple[MoveOutcome, ...]
    warnings: tuple[str, ...]

    @property
    def total_effort_before(self) -> float:
        return sum(g.peak_effort_pm for g in self.before)

    @property
    def total_effort_after(self) -> float:
        return sum(g.peak_effort_pm for g in self.after)


def group_by_industry(portfolio: Portfolio) -> dict[str, Portfolio]:
    """Split a portfolio into per-industry sub-portfolios, first appearance order.

    Each sub-portfolio keeps the full schedule and CLIC config; every
    workload lands in exactly one group, keyed by its own industry field.
    """
    groups: dict[str, list[Workload]] = {}
    for workload in portfolio.workloads:
        groups.setdefault(normalize_industry(workload.industry), []).append(workload)
    return {
        industry: Portfolio(workloads=tuple(members), schedule=portfolio.schedule, clic=portfolio.clic)
        for industry, members in groups.items()
    }


def group_delta_w(industry: str, workloads: Sequence[Workload], registry: IndustryRegistry) -> float:
    """CLIC constant for a group: a unanimous workload override wins, else the registry."""
    workloads = list(workloads)
    values = [float(w.delta_w) for w in workloads if w.delta_w is not None]
    distinct = sorted(set(values))
    registered = registry.get(industry)
    if workloads and len(values) == len(workloads) and len(distinct) == 1:
        return distinct[0]
    if registered is not None:
        return registered
    if len(distinct) == 1:
        return distinct[0]
    if distinct:
        raise ValueError(
            f"conflicting CLIC-constant overrides {distinct} for unregistered industry {industry!r}"
        )
    return registry.require(industry)  # raises UnknownIndustryError


def window_effort(h: float, k: float, x: float, y: float) -> float:
    """Effort for one window, applying the model to the 2-decimal display value of H.

    Reported person-month figures are defined over the complexity value as
    presented (2 decimals, half-up), so a reported H of 0.29 always implies
    the same effort regardless of the digits beyond the display precision.
    """
    return predict_effort(display_round(h, 2), k, x, y)


def evaluate_groups(
    portfolio: Portfolio,
    registry: IndustryRegistry,
    provider: ProviderProfile,
    engagement: EngagementFactors,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> tuple[GroupEvaluation, ...]:
    """Evaluate every industry group: partition, complexity timeline, per-window effort."""
    evaluations = []
    for industry, sub in group_by_industry(portfolio).items():
        delta_w = group_delta_w(industry, sub.workloads, registry)
        plan = build_plan(sub, registry)
        report = hybrid_complexity_timeline(plan, delta_w, weights, industry=industry)
        x = provider.x_for(industry)
        efforts = {
            wc.window: window_effort(wc.h, provider.k, x, engagement.y) for wc in report.windows
        }
        evaluations.append(
            GroupEvaluation(
                industry=industry,
                delta_w=delta_w,
                x=x,
                workload_ids=tuple(w.id for w in sub.workloads),
                plan=plan,
                complexity=report,
                effort_by_window=efforts,
            )
        )
    return tuple(evaluations)


def apply_move(portfolio: Portfolio, move: Move) -> tuple[Portfolio, list[str]]:
    """Pin a workload's window override to the target quadrant, persistently.

    The input portfolio is never mutated; the returned copy carries the pin.
    A move into or out of Q2 earns a CLIC-crossing warning.
    """
    workload = portfolio.workload(move.workload_id)
    if workload is None:
        raise UnknownReferenceError(f"unknown workload {move.workload_id!r}")
    if move.window not in portfolio.schedule:
        raise UnknownReferenceError(f"unknown window {move.window!r}")

    warnings = []
    current, _, _ = effective_quadrant(workload, move.window, portfolio.clic)
    if current.right_of_clic != move.target_quadrant.right_of_clic:
        warnings.append(
            f"move of {move.workload_id!r} in window {move.window!r} crosses the CLIC "
            f"({current.value} -> {move.target_quadrant.value})"
        )

    existing = workload.override_for(move.window)
    if existing is None:
        overrides = workload.overrides + (WindowOverride(window=move.window, pinned_quadrant=move.target_quadrant),)
    else:
        overrides = tuple(
            replace(ov, pinned_quadrant=move.target_quadrant) if ov.window == move.window else ov
            for ov in workload.overrides
        )
    moved = replace(workload, overrides=overrides)
    workloads = tuple(moved if w.id == workload.id else w for w in portfolio.workloads)
    return replace(portfolio, workloads=workloads), warnings


def what_if(
    portfolio: Portfolio,
    registry: IndustryRegistry,
    provider: ProviderProfile,
    engagement: EngagementFactors,
    moves: Sequence[Move],
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> WhatIfDelta:
    """Apply moves in order (last wins per workload/window) and re-evaluate from scratch."""
    warnings: list[str] = []
    outcomes: list[MoveOutcome] = []
    mutated = portfolio
    for move in moves:
        workload = mutated.workload(move.workload_id)
        if workload is None:
            raise UnknownReferenceError(f"unknown workload {move.workload_id!r}")
        if move.window not in mutated.schedule:
            raise UnknownReferenceError(f"unknown window {move.window!r}")
        quadrant_before, _, _ = effective_quadrant(workload, move.window, mutated.clic)
        mutated, move_warnings = apply_move(mutated, move)
        warnings.extend(move_warnings)
        outcomes.append(
            MoveOutcome(
                move=move,
                quadrant_before=quadrant_before,
                crossed_clic=quadrant_before.right_of_clic != move.target_quadrant.right_of_clic,
            )
        )

    before = evaluate_groups(portfolio, registry, provider, engagement, weights)
    after = evaluate_groups(mutated, registry, provider, engagement, weights)
    return WhatIfDelta(
        portfolio_before=portfolio,
        portfolio_after=mutated,
        before=before,
        after=after,
        moves=tuple(outcomes),
        warnings=tuple(warnings),
    )
