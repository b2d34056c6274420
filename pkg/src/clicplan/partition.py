"""Quadrant assignment, placement planning, option catalog, and relative cost.

Placement follows the CLIC: a demand at or above its threshold is "high"
(boundary values deliberately classify high, the conservative deployment
choice). Pinned quadrants win over demand-derived ones with a warning, and
a workload whose placement crosses the CLIC between windows is flagged but
allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .complexity import DEFAULT_QUADRANT_WEIGHTS, QuadrantWeights
from .errors import ValidationFailure
from .model import (
    ClicConfig,
    IndustryRegistry,
    Portfolio,
    Quadrant,
    QuadrantCounts,
    validate_portfolio,
)


class DeploymentOption(Enum):
    """Concrete hosting routes, each tied to exactly one quadrant."""

    PUBLIC_SHARED_VM = "PUBLIC_SHARED_VM"
    PUBLIC_DEDICATED_VM = "PUBLIC_DEDICATED_VM"
    HOSTED_PRIVATE_OFFPREM = "HOSTED_PRIVATE_OFFPREM"
    HOSTED_PRIVATE_ONPREM = "HOSTED_PRIVATE_ONPREM"
    HOSTED_PRIVATE_COLO = "HOSTED_PRIVATE_COLO"
    ONPREM_PRIVATE_CLOUD = "ONPREM_PRIVATE_CLOUD"
    TRADITIONAL_IT = "TRADITIONAL_IT"
    BAREMETAL_ON_PUBLIC = "BAREMETAL_ON_PUBLIC"

    @property
    def description(self) -> str:
        return _OPTION_DESCRIPTIONS[self]

    @property
    def quadrant(self) -> Quadrant:
        for quadrant, options in _OPTION_CATALOG.items():
            if self in options:
                return quadrant
        raise AssertionError(f"option {self} missing from catalog")


_OPTION_DESCRIPTIONS = {
    DeploymentOption.PUBLIC_SHARED_VM: "Public virtual instances on multi-tenant public clouds",
    DeploymentOption.PUBLIC_DEDICATED_VM: "Private virtual machines on single-tenant hosts of a public cloud",
    DeploymentOption.HOSTED_PRIVATE_OFFPREM: "Provider-operated private cloud hosted off-premise",
    DeploymentOption.HOSTED_PRIVATE_ONPREM: "Provider-operated private cloud deployed on-premise",
    DeploymentOption.HOSTED_PRIVATE_COLO: "Provider-operated private cloud in a collocation space beside a public cloud",
    DeploymentOption.ONPREM_PRIVATE_CLOUD: "Self-operated private cloud on the client's own data center",
    DeploymentOption.TRADITIONAL_IT: "Traditional non-cloud IT hosting",
    DeploymentOption.BAREMETAL_ON_PUBLIC: "Single-tenant bare metal servers on demand in a public cloud",
}

# Catalog order is the recommendation order.
_OPTION_CATALOG = {
    Quadrant.Q3: (DeploymentOption.PUBLIC_SHARED_VM,),
    Quadrant.Q4: (DeploymentOption.PUBLIC_DEDICATED_VM,),
    Quadrant.Q1: (
        DeploymentOption.HOSTED_PRIVATE_OFFPREM,
        DeploymentOption.HOSTED_PRIVATE_ONPREM,
        DeploymentOption.HOSTED_PRIVATE_COLO,
    ),
    Quadrant.Q2: (
        DeploymentOption.ONPREM_PRIVATE_CLOUD,
        DeploymentOption.TRADITIONAL_IT,
        DeploymentOption.BAREMETAL_ON_PUBLIC,
    ),
}


@dataclass(frozen=True)
class Placement:
    """Quadrant plus recommended hosting options for one workload in one window."""

    quadrant: Quadrant
    options: tuple[DeploymentOption, ...]


@dataclass(frozen=True)
class PlacementPlan:
    """Every workload placed in every window, with per-window quadrant tallies."""

    schedule: tuple[str, ...]
    placements: dict[str, dict[str, Placement]]  # window -> workload id -> placement
    counts: dict[str, QuadrantCounts]  # window -> tallies
    warnings: tuple[str, ...] = ()


def _check_demand_range(isolation_demand: float, control_demand: float) -> None:
    if not 0 <= isolation_demand <= 1:
        raise ValueError(f"isolation demand must be within [0, 1], got {isolation_demand}")
    if not 0 <= control_demand <= 1:
        raise ValueError(f"control demand must be within [0, 1], got {control_demand}")


def assign_quadrant(isolation_demand: float, control_demand: float, clic: ClicConfig) -> Quadrant:
    """Map a demand pair to its CLIC quadrant (boundary values classify high)."""
    _check_demand_range(isolation_demand, control_demand)
    high_iso = isolation_demand >= clic.isolation_threshold
    high_ctl = control_demand >= clic.control_threshold
    if high_iso and high_ctl:
        return Quadrant.Q2
    if high_ctl:
        return Quadrant.Q1
    if high_iso:
        return Quadrant.Q4
    return Quadrant.Q3


def recommend_options(quadrant: Quadrant) -> list[DeploymentOption]:
    """Feasible hosting routes for a quadrant, in catalog order."""
    return list(_OPTION_CATALOG[quadrant])


def relative_cost(counts: QuadrantCounts, weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS) -> float:
    """Relative deployment-and-management cost of a distribution, in normalized units."""
    return (
        weights.q1 * counts.w1
        + weights.q2 * counts.w2
        + weights.q3 * counts.w3
        + weights.q4 * counts.w4
    )


# Tie-break preference when weights tie: relinquishing control (Q4) beats
# relinquishing isolation (Q1), since control is the scarcer resource.
_FEASIBILITY_PREFERENCE = (Quadrant.Q3, Quadrant.Q4, Quadrant.Q1, Quadrant.Q2)


def cheapest_feasible_quadrant(
    isolation_demand: float,
    control_demand: float,
    clic: ClicConfig,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> Quadrant:
    """Cheapest quadrant whose provided isolation/control levels cover the demands."""
    _check_demand_range(isolation_demand, control_demand)
    need_iso = isolation_demand >= clic.isolation_threshold
    need_ctl = control_demand >= clic.control_threshold
    feasible = [
        q
        for q in _FEASIBILITY_PREFERENCE
        if (q.high_isolation or not need_iso) and (q.high_control or not need_ctl)
    ]
    return min(feasible, key=lambda q: (weights.weight(q), _FEASIBILITY_PREFERENCE.index(q)))


def effective_quadrant(workload, window: str, clic: ClicConfig) -> tuple[Quadrant, Quadrant, Optional[Quadrant]]:
    """Resolve one workload's placement in one window.

    Returns (effective, derived, pinned): the final quadrant (the pin when
    present, else the derived one), the demand-derived quadrant, and the pin
    that applies (a window pin wins over the workload-level pin).
    """
    iso, ctl = workload.demands_in(window)
    derived = assign_quadrant(iso, ctl, clic)
    override = workload.override_for(window)
    pinned = override.pinned_quadrant if override and override.pinned_quadrant else workload.pinned_quadrant
    return pinned or derived, derived, pinned


def build_plan(portfolio: Portfolio, registry: IndustryRegistry) -> PlacementPlan:
    """Place every workload in every window and tally the quadrant distribution.

    Raises ValidationFailure when the portfolio has error findings. Warnings
    cover pinned placements that contradict the demand-derived quadrant and
    placements that cross the CLIC between consecutive windows.
    """
    errors = [f for f in validate_portfolio(portfolio, registry) if f.severity == "error"]
    if errors:
        raise ValidationFailure(errors)

    warnings: list[str] = []
    placements: dict[str, dict[str, Placement]] = {}
    counts: dict[str, QuadrantCounts] = {}

    for window in portfolio.schedule:
        window_placements: dict[str, Placement] = {}
        tally = {q: 0 for q in Quadrant}
        for workload in portfolio.workloads:
            quadrant, derived, pinned = effective_quadrant(workload, window, portfolio.clic)
            if pinned and pinned is not derived:
                warnings.append(
                    f"workload {workload.id!r} pinned to {pinned.value} in window {window!r} "
                    f"but its demands derive {derived.value}"
                )
            window_placements[workload.id] = Placement(quadrant, tuple(recommend_options(quadrant)))
            tally[quadrant] += 1
        placements[window] = window_placements
        counts[window] = QuadrantCounts(
            w1=tally[Quadrant.Q1], w2=tally[Quadrant.Q2], w3=tally[Quadrant.Q3], w4=tally[Quadrant.Q4]
        )

    for workload in portfolio.workloads:
        for prev_window, next_window in zip(portfolio.schedule, portfolio.schedule[1:]):
            before = placements[prev_window][workload.id].quadrant
            after = placements[next_window][workload.id].quadrant
            if before.right_of_clic != after.right_of_clic:
                warnings.append(
                    f"workload {workload.id!r} crosses the CLIC between windows "
                    f"{prev_window!r} ({before.value}) and {next_window!r} ({after.value})"
                )

    return PlacementPlan(
        schedule=portfolio.schedule,
        placements=placements,
        counts=counts,
        warnings=tuple(warnings),
    )
