"""Domain types and portfolio validation.

Everything here is an immutable value object. Construction is deliberately
permissive for portfolio-side types (workloads, schedules, CLIC config) so
that ``validate_portfolio`` can report range violations as findings instead
of crashing; calibration-side inputs (deployment records, effort curves,
registries) reject bad values at construction because they feed directly
into constant estimation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Mapping, Optional

from .errors import UnknownIndustryError


class Quadrant(Enum):
    """A cell of the isolation/control plane.

    Q2 is the lone quadrant to the right of the CLIC: it demands both strong
    isolation and strong architectural control. Q1 keeps control but relaxes
    isolation, Q4 keeps isolation but relinquishes control, Q3 relaxes both.
    """

    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"
    Q4 = "Q4"

    @property
    def high_isolation(self) -> bool:
        return self in (Quadrant.Q2, Quadrant.Q4)

    @property
    def high_control(self) -> bool:
        return self in (Quadrant.Q1, Quadrant.Q2)

    @property
    def right_of_clic(self) -> bool:
        return self is Quadrant.Q2


class NfrGrade(Enum):
    """Low/Medium/High grade of one non-functional dimension, weighted 1/2/3."""

    L = "L"
    M = "M"
    H = "H"

    @property
    def weight(self) -> int:
        return {"L": 1, "M": 2, "H": 3}[self.value]


@dataclass(frozen=True)
class NfrProfile:
    """Grades for the five non-functional dimensions of an industry's workloads."""

    availability: NfrGrade
    business_continuity: NfrGrade
    security: NfrGrade
    compliance: NfrGrade
    performance: NfrGrade

    def grades(self) -> tuple[NfrGrade, ...]:
        return (
            self.availability,
            self.business_continuity,
            self.security,
            self.compliance,
            self.performance,
        )


@dataclass(frozen=True)
class ClicConfig:
    """Thresholds that place the CLIC on the continuous demand plane.

    A demand at or above its threshold counts as "high"; both axes high puts
    the workload right of the CLIC (Q2).
    """

    isolation_threshold: float = 0.5
    control_threshold: float = 0.5


@dataclass(frozen=True)
class WindowOverride:
    """Per-window requirement override for a workload.

    Demands left as ``None`` inherit the workload's base values. A pinned
    quadrant forces placement for that window regardless of demands (this is
    how what-if moves are expressed).
    """

    window: str
    isolation_demand: Optional[float] = None
    control_demand: Optional[float] = None
    pinned_quadrant: Optional[Quadrant] = None


@dataclass(frozen=True)
class Workload:
    """One deployable component, counted once per time window in exactly one quadrant."""

    id: str
    name: str
    industry: str
    isolation_demand: float
    control_demand: float
    nfr: Optional[NfrProfile] = None
    pinned_quadrant: Optional[Quadrant] = None
    delta_w: Optional[float] = None  # explicit CLIC-constant override for unregistered industries
    overrides: tuple[WindowOverride, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "overrides", tuple(self.overrides))

    def override_for(self, window: str) -> Optional[WindowOverride]:
        for ov in self.overrides:
            if ov.window == window:
                return ov
        return None

    def demands_in(self, window: str) -> tuple[float, float]:
        """Effective (isolation, control) demands for a window."""
        ov = self.override_for(window)
        iso = self.isolation_demand if ov is None or ov.isolation_demand is None else ov.isolation_demand
        ctl = self.control_demand if ov is None or ov.control_demand is None else ov.control_demand
        return iso, ctl


@dataclass(frozen=True)
class Portfolio:
    """A set of workloads plus the schedule of time windows they are planned over."""

    workloads: tuple[Workload, ...] = ()
    schedule: tuple[str, ...] = ("default",)
    clic: ClicConfig = ClicConfig()

    def __post_init__(self):
        object.__setattr__(self, "workloads", tuple(self.workloads))
        object.__setattr__(self, "schedule", tuple(self.schedule))

    def workload(self, workload_id: str) -> Optional[Workload]:
        for w in self.workloads:
            if w.id == workload_id:
                return w
        return None


@dataclass(frozen=True)
class QuadrantCounts:
    """Number of workload components per quadrant; w2 counts everything right of the CLIC."""

    w1: int = 0
    w2: int = 0
    w3: int = 0
    w4: int = 0

    def __post_init__(self):
        for name in ("w1", "w2", "w3", "w4"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

    @property
    def total(self) -> int:
        return self.w1 + self.w2 + self.w3 + self.w4

    def count_for(self, quadrant: Quadrant) -> int:
        return {
            Quadrant.Q1: self.w1,
            Quadrant.Q2: self.w2,
            Quadrant.Q3: self.w3,
            Quadrant.Q4: self.w4,
        }[quadrant]

    def as_dict(self) -> dict[str, int]:
        return {"w1": self.w1, "w2": self.w2, "w3": self.w3, "w4": self.w4}


def normalize_industry(industry: str) -> str:
    """Canonical registry key for an industry grouping label."""
    return industry.strip().lower()


@dataclass(frozen=True)
class IndustryRegistry:
    """Industry grouping -> CLIC constant (the per-industry saturation count)."""

    entries: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        normalized = {}
        for industry, delta in dict(self.entries).items():
            delta = float(delta)
            if delta <= 0:
                raise ValueError(f"CLIC constant for {industry!r} must be positive, got {delta}")
            normalized[normalize_industry(industry)] = delta
        object.__setattr__(self, "entries", normalized)

    def get(self, industry: str) -> Optional[float]:
        return self.entries.get(normalize_industry(industry))

    def require(self, industry: str) -> float:
        delta = self.get(industry)
        if delta is None:
            raise UnknownIndustryError(industry)
        return delta

    def delta_for(self, workload: Workload) -> float:
        """Effective CLIC constant: workload override wins over the registry entry."""
        if workload.delta_w is not None:
            return float(workload.delta_w)
        return self.require(workload.industry)

    def with_entries(self, entries: Mapping[str, float]) -> "IndustryRegistry":
        merged = dict(self.entries)
        merged.update(entries)
        return IndustryRegistry(merged)

    def as_dict(self) -> dict[str, float]:
        return dict(self.entries)


@dataclass(frozen=True)
class ProviderProfile:
    """Provider-side constants of the effort model.

    ``k`` converts hybrid complexity into person-months; ``x_by_industry``
    grades how much reusable asset leverage the provider has per industry
    (smaller x = better assets = less effort).
    """

    k: float
    x_by_industry: Mapping[str, float] = field(default_factory=dict)
    default_x: float = 1.0

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError(f"complexity-to-effort constant must be positive, got {self.k}")
        normalized = {}
        for industry, x in dict(self.x_by_industry).items():
            x = float(x)
            if not 0 < x <= 1:
                raise ValueError(f"asset leverage factor for {industry!r} must be in (0, 1], got {x}")
            normalized[normalize_industry(industry)] = x
        object.__setattr__(self, "x_by_industry", normalized)
        if not 0 < self.default_x <= 1:
            raise ValueError(f"default asset leverage factor must be in (0, 1], got {self.default_x}")

    def x_for(self, industry: str) -> float:
        return self.x_by_industry.get(normalize_industry(industry), self.default_x)

    def as_dict(self) -> dict:
        return {"k": self.k, "x_by_industry": dict(self.x_by_industry), "default_x": self.default_x}


@dataclass(frozen=True)
class EngagementFactors:
    """Engagement-specific custom work complexity factor (smaller y = more bespoke work)."""

    y: float = 1.0

    def __post_init__(self):
        if not 0 < self.y <= 1:
            raise ValueError(f"custom work complexity factor must be in (0, 1], got {self.y}")


@dataclass(frozen=True)
class DeploymentRecord:
    """One historical deployment used for calibration.

    Supplies either the quadrant counts (complexity is recomputed) or a
    precomputed complexity value, never both.
    """

    industry: str
    observed_effort: float
    x: float
    y: float
    counts: Optional[QuadrantCounts] = None
    h: Optional[float] = None
    custom_effort: Optional[float] = None

    def __post_init__(self):
        if (self.counts is None) == (self.h is None):
            raise ValueError("exactly one of counts / h must be supplied")
        if self.h is not None and not 0 <= self.h <= 1:
            raise ValueError(f"precomputed complexity must be in [0, 1], got {self.h}")
        if self.observed_effort < 0:
            raise ValueError(f"observed effort must be non-negative, got {self.observed_effort}")
        if not 0 < self.x <= 1:
            raise ValueError(f"asset leverage factor must be in (0, 1], got {self.x}")
        if not 0 < self.y <= 1:
            raise ValueError(f"custom work complexity factor must be in (0, 1], got {self.y}")
        if self.custom_effort is not None:
            if self.custom_effort < 0:
                raise ValueError(f"custom effort must be non-negative, got {self.custom_effort}")
            if self.custom_effort > self.observed_effort:
                raise ValueError("custom effort cannot exceed observed effort")


@dataclass(frozen=True)
class EffortCurve:
    """Normalized deployment effort sampled at increasing workload counts."""

    points: tuple[tuple[int, float], ...]

    def __post_init__(self):
        points = tuple((int(w), float(e)) for w, e in self.points)
        if len(points) < 4:
            raise ValueError(f"effort curve needs at least 4 points for plateau estimation, got {len(points)}")
        for i, (w, e) in enumerate(points):
            if w <= 0:
                raise ValueError(f"workload counts must be positive, got {w} at index {i}")
            if e < 0:
                raise ValueError(f"efforts must be non-negative, got {e} at index {i}")
            if i and w <= points[i - 1][0]:
                raise ValueError(f"workload counts must be strictly increasing (index {i})")
        object.__setattr__(self, "points", points)


@dataclass(frozen=True)
class Finding:
    """One validation finding; errors block evaluation, warnings do not."""

    severity: str  # "error" | "warning"
    path: str
    message: str


def _check_demand(findings: list[Finding], path: str, value) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        findings.append(Finding("error", path, f"demand must be a number, got {value!r}"))
    elif not 0 <= value <= 1:
        findings.append(Finding("error", path, f"demand must be within [0, 1], got {value}"))


def validate_portfolio(portfolio: Portfolio, registry: IndustryRegistry) -> list[Finding]:
    """Check every portfolio invariant and return the findings.

    Total by design: any structurally readable portfolio yields a findings
    list (empty iff clean), never an exception.
    """
    findings: list[Finding] = []

    if not portfolio.schedule:
        findings.append(Finding("error", "schedule", "portfolio needs at least one window"))
    seen_windows = set()
    for i, window in enumerate(portfolio.schedule):
        if window in seen_windows:
            findings.append(Finding("error", f"schedule[{i}]", f"duplicate window label {window!r}"))
        seen_windows.add(window)

    for name in ("isolation_threshold", "control_threshold"):
        value = getattr(portfolio.clic, name)
        if not 0 < value < 1:
            findings.append(Finding("error", f"clic.{name}", f"threshold must be strictly inside (0, 1), got {value}"))

    seen_ids = set()
    for i, w in enumerate(portfolio.workloads):
        prefix = f"workloads[{i}]"
        if not w.id:
            findings.append(Finding("error", f"{prefix}.id", "workload id must be non-empty"))
        if w.id in seen_ids:
            findings.append(Finding("error", f"{prefix}.id", f"duplicate workload id {w.id!r}"))
        seen_ids.add(w.id)

        _check_demand(findings, f"{prefix}.isolation_demand", w.isolation_demand)
        _check_demand(findings, f"{prefix}.control_demand", w.control_demand)

        registered = registry.get(w.industry) is not None
        if not registered and w.delta_w is None:
            findings.append(Finding("error", f"{prefix}.industry", f"unknown industry {w.industry!r}"))
        if w.delta_w is not None:
            if w.delta_w <= 0:
                findings.append(Finding("error", f"{prefix}.delta_w", f"CLIC-constant override must be positive, got {w.delta_w}"))
            elif registered and registry.get(w.industry) != float(w.delta_w):
                findings.append(Finding("warning", f"{prefix}.delta_w", f"override {w.delta_w} shadows the registry value for {w.industry!r}"))

        seen_override_windows = set()
        for j, ov in enumerate(w.overrides):
            opath = f"{prefix}.overrides[{j}]"
            if ov.window not in seen_windows:
                findings.append(Finding("error", f"{opath}.window", f"window {ov.window!r} is not in the portfolio schedule"))
            if ov.window in seen_override_windows:
                findings.append(Finding("error", f"{opath}.window", f"duplicate override for window {ov.window!r}"))
            seen_override_windows.add(ov.window)
            if ov.isolation_demand is not None:
                _check_demand(findings, f"{opath}.isolation_demand", ov.isolation_demand)
            if ov.control_demand is not None:
                _check_demand(findings, f"{opath}.control_demand", ov.control_demand)

    return findings


def display_round(value: float, decimals: int = 2) -> float:
    """Half-up rounding used at presentation boundaries (native round is banker's)."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))
