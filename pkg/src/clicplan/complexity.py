"""Hybrid deployment complexity.

The metric aggregates one saturating term per quadrant:

    H = w2/(2*w2 + d) + w1/(5*w1 + d) + w3/(10*w3 + d) + w4/(5*w4 + d)

where d is the industry's CLIC constant. Each term multiplier is the total
of the empirical quadrant cost weights (2:5:1:2, total 10) divided by that
quadrant's weight, so the term for quadrant i asymptotes to weight_i/total
as the count grows; the asymptotes sum to exactly 1 and H stays in [0, 1).
All arithmetic is plain double precision; rounding happens only at
presentation boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .model import Quadrant, QuadrantCounts

if TYPE_CHECKING:
    from .partition import PlacementPlan


@dataclass(frozen=True)
class QuadrantWeights:
    """Relative deployment cost per quadrant (the empirical 2:5:1:2 ratio)."""

    q1: float = 2.0
    q2: float = 5.0
    q3: float = 1.0
    q4: float = 2.0

    def __post_init__(self):
        for name in ("q1", "q2", "q3", "q4"):
            if getattr(self, name) <= 0:
                raise ValueError(f"quadrant weight {name} must be positive")

    @property
    def total(self) -> float:
        return self.q1 + self.q2 + self.q3 + self.q4

    def weight(self, quadrant: Quadrant) -> float:
        return {
            Quadrant.Q1: self.q1,
            Quadrant.Q2: self.q2,
            Quadrant.Q3: self.q3,
            Quadrant.Q4: self.q4,
        }[quadrant]

    def multiplier(self, quadrant: Quadrant) -> float:
        """Denominator multiplier of the quadrant's term: total / weight."""
        return self.total / self.weight(quadrant)

    def asymptote(self, quadrant: Quadrant) -> float:
        """Limit of the quadrant's term as its count grows: weight / total."""
        return self.weight(quadrant) / self.total

    def as_dict(self) -> dict[str, float]:
        return {"q1": self.q1, "q2": self.q2, "q3": self.q3, "q4": self.q4}


DEFAULT_QUADRANT_WEIGHTS = QuadrantWeights()


@dataclass(frozen=True)
class WindowComplexity:
    """Complexity of one time window: counts, H, and the four term contributions."""

    window: str
    counts: QuadrantCounts
    h: float
    terms: dict[Quadrant, float]


@dataclass(frozen=True)
class ComplexityReport:
    """Per-window complexity of one industry group evaluated with one CLIC constant."""

    industry: str
    delta_w: float
    windows: tuple[WindowComplexity, ...]


def _check_delta(delta_w: float) -> float:
    delta_w = float(delta_w)
    if delta_w <= 0:
        raise ValueError(f"CLIC constant must be positive, got {delta_w}")
    return delta_w


def complexity_terms(
    counts: QuadrantCounts,
    delta_w: float,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> dict[Quadrant, float]:
    """Per-quadrant term contributions; an empty quadrant contributes exactly 0."""
    delta_w = _check_delta(delta_w)
    terms = {}
    for quadrant in Quadrant:
        count = counts.count_for(quadrant)
        terms[quadrant] = count / (weights.multiplier(quadrant) * count + delta_w) if count else 0.0
    return terms


def hybrid_complexity(
    counts: QuadrantCounts,
    delta_w: float,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
) -> float:
    """Degree of hybrid complexity of the deployment described by ``counts``."""
    return sum(complexity_terms(counts, delta_w, weights).values())


def hybrid_complexity_timeline(
    plan: "PlacementPlan",
    delta_w: float,
    weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS,
    industry: str = "",
) -> ComplexityReport:
    """Time-varying complexity: one (counts, H) evaluation per window, in schedule order."""
    delta_w = _check_delta(delta_w)
    windows = []
    for window in plan.schedule:
        counts = plan.counts[window]
        terms = complexity_terms(counts, delta_w, weights)
        windows.append(WindowComplexity(window, counts, sum(terms.values()), terms))
    return ComplexityReport(industry=industry, delta_w=delta_w, windows=tuple(windows))


def term_asymptotes(weights: QuadrantWeights = DEFAULT_QUADRANT_WEIGHTS) -> dict[Quadrant, float]:
    """Saturation limit of each quadrant's term (0.2/0.5/0.1/0.2 for Q1..Q4 by default)."""
    return {quadrant: weights.asymptote(quadrant) for quadrant in Quadrant}
