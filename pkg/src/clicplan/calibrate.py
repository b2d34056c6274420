"""Estimation of the model's empirical constants from historical deployments.

Covers the complexity-to-effort constant (per-record inversion plus a
cumulative moving average), effort normalization, CLIC-constant estimation
from the plateau of an effort curve, the non-functional complexity
quotient, and the quotient/CLIC-constant consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexity import hybrid_complexity
from .errors import NoPlateauError, NotCalibratableError
from .model import DeploymentRecord, EffortCurve, IndustryRegistry, NfrProfile

# Gaps this close to the tolerance (relative) are treated as at-the-boundary,
# i.e. not strictly below it; keeps exact-boundary curves out of the plateau
# despite float representation noise.
_TAU_BOUNDARY_GUARD = 1e-9


@dataclass(frozen=True)
class KCalibration:
    """Per-record complexity-to-effort constants and their running average."""

    k_values: tuple[float, ...]
    cma_values: tuple[float, ...]

    @property
    def count(self) -> int:
        return len(self.k_values)

    @property
    def k(self) -> float:
        """Calibrated constant: the cumulative moving average over all records."""
        return self.cma_values[-1]


@dataclass(frozen=True)
class PlateauParams:
    """Criterion for reading the CLIC constant off an effort curve.

    A point marks the plateau when the next ``min_tail`` consecutive gaps
    each grow effort by strictly less than ``tau`` (relative increase).
    """

    tau: float = 0.05
    min_tail: int = 2

    def __post_init__(self):
        if not 0 < self.tau < 1:
            raise ValueError(f"tau must be in (0, 1), got {self.tau}")
        if self.min_tail < 1:
            raise ValueError(f"min_tail must be at least 1, got {self.min_tail}")


def record_complexity(record: DeploymentRecord, registry: IndustryRegistry) -> float:
    """Hybrid complexity of a record, recomputed from counts when not supplied."""
    if record.h is not None:
        return record.h
    return hybrid_complexity(record.counts, registry.require(record.industry))


def infer_k(record: DeploymentRecord, registry: IndustryRegistry) -> float:
    """Invert the effort model for one record: k = (E / H) * (y / x)."""
    h = record_complexity(record, registry)
    if h == 0:
        raise NotCalibratableError(f"record for {record.industry!r} has zero hybrid complexity")
    if record.observed_effort <= 0:
        raise NotCalibratableError(f"record for {record.industry!r} has no observed effort")
    return (record.observed_effort / h) * (record.y / record.x)


def aggregate_k(records: Sequence[DeploymentRecord], registry: IndustryRegistry) -> KCalibration:
    """Calibrate k over a record set via the cumulative moving average, in input order."""
    if not records:
        raise NotCalibratableError("cannot calibrate k from an empty record set")
    k_values: list[float] = []
    cma_values: list[float] = []
    cma = 0.0
    for n, record in enumerate(records, start=1):
        k = infer_k(record, registry)
        cma = cma + (k - cma) / n
        k_values.append(k)
        cma_values.append(cma)
    return KCalibration(k_values=tuple(k_values), cma_values=tuple(cma_values))


def normalize_effort(observed: float, custom_effort: float, x: float) -> float:
    """Strip the custom-work share and the provider's asset leverage from an observation."""
    if observed < 0 or custom_effort < 0:
        raise ValueError("efforts must be non-negative")
    if custom_effort > observed:
        raise ValueError(f"custom effort {custom_effort} exceeds observed effort {observed}")
    if not 0 < x <= 1:
        raise ValueError(f"asset leverage factor must be in (0, 1], got {x}")
    return (observed - custom_effort) / x


def _relative_gap(current: float, nxt: float) -> float:
    if current == 0:
        return 0.0 if nxt == 0 else float("inf")
    return nxt / current - 1.0


def estimate_delta_w(curve: EffortCurve, params: PlateauParams = PlateauParams()) -> float:
    """Workload count at which the effort curve plateaus (the CLIC constant).

    Returns the smallest sampled count whose next ``min_tail`` gaps all grow
    effort by strictly less than ``tau``; raises NoPlateauError when no
    point qualifies within the data.
    """
    points = curve.points
    threshold = params.tau * (1.0 - _TAU_BOUNDARY_GUARD)
    for i in range(len(points) - params.min_tail):
        gaps_ok = all(
            _relative_gap(points[j][1], points[j + 1][1]) < threshold
            for j in range(i, i + params.min_tail)
        )
        if gaps_ok:
            return float(points[i][0])
    raise NoPlateauError(params.tau, params.min_tail, len(points))


def complexity_quotient(nfr: NfrProfile) -> int:
    """Sum of the five non-functional grade weights (5 when all low, 15 when all high)."""
    return sum(grade.weight for grade in nfr.grades())


@dataclass(frozen=True)
class QuotientDeltaViolation:
    """A pair of industries where a higher quotient did not come with a lower CLIC constant."""

    industry_high: str
    quotient_high: int
    delta_high: float
    industry_low: str
    quotient_low: int
    delta_low: float

    @property
    def message(self) -> str:
        return (
            f"{self.industry_high!r} has a higher complexity quotient than {self.industry_low!r} "
            f"({self.quotient_high} > {self.quotient_low}) but a larger CLIC constant "
            f"({self.delta_high} > {self.delta_low})"
        )


def check_quotient_delta_consistency(
    table: Iterable[tuple[str, int, float]],
) -> list[QuotientDeltaViolation]:
    """Verify the quotient/CLIC-constant relation is weakly antitone across all pairs."""
    rows = list(table)
    violations = []
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            a, b = rows[i], rows[j]
            if a[1] < b[1]:
                a, b = b, a
            if a[1] > b[1] and a[2] > b[2]:
                violations.append(
                    QuotientDeltaViolation(
                        industry_high=a[0], quotient_high=a[1], delta_high=float(a[2]),
                        industry_low=b[0], quotient_low=b[1], delta_low=float(b[2]),
                    )
                )
    return violations
