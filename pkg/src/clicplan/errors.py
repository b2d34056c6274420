"""Exception hierarchy shared across the planning engine."""

from __future__ import annotations


class PlanningError(Exception):
    """Base class for all engine-raised errors."""


class ValidationFailure(PlanningError):
    """A portfolio failed validation; carries the error findings."""

    def __init__(self, findings):
        self.findings = list(findings)
        lines = "; ".join(f"{f.path}: {f.message}" for f in self.findings)
        super().__init__(f"portfolio validation failed: {lines}")


class UnknownIndustryError(PlanningError):
    """An industry key could not be resolved against the CLIC-constant registry."""

    def __init__(self, industry: str):
        self.industry = industry
        super().__init__(f"unknown industry {industry!r}: no CLIC constant registered and no override supplied")


class UnknownReferenceError(PlanningError):
    """A move or lookup referenced a workload or window that does not exist."""


class NotCalibratableError(PlanningError):
    """A deployment record cannot contribute to calibration (zero complexity or zero effort)."""


class NoPlateauError(PlanningError):
    """An effort curve never satisfies the plateau criterion within the sampled range."""

    def __init__(self, tau: float, min_tail: int, n_points: int):
        self.tau = tau
        self.min_tail = min_tail
        super().__init__(
            f"no plateau found: no point is followed by {min_tail} consecutive gaps "
            f"with relative increase below {tau} (curve has {n_points} points); "
            "extend the curve or supply the CLIC constant manually"
        )


class DocumentParseError(PlanningError):
    """A document failed to parse; path points at the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class RegistryConflictError(PlanningError):
    """A registry write lost a version race against a concurrent writer."""
