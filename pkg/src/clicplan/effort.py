"""Deployment-and-sustenance effort prediction.

Effort in person-months is hybrid complexity scaled by the provider's
complexity-to-effort constant, its asset leverage factor, and the
engagement's custom work complexity factor:

    effort = h * k * x / y
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EffortEstimate:
    """A point effort estimate together with the parameters that produced it."""

    h: float
    k: float
    x: float
    y: float
    effort_pm: float


def predict_effort(h: float, k: float, x: float, y: float) -> float:
    """Person-months to deploy and sustain a deployment of complexity ``h`` for one year."""
    if not 0 <= h <= 1:
        raise ValueError(f"hybrid complexity must be in [0, 1], got {h}")
    if k <= 0:
        raise ValueError(f"complexity-to-effort constant must be positive, got {k}")
    if not 0 < x <= 1:
        raise ValueError(f"asset leverage factor must be in (0, 1], got {x}")
    if not 0 < y <= 1:
        raise ValueError(f"custom work complexity factor must be in (0, 1], got {y}")
    return h * k * x / y


def estimate(h: float, k: float, x: float, y: float) -> EffortEstimate:
    return EffortEstimate(h=h, k=k, x=x, y=y, effort_pm=predict_effort(h, k, x, y))


def variance_pct(predicted: float, observed: float, denominator: str = "predicted") -> float:
    """Percentage variance between a predicted and an observed effort.

    The reference column is the predicted value by default; pass
    ``denominator="observed"`` to divide by the observation instead. Zero
    reference with a non-zero deviation is undefined.
    """
    if denominator not in ("predicted", "observed"):
        raise ValueError(f"denominator must be 'predicted' or 'observed', got {denominator!r}")
    if predicted < 0 or observed < 0:
        raise ValueError("efforts must be non-negative")
    reference = predicted if denominator == "predicted" else observed
    deviation = abs(predicted - observed)
    if reference == 0:
        if deviation == 0:
            return 0.0
        raise ValueError(f"variance is undefined when the {denominator} effort is zero")
    return 100.0 * deviation / reference
