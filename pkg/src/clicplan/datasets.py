"""Bundled reference data: the twelve-deployment benchmark and case-study portfolios.

The benchmark rows are historical client deployments across four
industries, each carrying the complexity and effort figures as originally
reported. Three reported figures are not reproducible from the model's own
formulas; those rows are listed in ``KNOWN_DEVIATIONS`` with the value the
formula actually yields, and the regression suite asserts the formula
value, not the misreported one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    ClicConfig,
    NfrGrade,
    NfrProfile,
    Portfolio,
    QuadrantCounts,
    WindowOverride,
    Workload,
)


@dataclass(frozen=True)
class ReferenceDeployment:
    """One benchmark row: quadrant distribution plus reported model figures."""

    row: int
    industry: str
    counts: QuadrantCounts
    delta_w: float
    reported_h: float
    y: float
    reported_effort_pm: float
    reported_variance_pct: float
    label: str = ""


REFERENCE_DEPLOYMENTS = (
    ReferenceDeployment(1, "retail", QuadrantCounts(w1=2, w2=2, w3=1, w4=0), 10.0, 0.29, 0.2, 174.0, 10.0, "retail case study, Apr-Dec"),
    ReferenceDeployment(2, "retail", QuadrantCounts(w1=1, w2=2, w3=2, w4=2), 10.0, 0.38, 1.0, 46.0, 4.0),
    ReferenceDeployment(3, "retail", QuadrantCounts(w1=3, w2=3, w3=3, w4=2), 10.0, 0.48, 0.8, 72.0, 13.0),
    ReferenceDeployment(4, "finance", QuadrantCounts(w1=0, w2=1, w3=1, w4=2), 6.0, 0.31, 0.2, 117.0, 15.0, "banking case study"),
    ReferenceDeployment(5, "finance", QuadrantCounts(w1=4, w2=3, w3=5, w4=2), 6.0, 0.62, 0.3, 186.0, 15.0),
    ReferenceDeployment(6, "finance", QuadrantCounts(w1=5, w2=2, w3=3, w4=5), 6.0, 0.77, 0.4, 173.0, 12.0),
    ReferenceDeployment(7, "healthcare", QuadrantCounts(w1=0, w2=1, w3=2, w4=1), 8.0, 0.25, 0.5, 60.0, 12.0, "health care case study"),
    ReferenceDeployment(8, "healthcare", QuadrantCounts(w1=4, w2=2, w3=4, w4=2), 8.0, 0.50, 0.6, 100.0, 9.0),
    ReferenceDeployment(9, "healthcare", QuadrantCounts(w1=5, w2=2, w3=3, w4=1), 8.0, 0.47, 0.3, 188.0, 2.0),
    ReferenceDeployment(10, "airline", QuadrantCounts(w1=0, w2=1, w3=2, w4=0), 15.0, 0.12, 0.3, 18.0, 8.0, "airline case study"),
    ReferenceDeployment(11, "airline", QuadrantCounts(w1=2, w2=1, w3=4, w4=0), 15.0, 0.21, 0.5, 44.0, 5.0),
    ReferenceDeployment(12, "airline", QuadrantCounts(w1=0, w2=2, w3=5, w4=1), 15.0, 0.23, 0.7, 35.0, 14.0),
)


@dataclass(frozen=True)
class KnownDeviation:
    """A benchmark figure the model's own formula cannot reproduce."""

    row: int
    field: str  # "h" | "effort_pm"
    reported: float
    model_value: float
    note: str


# Recomputing row 6's complexity from its counts yields 0.61, not the
# reported 0.77; rows 4 and 10 report efforts inconsistent with their own
# complexity and factor columns (0.31*150*0.6/0.2 = 139.5, 0.12*150*0.7/0.3
# = 42). The engine reproduces the formulas, so these rows regress against
# the recomputed values.
KNOWN_DEVIATIONS = {
    (6, "h"): KnownDeviation(6, "h", 0.77, 0.61, "counts (5,2,3,5) with CLIC constant 6 recompute to 0.61"),
    (4, "effort_pm"): KnownDeviation(4, "effort_pm", 117.0, 139.5, "0.31 * 150 * 0.6 / 0.2 = 139.5"),
    (10, "effort_pm"): KnownDeviation(10, "effort_pm", 18.0, 42.0, "0.12 * 150 * 0.7 / 0.3 = 42"),
}


def retail_portfolio() -> Portfolio:
    """The retail case study: five workloads over two commercial seasons.

    Order management and billing stay right of the CLIC all year. The
    storefront and the recommendation engine need hypervisor-level control
    during the busy season (Q1) but relax to plain public instances during
    the lean first quarter (Q3); development-and-test stays in Q3 all year.
    """
    lean = "Jan-Mar"
    return Portfolio(
        schedule=("Apr-Dec", lean),
        clic=ClicConfig(0.5, 0.5),
        workloads=(
            Workload("billing", "Legacy billing and financial transactions", "retail", 0.9, 0.85),
            Workload("fulfillment", "Order management and fulfillment", "retail", 0.85, 0.9),
            Workload(
                "storefront",
                "E-commerce storefront",
                "retail",
                0.3,
                0.8,
                overrides=(WindowOverride(window=lean, control_demand=0.2),),
            ),
            Workload(
                "recommendations",
                "Recommendation engine",
                "retail",
                0.25,
                0.7,
                overrides=(WindowOverride(window=lean, control_demand=0.15),),
            ),
            Workload("dev-test", "Development and test", "retail", 0.2, 0.2),
        ),
    )


def banking_portfolio() -> Portfolio:
    """The banking case study: core banking right of the CLIC, two dedicated-VM
    workloads, and one analytics workload on shared public instances."""
    return Portfolio(
        schedule=("default",),
        workloads=(
            Workload("core-banking", "Core banking", "finance", 0.95, 0.9),
            Workload("e-business", "E-business portal", "finance", 0.7, 0.3),
            Workload("mobile-alerts", "Mobile alerts", "finance", 0.65, 0.25),
            Workload("campaigns", "Marketing campaign analytics", "finance", 0.2, 0.2),
        ),
    )


def healthcare_portfolio() -> Portfolio:
    """The health care case study: a regulated monitoring system, two public-cloud
    analytics/archival workloads, and a dedicated collaboration system."""
    return Portfolio(
        schedule=("default",),
        workloads=(
            Workload("cardiac-monitoring", "Cardiac parameter monitoring", "healthcare", 0.95, 0.85),
            Workload("predictive-analytics", "Predictive diagnostics analytics", "healthcare", 0.2, 0.25),
            Workload("tele-collaboration", "Doctor-patient collaboration", "healthcare", 0.7, 0.3),
            Workload("image-archive", "Medical image archive", "healthcare", 0.15, 0.1),
        ),
    )


def airline_portfolio() -> Portfolio:
    """The airline case study: a reservation system right of the CLIC and two
    customer-facing workloads on shared public instances."""
    return Portfolio(
        schedule=("default",),
        workloads=(
            Workload("reservations", "Reservation system", "airline", 0.9, 0.9),
            Workload("web-portal", "Customer web portal", "airline", 0.2, 0.3),
            Workload("mobile-booking", "Mobile booking frontend", "airline", 0.25, 0.2),
        ),
    )


def _grades(*levels: str) -> NfrProfile:
    g = [NfrGrade(level) for level in levels]
    return NfrProfile(*g)


@dataclass(frozen=True)
class IndustryNfrRow:
    """Graded non-functional requirements of one industry plus its CLIC constant."""

    industry: str
    nfr: NfrProfile
    quotient: int
    delta_w: float


# Grades averaged over the same 15 deployments per industry that produced
# the CLIC constants; the quotient column is the grade-weight sum.
INDUSTRY_NFR_TABLE = (
    IndustryNfrRow("airline", _grades("M", "M", "L", "L", "M"), 8, 15.0),
    IndustryNfrRow("retail", _grades("M", "M", "M", "M", "M"), 10, 10.0),
    IndustryNfrRow("healthcare", _grades("M", "M", "H", "H", "M"), 12, 8.0),
    IndustryNfrRow("finance", _grades("M", "H", "H", "H", "M"), 13, 6.0),
    IndustryNfrRow("manufacturing", _grades("M", "L", "H", "M", "M"), 10, 10.0),
    IndustryNfrRow("telecom", _grades("M", "H", "M", "H", "H"), 13, 6.0),
)
