#!/usr/bin/env python3
"""Walk the four bundled case studies end to end.

For each portfolio: place every workload on the isolation/control plane,
tally the quadrant distribution, compute the hybrid complexity, and predict
the deployment-and-sustenance effort. The last section replays the full
twelve-deployment benchmark and shows where the recorded figures disagree
with the model's own arithmetic.
"""

from clicplan import EngagementFactors, build_plan, display_round, hybrid_complexity, predict_effort
from clicplan.datasets import (
    KNOWN_DEVIATIONS,
    REFERENCE_DEPLOYMENTS,
    airline_portfolio,
    banking_portfolio,
    healthcare_portfolio,
    retail_portfolio,
)
from clicplan.defaults import default_industry_registry, default_provider_profile
from clicplan.pipeline import estimate_pipeline, report_payload

registry = default_industry_registry()
provider = default_provider_profile()

CASES = [
    ("Retail (two-season schedule)", retail_portfolio(), 0.2),
    ("Banking", banking_portfolio(), 0.2),
    ("Health care", healthcare_portfolio(), 0.5),
    ("Airline", airline_portfolio(), 0.3),
]

for title, portfolio, y in CASES:
    print(f"\n=== {title} ===")
    plan = build_plan(portfolio, registry)
    for window in portfolio.schedule:
        placements = plan.placements[window]
        print(f"  window {window}: counts {plan.counts[window].as_dict()}")
        for workload in portfolio.workloads:
            placement = placements[workload.id]
            first_option = placement.options[0].value
            print(f"    {workload.id:22s} -> {placement.quadrant.value}  (e.g. {first_option})")
    report = report_payload(estimate_pipeline(portfolio, registry, provider, EngagementFactors(y)))
    group = report["groups"][0]
    for window_row in group["windows"]:
        print(
            f"  H({window_row['window']}) = {window_row['h_display']:.2f}"
            f"   effort = {window_row['effort_pm']:.1f} PM"
            f"   relative cost = {window_row['relative_cost']:.0f}"
        )

print("\n=== Twelve-deployment benchmark ===")
print(f"{'row':>3} {'industry':11} {'counts':20} {'H model':>8} {'H recorded':>10} {'E model':>8} {'E recorded':>10}")
for row in REFERENCE_DEPLOYMENTS:
    h_model = display_round(hybrid_complexity(row.counts, row.delta_w), 2)
    e_model = predict_effort(row.reported_h, provider.k, provider.x_for(row.industry), row.y)
    flags = []
    if (row.row, "h") in KNOWN_DEVIATIONS:
        flags.append("H deviates")
    if (row.row, "effort_pm") in KNOWN_DEVIATIONS:
        flags.append("E deviates")
    print(
        f"{row.row:>3} {row.industry:11} {str(row.counts.as_dict()):20.20s}"
        f" {h_model:>8.2f} {row.reported_h:>10.2f} {e_model:>8.1f} {row.reported_effort_pm:>10.1f}"
        f"  {' / '.join(flags)}"
    )

print("\nDeviation notes:")
for deviation in KNOWN_DEVIATIONS.values():
    print(f"  row {deviation.row} ({deviation.field}): {deviation.note}")
