#!/usr/bin/env python3
"""What-if exploration on the seasonal retail portfolio.

The storefront and the recommendation engine need hypervisor-level control
only during the busy season. This script asks: what would it cost to keep
them on hosted private clouds all year, and what does the seasonal
relaxation actually save?
"""

from clicplan import EngagementFactors, Move, Quadrant, what_if
from clicplan.datasets import retail_portfolio
from clicplan.defaults import default_industry_registry, default_provider_profile

registry = default_industry_registry()
provider = default_provider_profile()
engagement = EngagementFactors(y=0.2)
portfolio = retail_portfolio()

print("Baseline timeline:")
baseline = what_if(portfolio, registry, provider, engagement, [])
for wc in baseline.before[0].complexity.windows:
    print(f"  H({wc.window}) = {wc.h:.4f}   counts {wc.counts.as_dict()}")

print("\nScenario 1: relax both Q1 workloads to public instances in the busy season too")
moves = [
    Move("storefront", "Apr-Dec", Quadrant.Q3),
    Move("recommendations", "Apr-Dec", Quadrant.Q3),
]
delta = what_if(portfolio, registry, provider, engagement, moves)
for before_wc, after_wc in zip(delta.before[0].complexity.windows, delta.after[0].complexity.windows):
    print(f"  H({before_wc.window}): {before_wc.h:.4f} -> {after_wc.h:.4f}  (change {after_wc.h - before_wc.h:+.4f})")
print(f"  peak effort: {delta.total_effort_before:.1f} -> {delta.total_effort_after:.1f} PM")
for outcome in delta.moves:
    badge = "CROSSES CLIC" if outcome.crossed_clic else "stays on its side of the CLIC"
    print(f"  move {outcome.move.workload_id} {outcome.quadrant_before.value}->{outcome.move.target_quadrant.value}: {badge}")

print("\nScenario 2: promote dev-test to the isolated zone (crosses the CLIC)")
delta = what_if(portfolio, registry, provider, engagement, [Move("dev-test", "Apr-Dec", Quadrant.Q2)])
print(f"  warnings: {list(delta.warnings)}")
apr = next(wc for wc in delta.after[0].complexity.windows if wc.window == "Apr-Dec")
print(f"  H(Apr-Dec) after move = {apr.h:.4f}, effort {delta.total_effort_after:.1f} PM")

print("\nThe original portfolio is untouched by all of the above:")
untouched = what_if(portfolio, registry, provider, engagement, [])
print(f"  H(Apr-Dec) = {untouched.before[0].complexity.windows[0].h:.4f} (same as baseline)")
