#!/usr/bin/env python3
"""Calibrate the model's constants from historical records.

Three exercises: invert the effort model record by record to track the
complexity-to-effort constant as a cumulative moving average, read a CLIC
constant off a saturating effort curve, and check that industries with
heavier non-functional demands really do carry smaller CLIC constants.
"""

import random

from clicplan import (
    DeploymentRecord,
    EffortCurve,
    PlateauParams,
    aggregate_k,
    check_quotient_delta_consistency,
    complexity_quotient,
    estimate_delta_w,
    normalize_effort,
)
from clicplan.datasets import INDUSTRY_NFR_TABLE
from clicplan.defaults import default_industry_registry

registry = default_industry_registry()

print("=== Complexity-to-effort constant from past deployments ===")
records = [
    DeploymentRecord("retail", observed_effort=174.0, x=0.8, y=0.2, h=0.29),
    DeploymentRecord("healthcare", observed_effort=60.0, x=0.8, y=0.5, h=0.25),
    DeploymentRecord("finance", observed_effort=186.0, x=0.6, y=0.3, h=0.62),
    DeploymentRecord("airline", observed_effort=44.1, x=0.7, y=0.5, h=0.21),
]
calibration = aggregate_k(records, registry)
for i, (k, cma) in enumerate(zip(calibration.k_values, calibration.cma_values), start=1):
    print(f"  record {i}: k = {k:7.2f}   running average = {cma:7.2f}")
print(f"  calibrated k after {calibration.count} records: {calibration.k:.2f}")

print("\n=== Effort normalization ===")
print("  observed 50 PM with 10 PM of custom work at leverage 0.8 ->", normalize_effort(50, 10, 0.8), "PM")

print("\n=== CLIC constant from an effort curve plateau ===")
rng = random.Random(7)
points = [(w, 180 * w / (w + 9) * (1 + rng.uniform(-0.004, 0.004))) for w in range(1, 21)]
curve = EffortCurve(points=tuple(points))
params = PlateauParams(tau=0.05, min_tail=2)
delta_w = estimate_delta_w(curve, params)
print(f"  sampled {len(points)} deployments; effort plateaus beyond W = {delta_w:.0f}")
print(f"  (criterion: {params.min_tail} consecutive gaps under {params.tau:.0%} relative growth)")

print("\n=== Non-functional complexity quotients vs CLIC constants ===")
print(f"  {'industry':14} {'quotient':>8} {'delta_w':>8}")
for row in INDUSTRY_NFR_TABLE:
    print(f"  {row.industry:14} {complexity_quotient(row.nfr):>8} {row.delta_w:>8.0f}")
violations = check_quotient_delta_consistency(
    [(row.industry, row.quotient, row.delta_w) for row in INDUSTRY_NFR_TABLE]
)
if violations:
    for violation in violations:
        print("  VIOLATION:", violation.message)
else:
    print("  antitone relation holds: heavier requirements, smaller CLIC constant")
