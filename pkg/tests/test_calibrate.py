"""Constant calibration: k inversion, CMA, normalization, plateau, quotients."""

import random

import pytest
from hypothesis import given, strategies as st

from clicplan import (
    DeploymentRecord,
    EffortCurve,
    IndustryRegistry,
    NfrGrade,
    NfrProfile,
    NoPlateauError,
    NotCalibratableError,
    PlateauParams,
    QuadrantCounts,
    UnknownIndustryError,
    aggregate_k,
    check_quotient_delta_consistency,
    complexity_quotient,
    estimate_delta_w,
    infer_k,
    normalize_effort,
    predict_effort,
)
from clicplan.datasets import INDUSTRY_NFR_TABLE
from clicplan.defaults import default_industry_registry

REGISTRY = default_industry_registry()

factor_st = st.floats(0.01, 1, allow_nan=False)


def test_infer_k_from_retail_case():
    record = DeploymentRecord("retail", observed_effort=174, x=0.8, y=0.2, h=0.29)
    assert infer_k(record, REGISTRY) == pytest.approx(150.0)


def test_infer_k_from_healthcare_row():
    record = DeploymentRecord("healthcare", observed_effort=60, x=0.8, y=0.5, h=0.25)
    assert infer_k(record, REGISTRY) == pytest.approx(150.0)


def test_infer_k_from_counts_uses_registry_delta():
    # banking case study: counts recompute to h = 0.3125
    record = DeploymentRecord("finance", observed_effort=140.625, x=0.6, y=0.2, counts=QuadrantCounts(0, 1, 1, 2))
    assert infer_k(record, REGISTRY) == pytest.approx(150.0)


def test_infer_k_zero_complexity_not_calibratable():
    record = DeploymentRecord("retail", observed_effort=10, x=0.8, y=0.5, counts=QuadrantCounts())
    with pytest.raises(NotCalibratableError):
        infer_k(record, REGISTRY)


def test_infer_k_unknown_industry():
    record = DeploymentRecord("mining", observed_effort=10, x=0.8, y=0.5, counts=QuadrantCounts(1, 0, 0, 0))
    with pytest.raises(UnknownIndustryError):
        infer_k(record, REGISTRY)


@given(h=st.floats(0.001, 1), k=st.floats(0.001, 1e6), x=factor_st, y=factor_st)
def test_infer_k_round_trips_predict_effort(h, k, x, y):
    effort = predict_effort(h, k, x, y)
    record = DeploymentRecord("retail", observed_effort=effort, x=x, y=y, h=h)
    assert infer_k(record, REGISTRY) == pytest.approx(k, rel=1e-9)


def _record_for_k(k_implied):
    # h=0.5, x=1, y=1 makes the inversion exact: E = 0.5 * k
    return DeploymentRecord("retail", observed_effort=0.5 * float(k_implied), x=1.0, y=1.0, h=0.5)


def test_aggregate_k_constant_sequence():
    records = [_record_for_k(150)] * 3
    calibration = aggregate_k(records, REGISTRY)
    assert calibration.k == pytest.approx(150.0)
    assert calibration.count == 3


def test_aggregate_k_two_point_mean():
    calibration = aggregate_k([_record_for_k(140), _record_for_k(160)], REGISTRY)
    assert calibration.k == pytest.approx(150.0)


def test_aggregate_k_cma_recurrence():
    calibration = aggregate_k([_record_for_k(150), _record_for_k(150), _record_for_k(120)], REGISTRY)
    assert calibration.k == pytest.approx(140.0)
    assert list(calibration.cma_values) == pytest.approx([150.0, 150.0, 140.0])


def test_aggregate_k_empty_input():
    with pytest.raises(NotCalibratableError):
        aggregate_k([], REGISTRY)


@given(ks=st.lists(st.floats(0.1, 1e4), min_size=1, max_size=30))
def test_cma_equals_batch_mean_at_every_prefix(ks):
    calibration = aggregate_k([_record_for_k(k) for k in ks], REGISTRY)
    for n, cma in enumerate(calibration.cma_values, start=1):
        assert cma == pytest.approx(sum(calibration.k_values[:n]) / n, rel=1e-9)


def test_normalize_effort():
    assert normalize_effort(42, 0, 1) == 42
    assert normalize_effort(50, 10, 0.8) == pytest.approx(50.0)
    assert normalize_effort(120, 120, 0.5) == 0.0
    with pytest.raises(ValueError):
        normalize_effort(10, 12, 0.8)
    with pytest.raises(ValueError):
        normalize_effort(10, 2, 0)


def test_plateau_saturating_curve():
    curve = EffortCurve(points=[(w, 100 * w / (w + 3)) for w in range(1, 16)])
    assert estimate_delta_w(curve, PlateauParams(tau=0.05, min_tail=2)) == 7.0


def test_plateau_step_curve():
    curve = EffortCurve(points=[(1, 10), (2, 20), (3, 30), (4, 40), (5, 40), (6, 40), (7, 40)])
    assert estimate_delta_w(curve, PlateauParams(tau=0.05, min_tail=2)) == 4.0


def test_plateau_linear_curve_has_none():
    curve = EffortCurve(points=[(w, 10.0 * w) for w in range(1, 11)])
    with pytest.raises(NoPlateauError):
        estimate_delta_w(curve, PlateauParams(tau=0.05, min_tail=2))


def test_plateau_params_validation():
    with pytest.raises(ValueError):
        PlateauParams(tau=0)
    with pytest.raises(ValueError):
        PlateauParams(tau=0.05, min_tail=0)


def _plateau_scan_oracle(points, tau, min_tail):
    # Independent O(n^2) reference: walk every start point and count how many
    # consecutive gaps stay under the tolerance.
    for i in range(len(points)):
        below = 0
        j = i
        while j + 1 < len(points):
            e_curr, e_next = points[j][1], points[j + 1][1]
            if e_curr == 0:
                ok = e_next == 0
            else:
                ok = (e_next - e_curr) / e_curr < tau
            if not ok:
                break
            below += 1
            if below >= min_tail:
                break
            j += 1
        if below >= min_tail:
            return float(points[i][0])
    return None


def _random_saturating_curve(rng, tau):
    emax = rng.uniform(20, 500)
    a = rng.uniform(1, 12)
    n = rng.randint(8, 25)
    points = []
    for w in range(1, n + 1):
        noise = 1 + rng.uniform(-tau / 8, tau / 8)  # bounded below tau/4
        points.append((w, emax * w / (w + a) * noise))
    return EffortCurve(points=tuple(points))


def test_plateau_matches_scan_oracle_on_random_curves():
    rng = random.Random(20260809)
    tau, min_tail = 0.05, 2
    for _ in range(100):
        curve = _random_saturating_curve(rng, tau)
        expected = _plateau_scan_oracle(curve.points, tau, min_tail)
        if expected is None:
            with pytest.raises(NoPlateauError):
                estimate_delta_w(curve, PlateauParams(tau, min_tail))
        else:
            assert estimate_delta_w(curve, PlateauParams(tau, min_tail)) == expected


def test_plateau_invariant_under_effort_scaling():
    rng = random.Random(7)
    params = PlateauParams(0.05, 2)
    for _ in range(25):
        curve = _random_saturating_curve(rng, params.tau)
        scale = rng.uniform(0.01, 1000)
        scaled = EffortCurve(points=tuple((w, e * scale) for w, e in curve.points))
        try:
            base = estimate_delta_w(curve, params)
        except NoPlateauError:
            with pytest.raises(NoPlateauError):
                estimate_delta_w(scaled, params)
            continue
        assert estimate_delta_w(scaled, params) == base


@pytest.mark.parametrize(
    "grades, expected",
    [
        (("M", "M", "L", "L", "M"), 8),   # airline
        (("M", "H", "H", "H", "M"), 13),  # finance
        (("L", "L", "L", "L", "L"), 5),
        (("M", "M", "H", "H", "M"), 12),  # health care
        (("H", "H", "H", "H", "H"), 15),
    ],
)
def test_complexity_quotient(grades, expected):
    profile = NfrProfile(*(NfrGrade(g) for g in grades))
    assert complexity_quotient(profile) == expected


def test_quotient_monotone_in_single_upgrade():
    upgrade = {"L": "M", "M": "H"}
    fields = ("availability", "business_continuity", "security", "compliance", "performance")
    for base in (("L",) * 5, ("M", "L", "M", "H", "L"), ("M",) * 5):
        profile = NfrProfile(*(NfrGrade(g) for g in base))
        for i, grade in enumerate(base):
            if grade == "H":
                continue
            bumped_grades = list(base)
            bumped_grades[i] = upgrade[grade]
            bumped = NfrProfile(*(NfrGrade(g) for g in bumped_grades))
            assert complexity_quotient(bumped) == complexity_quotient(profile) + 1, fields[i]


def test_quotient_delta_consistency_on_reference_table():
    table = [(row.industry, row.quotient, row.delta_w) for row in INDUSTRY_NFR_TABLE]
    assert check_quotient_delta_consistency(table) == []


def test_quotient_delta_violation_detected():
    violations = check_quotient_delta_consistency([("A", 8, 10.0), ("B", 12, 15.0)])
    assert len(violations) == 1
    assert violations[0].industry_high == "B"
    assert "higher complexity quotient" in violations[0].message


def test_quotient_delta_ties_are_vacuous():
    assert check_quotient_delta_consistency([("A", 10, 5.0), ("B", 10, 9.0)]) == []
