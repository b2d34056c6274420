"""Acceptance gate: every release criterion at its stated tolerance.

Each test prints one [PASS]/[FAIL] line so the suite reads as a checklist
(run with ``pytest tests/test_acceptance.py -s`` to see the lines live).
The three benchmark rows whose reported figures are inconsistent with the
model's own formulas regress against the recomputed oracle values and must
stay listed in the bundled deviation record.
"""

import dataclasses
import json
import random
import threading
import urllib.request
from contextlib import contextmanager
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from clicplan import (
    ClicConfig,
    DeploymentRecord,
    EffortCurve,
    NoPlateauError,
    PlateauParams,
    Quadrant,
    QuadrantCounts,
    aggregate_k,
    build_plan,
    cheapest_feasible_quadrant,
    check_quotient_delta_consistency,
    complexity_quotient,
    complexity_terms,
    display_round,
    estimate_delta_w,
    hybrid_complexity,
    hybrid_complexity_timeline,
    infer_k,
    predict_effort,
    term_asymptotes,
)
from clicplan.cli import main as cli_main
from clicplan.datasets import (
    INDUSTRY_NFR_TABLE,
    KNOWN_DEVIATIONS,
    REFERENCE_DEPLOYMENTS,
    retail_portfolio,
)
from clicplan.defaults import default_industry_registry, default_provider_profile
from clicplan.server import ServiceConfig, make_server

FIXTURES = Path(__file__).parent / "fixtures"
REGISTRY = default_industry_registry()
PROVIDER = default_provider_profile()


@contextmanager
def criterion(name):
    try:
        yield
    except Exception:
        print(f"[FAIL] {name}")
        raise
    print(f"[PASS] {name}")


def test_benchmark_h_regression():
    with criterion("benchmark H regression: 11/12 rows within ±0.005 after 2-decimal rounding"):
        for row in REFERENCE_DEPLOYMENTS:
            recomputed = display_round(hybrid_complexity(row.counts, row.delta_w), 2)
            if (row.row, "h") in KNOWN_DEVIATIONS:
                deviation = KNOWN_DEVIATIONS[(row.row, "h")]
                assert recomputed == pytest.approx(deviation.model_value, abs=0.005), f"row {row.row}"
            else:
                assert recomputed == pytest.approx(row.reported_h, abs=0.005), f"row {row.row}"

    with criterion("benchmark H regression: row 6 deviation recorded (formula yields 0.61, not 0.77)"):
        deviation = KNOWN_DEVIATIONS[(6, "h")]
        assert deviation.reported == 0.77
        assert deviation.model_value == 0.61
        assert display_round(hybrid_complexity(QuadrantCounts(5, 2, 3, 5), 6), 2) == 0.61


def test_benchmark_effort_regression():
    with criterion("benchmark effort regression: 10/12 rows within ±1 person-month"):
        for row in REFERENCE_DEPLOYMENTS:
            if (row.row, "effort_pm") in KNOWN_DEVIATIONS:
                continue
            predicted = predict_effort(row.reported_h, PROVIDER.k, PROVIDER.x_for(row.industry), row.y)
            assert abs(predicted - row.reported_effort_pm) <= 1.0, f"row {row.row}: {predicted}"

    with criterion("benchmark effort regression: rows 4 and 10 deviations recorded (139.5 and 42)"):
        for row_id, expected in ((4, 139.5), (10, 42.0)):
            deviation = KNOWN_DEVIATIONS[(row_id, "effort_pm")]
            assert deviation.model_value == expected
            row = next(r for r in REFERENCE_DEPLOYMENTS if r.row == row_id)
            predicted = predict_effort(row.reported_h, PROVIDER.k, PROVIDER.x_for(row.industry), row.y)
            assert predicted == pytest.approx(expected)


def test_retail_timeline():
    with criterion("retail timeline: H = 0.29 (Apr-Dec) and 0.22 (Jan-Mar) at 2-decimal rounding"):
        plan = build_plan(retail_portfolio(), REGISTRY)
        report = hybrid_complexity_timeline(plan, REGISTRY.require("retail"), industry="retail")
        by_window = {wc.window: display_round(wc.h, 2) for wc in report.windows}
        assert by_window == {"Apr-Dec": 0.29, "Jan-Mar": 0.22}


def test_complexity_quotients():
    with criterion("complexity quotients: the six graded industries yield 8, 10, 12, 13, 10, 13"):
        quotients = [complexity_quotient(row.nfr) for row in INDUSTRY_NFR_TABLE]
        assert quotients == [8, 10, 12, 13, 10, 13]
        for row in INDUSTRY_NFR_TABLE:
            assert complexity_quotient(row.nfr) == row.quotient

    with criterion("complexity quotients: quotient vs CLIC constant is violation-free"):
        table = [(row.industry, row.quotient, row.delta_w) for row in INDUSTRY_NFR_TABLE]
        assert check_quotient_delta_consistency(table) == []


counts_st = st.builds(
    QuadrantCounts,
    w1=st.integers(0, 1000), w2=st.integers(0, 1000),
    w3=st.integers(0, 1000), w4=st.integers(0, 1000),
)
delta_st = st.floats(0.01, 1e4, allow_nan=False, allow_infinity=False)
factor_st = st.floats(0.01, 1, allow_nan=False)


def test_property_h_unit_interval():
    with criterion("property: H in [0, 1) over 1000 random draws"):

        @settings(max_examples=1000, deadline=None)
        @given(counts=counts_st, delta=delta_st)
        def check(counts, delta):
            h = hybrid_complexity(counts, delta)
            assert 0 <= h < 1

        check()


def test_property_h_strictly_monotone():
    with criterion("property: H strictly increasing in each count over 1000 random draws"):

        @settings(max_examples=1000, deadline=None)
        @given(counts=counts_st, delta=delta_st, quadrant=st.sampled_from(list(Quadrant)))
        def check(counts, delta, quadrant):
            field = {"Q1": "w1", "Q2": "w2", "Q3": "w3", "Q4": "w4"}[quadrant.value]
            bumped = dataclasses.replace(counts, **{field: getattr(counts, field) + 1})
            assert hybrid_complexity(bumped, delta) > hybrid_complexity(counts, delta)

        check()


def test_property_terms_below_asymptotes_and_converge():
    with criterion("property: each term below its asymptote over 1000 draws, within 1e-4 at count 1e6"):

        @settings(max_examples=1000, deadline=None)
        @given(counts=counts_st, delta=delta_st)
        def check(counts, delta):
            terms = complexity_terms(counts, delta)
            for quadrant, asymptote in term_asymptotes().items():
                assert terms[quadrant] < asymptote

        check()
        big = complexity_terms(QuadrantCounts(10**6, 10**6, 10**6, 10**6), 10)
        for quadrant, asymptote in term_asymptotes().items():
            assert asymptote - big[quadrant] < 1e-4


def test_property_h_scale_invariance():
    with criterion("property: H invariant under joint scaling of counts and CLIC constant (1000 draws)"):

        @settings(max_examples=1000, deadline=None)
        @given(counts=counts_st, delta=delta_st, factor=st.integers(1, 1000))
        def check(counts, delta, factor):
            scaled = QuadrantCounts(counts.w1 * factor, counts.w2 * factor, counts.w3 * factor, counts.w4 * factor)
            assert hybrid_complexity(scaled, delta * factor) == pytest.approx(
                hybrid_complexity(counts, delta), rel=1e-12
            )

        check()


def test_property_k_round_trip():
    with criterion("property: infer_k inverts predict_effort to 1e-9 relative error (1000 draws)"):

        @settings(max_examples=1000, deadline=None)
        @given(h=st.floats(0.001, 1), k=st.floats(0.001, 1e6), x=factor_st, y=factor_st)
        def check(h, k, x, y):
            effort = predict_effort(h, k, x, y)
            record = DeploymentRecord("retail", observed_effort=effort, x=x, y=y, h=h)
            inferred = infer_k(record, REGISTRY)
            assert abs(inferred - k) <= 1e-9 * k
            assert predict_effort(h, inferred, x, y) == pytest.approx(effort, rel=1e-9)

        check()


def test_property_cma_equals_mean():
    with criterion("property: running k average equals the batch mean at every prefix (1000 draws)"):

        @settings(max_examples=1000, deadline=None)
        @given(ks=st.lists(st.floats(0.1, 1e4), min_size=1, max_size=25))
        def check(ks):
            records = [
                DeploymentRecord("retail", observed_effort=0.5 * k, x=1.0, y=1.0, h=0.5) for k in ks
            ]
            calibration = aggregate_k(records, REGISTRY)
            for n, cma in enumerate(calibration.cma_values, start=1):
                assert cma == pytest.approx(sum(calibration.k_values[:n]) / n, rel=1e-9)

        check()


def _plateau_scan_oracle(points, tau, min_tail):
    for i in range(len(points)):
        below = 0
        j = i
        while j + 1 < len(points):
            e_curr, e_next = points[j][1], points[j + 1][1]
            ok = (e_next == 0) if e_curr == 0 else ((e_next - e_curr) / e_curr < tau)
            if not ok:
                break
            below += 1
            if below >= min_tail:
                return float(points[i][0])
            j += 1
    return None


def test_property_plateau_oracle_equivalence():
    with criterion("property: plateau detection equals the brute-force scan on 100 synthetic curves"):
        rng = random.Random(20260809)
        params = PlateauParams(tau=0.05, min_tail=2)
        for _ in range(100):
            emax = rng.uniform(20, 500)
            a = rng.uniform(1, 12)
            n = rng.randint(8, 25)
            points = tuple(
                (w, emax * w / (w + a) * (1 + rng.uniform(-params.tau / 8, params.tau / 8)))
                for w in range(1, n + 1)
            )
            curve = EffortCurve(points=points)
            expected = _plateau_scan_oracle(points, params.tau, params.min_tail)
            if expected is None:
                with pytest.raises(NoPlateauError):
                    estimate_delta_w(curve, params)
            else:
                assert estimate_delta_w(curve, params) == expected


def test_property_cheapest_quadrant_grid():
    with criterion("property: cheapest feasible quadrant matches exhaustive scan on the 101x101 grid"):
        clic = ClicConfig(0.5, 0.5)
        provides = {
            Quadrant.Q3: (False, False),
            Quadrant.Q4: (True, False),
            Quadrant.Q1: (False, True),
            Quadrant.Q2: (True, True),
        }
        weight = {Quadrant.Q1: 2, Quadrant.Q2: 5, Quadrant.Q3: 1, Quadrant.Q4: 2}
        preference = [Quadrant.Q3, Quadrant.Q4, Quadrant.Q1, Quadrant.Q2]
        for i in range(101):
            for j in range(101):
                iso, ctl = i / 100, j / 100
                need_iso = iso >= clic.isolation_threshold
                need_ctl = ctl >= clic.control_threshold
                feasible = [
                    q for q in preference
                    if (provides[q][0] or not need_iso) and (provides[q][1] or not need_ctl)
                ]
                expected = min(feasible, key=lambda q: (weight[q], preference.index(q)))
                assert cheapest_feasible_quadrant(iso, ctl, clic) is expected


def test_cli_service_parity():
    with criterion("parity: CLI and HTTP service emit byte-identical reports; endpoint H = 0.29"):
        retail_doc = json.loads((FIXTURES / "retail_portfolio.json").read_text())
        server = make_server(ServiceConfig(host="127.0.0.1", port=0))
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            request = urllib.request.Request(
                f"http://127.0.0.1:{server.server_address[1]}/api/v1/evaluate",
                data=json.dumps({"portfolio": retail_doc, "y": 0.2}).encode(),
                headers={"Content-Type": "application/json"},
                method="POST",
            )
            with urllib.request.urlopen(request) as response:
                http_bytes = response.read()
        finally:
            server.shutdown()
            server.server_close()
            thread.join(timeout=5)

        out_path = FIXTURES.parent / "_parity_report.json"
        try:
            code = cli_main(
                ["evaluate", "-f", str(FIXTURES / "retail_portfolio.json"), "--y", "0.2", "-o", str(out_path)]
            )
            assert code == 0
            cli_bytes = out_path.read_bytes()
        finally:
            out_path.unlink(missing_ok=True)

        assert cli_bytes == http_bytes
        payload = json.loads(http_bytes)
        assert payload["groups"][0]["windows"][0]["h_display"] == 0.29
