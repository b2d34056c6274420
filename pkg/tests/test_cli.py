"""CLI subcommands, document flow, and exit codes."""

import json
from pathlib import Path

import pytest

from clicplan.cli import main

FIXTURES = Path(__file__).parent / "fixtures"
RETAIL = str(FIXTURES / "retail_portfolio.json")


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_evaluate_retail(capsys):
    code, out, _ = _run(capsys, "evaluate", "-f", RETAIL, "--y", "0.2")
    assert code == 0
    payload = json.loads(out)
    group = payload["groups"][0]
    assert group["windows"][0]["h_display"] == 0.29
    assert group["windows"][0]["effort_pm"] == 174.0
    assert payload["totals"]["effort_pm"] == 174.0


def test_evaluate_with_observed_variance(capsys):
    code, out, _ = _run(capsys, "evaluate", "-f", RETAIL, "--y", "0.2", "--observed", "156.6")
    assert code == 0
    payload = json.loads(out)
    assert payload["variance"]["pct"] == 10.0
    assert payload["variance"]["convention"] == "predicted"


def test_evaluate_writes_output_file(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = _run(capsys, "evaluate", "-f", RETAIL, "--y", "0.2", "-o", str(out_path))
    assert code == 0
    assert out == ""
    assert json.loads(out_path.read_text())["totals"]["effort_pm"] == 174.0


def test_evaluate_custom_registry(capsys, tmp_path):
    registry = tmp_path / "registry.json"
    registry.write_text(json.dumps({"retail": 20}))
    code, out, _ = _run(capsys, "evaluate", "-f", RETAIL, "--registry", str(registry))
    assert code == 0
    assert json.loads(out)["groups"][0]["delta_w"] == 20.0


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = _run(capsys, "evaluate", "-f", str(bad))
    assert code == 2
    assert "error" in err


def test_validation_error_exit_code(capsys, tmp_path):
    doc = {"workloads": [{"id": "a", "industry": "retail", "isolation_demand": 1.5, "control_demand": 0.5}]}
    bad = tmp_path / "invalid.json"
    bad.write_text(json.dumps(doc))
    code, _, err = _run(capsys, "evaluate", "-f", str(bad))
    assert code == 2
    assert "isolation_demand" in err


def test_unknown_industry_exit_code(capsys, tmp_path):
    doc = {"workloads": [{"id": "a", "industry": "mining", "isolation_demand": 0.5, "control_demand": 0.5}]}
    bad = tmp_path / "mining.json"
    bad.write_text(json.dumps(doc))
    code, _, err = _run(capsys, "evaluate", "-f", str(bad))
    assert code == 3
    assert "unknown industry" in err


def test_whatif_move_spec(capsys):
    code, out, _ = _run(
        capsys, "whatif", "-f", RETAIL, "--y", "0.2",
        "--move", "storefront:Q3@Apr-Dec", "--move", "recommendations:Q3@Apr-Dec",
    )
    assert code == 0
    payload = json.loads(out)
    rows = {(r["industry"], r["window"]): r for r in payload["delta"]["h_by_group_window"]}
    row = rows[("retail", "Apr-Dec")]
    assert row["before"] == 0.2929
    assert row["after"] == 0.2179
    assert row["delta"] == -0.075
    assert payload["moves"][0]["crossed_clic"] is False


def test_whatif_move_without_window_applies_to_all(capsys):
    code, out, _ = _run(capsys, "whatif", "-f", RETAIL, "--move", "dev-test:Q2")
    assert code == 0
    payload = json.loads(out)
    assert [m["window"] for m in payload["moves"]] == ["Apr-Dec", "Jan-Mar"]
    assert all(m["crossed_clic"] for m in payload["moves"])


def test_whatif_unknown_workload(capsys):
    code, _, err = _run(capsys, "whatif", "-f", RETAIL, "--move", "ghost:Q3")
    assert code == 2
    assert "unknown workload" in err


def test_whatif_bad_move_spec(capsys):
    code, _, err = _run(capsys, "whatif", "-f", RETAIL, "--move", "storefront")
    assert code == 2
    assert "--move" in err


def test_calibrate_k(capsys, tmp_path):
    records = [
        {"industry": "retail", "observed_effort": 75, "x": 1.0, "y": 1.0, "h": 0.5},
        {"industry": "retail", "observed_effort": 75, "x": 1.0, "y": 1.0, "h": 0.5},
        {"industry": "retail", "observed_effort": 60, "x": 1.0, "y": 1.0, "h": 0.5},
    ]
    path = tmp_path / "records.json"
    path.write_text(json.dumps(records))
    code, out, _ = _run(capsys, "calibrate", "k", "-f", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == pytest.approx(140.0)
    assert payload["count"] == 3
    assert payload["cma_values"] == [150.0, 150.0, 140.0]


def test_calibrate_delta(capsys, tmp_path):
    curve = {"points": [[w, 100 * w / (w + 3)] for w in range(1, 16)]}
    path = tmp_path / "curve.json"
    path.write_text(json.dumps(curve))
    code, out, _ = _run(capsys, "calibrate", "delta", "-f", str(path))
    assert code == 0
    assert json.loads(out)["delta_w"] == 7.0


def test_calibrate_delta_no_plateau_exit_code(capsys, tmp_path):
    curve = {"points": [[w, 10.0 * w] for w in range(1, 11)]}
    path = tmp_path / "linear.json"
    path.write_text(json.dumps(curve))
    code, _, err = _run(capsys, "calibrate", "delta", "-f", str(path))
    assert code == 4
    assert "no plateau" in err


def test_calibrate_delta_custom_tau(capsys, tmp_path):
    curve = {"points": [[w, 10.0 * w] for w in range(1, 11)]}
    path = tmp_path / "linear.json"
    path.write_text(json.dumps(curve))
    # 1/W < 0.2 from W=6; with min_tail=2 the first qualifying point is 6
    code, out, _ = _run(capsys, "calibrate", "delta", "-f", str(path), "--tau", "0.2", "--min-tail", "2")
    assert code == 0
    assert json.loads(out)["delta_w"] == 6.0


def test_quotient_single_profile(capsys, tmp_path):
    doc = {"availability": "M", "business_continuity": "M", "security": "L", "compliance": "L", "performance": "M"}
    path = tmp_path / "nfr.json"
    path.write_text(json.dumps(doc))
    code, out, _ = _run(capsys, "quotient", "-f", str(path))
    assert code == 0
    assert json.loads(out)["quotient"] == 8


def test_quotient_mapping(capsys, tmp_path):
    doc = {
        "finance": {"availability": "M", "business_continuity": "H", "security": "H",
                    "compliance": "H", "performance": "M"},
        "airline": {"availability": "M", "business_continuity": "M", "security": "L",
                    "compliance": "L", "performance": "M"},
    }
    path = tmp_path / "nfr.json"
    path.write_text(json.dumps(doc))
    code, out, _ = _run(capsys, "quotient", "-f", str(path))
    assert code == 0
    assert json.loads(out)["quotients"] == {"finance": 13, "airline": 8}
