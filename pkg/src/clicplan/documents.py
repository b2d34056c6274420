"""Document formats: portfolios, registries, provider profiles, records, curves.

All documents are JSON with field names matching the domain types. Parse
failures raise DocumentParseError carrying the path of the offending field;
loading never half-succeeds. One portfolio per file; registries live in
their own files so CLIC constants and provider profiles can be versioned
independently.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .errors import DocumentParseError
from .model import (
    ClicConfig,
    DeploymentRecord,
    EffortCurve,
    IndustryRegistry,
    NfrGrade,
    NfrProfile,
    Portfolio,
    ProviderProfile,
    Quadrant,
    QuadrantCounts,
    WindowOverride,
    Workload,
)

Source = Union[str, Path, dict, list]


def _read_json(source: Source, label: str) -> Any:
    if isinstance(source, (dict, list)):
        return source
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentParseError(label, f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(label, f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _expect_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentParseError(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise DocumentParseError(path, f"expected a list, got {type(value).__name__}")
    return value


def _require(obj: dict, key: str, path: str) -> Any:
    if key not in obj:
        raise DocumentParseError(f"{path}.{key}", "required field is missing")
    return obj[key]


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentParseError(path, f"expected a number, got {value!r}")
    return float(value)


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise DocumentParseError(path, f"expected a string, got {value!r}")
    return value


def _quadrant(value: Any, path: str) -> Quadrant:
    try:
        return Quadrant(_string(value, path).upper())
    except ValueError:
        raise DocumentParseError(path, f"expected one of Q1..Q4, got {value!r}") from None


def _grade(value: Any, path: str) -> NfrGrade:
    try:
        return NfrGrade(_string(value, path).upper())
    except ValueError:
        raise DocumentParseError(path, f"expected one of L/M/H, got {value!r}") from None


_NFR_FIELDS = ("availability", "business_continuity", "security", "compliance", "performance")


def parse_nfr_profile(value: Any, path: str = "nfr") -> NfrProfile:
    obj = _expect_object(value, path)
    grades = {name: _grade(_require(obj, name, path), f"{path}.{name}") for name in _NFR_FIELDS}
    return NfrProfile(**grades)


def _parse_override(value: Any, path: str) -> WindowOverride:
    obj = _expect_object(value, path)
    return WindowOverride(
        window=_string(_require(obj, "window", path), f"{path}.window"),
        isolation_demand=None if obj.get("isolation_demand") is None else _number(obj["isolation_demand"], f"{path}.isolation_demand"),
        control_demand=None if obj.get("control_demand") is None else _number(obj["control_demand"], f"{path}.control_demand"),
        pinned_quadrant=None if obj.get("pinned_quadrant") is None else _quadrant(obj["pinned_quadrant"], f"{path}.pinned_quadrant"),
    )


def _parse_workload(value: Any, path: str) -> Workload:
    obj = _expect_object(value, path)
    workload_id = _string(_require(obj, "id", path), f"{path}.id")
    return Workload(
        id=workload_id,
        name=_string(obj.get("name", workload_id), f"{path}.name"),
        industry=_string(_require(obj, "industry", path), f"{path}.industry"),
        isolation_demand=_number(_require(obj, "isolation_demand", path), f"{path}.isolation_demand"),
        control_demand=_number(_require(obj, "control_demand", path), f"{path}.control_demand"),
        nfr=None if obj.get("nfr") is None else parse_nfr_profile(obj["nfr"], f"{path}.nfr"),
        pinned_quadrant=None if obj.get("pinned_quadrant") is None else _quadrant(obj["pinned_quadrant"], f"{path}.pinned_quadrant"),
        delta_w=None if obj.get("delta_w") is None else _number(obj["delta_w"], f"{path}.delta_w"),
        overrides=tuple(
            _parse_override(ov, f"{path}.overrides[{i}]")
            for i, ov in enumerate(_expect_list(obj.get("overrides", []), f"{path}.overrides"))
        ),
    )


def load_portfolio(source: Source) -> Portfolio:
    """Parse a portfolio document from a path or an already-decoded object."""
    data = _expect_object(_read_json(source, "portfolio"), "portfolio")
    schedule = tuple(
        _string(w, f"schedule[{i}]")
        for i, w in enumerate(_expect_list(data.get("schedule", ["default"]), "schedule"))
    )
    clic_obj = _expect_object(data.get("clic", {}), "clic")
    clic = ClicConfig(
        isolation_threshold=_number(clic_obj.get("isolation_threshold", 0.5), "clic.isolation_threshold"),
        control_threshold=_number(clic_obj.get("control_threshold", 0.5), "clic.control_threshold"),
    )
    workloads = tuple(
        _parse_workload(w, f"workloads[{i}]")
        for i, w in enumerate(_expect_list(_require(data, "workloads", "portfolio"), "workloads"))
    )
    return Portfolio(workloads=workloads, schedule=schedule, clic=clic)


def portfolio_to_dict(portfolio: Portfolio) -> dict:
    """Canonical document form of a portfolio (load round-trips it)."""
    doc: dict = {
        "schedule": list(portfolio.schedule),
        "clic": {
            "isolation_threshold": portfolio.clic.isolation_threshold,
            "control_threshold": portfolio.clic.control_threshold,
        },
        "workloads": [],
    }
    for w in portfolio.workloads:
        entry: dict = {
            "id": w.id,
            "name": w.name,
            "industry": w.industry,
            "isolation_demand": w.isolation_demand,
            "control_demand": w.control_demand,
        }
        if w.nfr is not None:
            entry["nfr"] = {name: getattr(w.nfr, name).value for name in _NFR_FIELDS}
        if w.pinned_quadrant is not None:
            entry["pinned_quadrant"] = w.pinned_quadrant.value
        if w.delta_w is not None:
            entry["delta_w"] = w.delta_w
        if w.overrides:
            entry["overrides"] = []
            for ov in w.overrides:
                ov_entry: dict = {"window": ov.window}
                if ov.isolation_demand is not None:
                    ov_entry["isolation_demand"] = ov.isolation_demand
                if ov.control_demand is not None:
                    ov_entry["control_demand"] = ov.control_demand
                if ov.pinned_quadrant is not None:
                    ov_entry["pinned_quadrant"] = ov.pinned_quadrant.value
                entry["overrides"].append(ov_entry)
        doc["workloads"].append(entry)
    return doc


def load_industry_registry(source: Source) -> IndustryRegistry:
    """Parse a CLIC-constant registry: either a flat mapping or {"entries": {...}}."""
    data = _expect_object(_read_json(source, "registry"), "registry")
    if "entries" in data and isinstance(data["entries"], dict):
        entries = data["entries"]
    else:
        entries = data
    parsed = {}
    for industry, delta in entries.items():
        parsed[industry] = _number(delta, f"registry.entries.{industry}")
        if parsed[industry] <= 0:
            raise DocumentParseError(f"registry.entries.{industry}", f"CLIC constant must be positive, got {delta}")
    return IndustryRegistry(parsed)


def load_provider_profile(source: Source) -> ProviderProfile:
    data = _expect_object(_read_json(source, "provider"), "provider")
    x_by_industry = {
        industry: _number(x, f"provider.x_by_industry.{industry}")
        for industry, x in _expect_object(data.get("x_by_industry", {}), "provider.x_by_industry").items()
    }
    try:
        return ProviderProfile(
            k=_number(_require(data, "k", "provider"), "provider.k"),
            x_by_industry=x_by_industry,
            default_x=_number(data.get("default_x", 1.0), "provider.default_x"),
        )
    except ValueError as exc:
        raise DocumentParseError("provider", str(exc)) from exc


def _parse_counts(value: Any, path: str) -> QuadrantCounts:
    obj = _expect_object(value, path)
    kwargs = {}
    for name in ("w1", "w2", "w3", "w4"):
        raw = obj.get(name, 0)
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise DocumentParseError(f"{path}.{name}", f"expected an integer, got {raw!r}")
        kwargs[name] = raw
    try:
        return QuadrantCounts(**kwargs)
    except ValueError as exc:
        raise DocumentParseError(path, str(exc)) from exc


def load_deployment_records(source: Source) -> list[DeploymentRecord]:
    data = _read_json(source, "records")
    if isinstance(data, dict):
        data = _require(data, "records", "records")
    rows = _expect_list(data, "records")
    records = []
    for i, row in enumerate(rows):
        path = f"records[{i}]"
        obj = _expect_object(row, path)
        try:
            records.append(
                DeploymentRecord(
                    industry=_string(_require(obj, "industry", path), f"{path}.industry"),
                    observed_effort=_number(_require(obj, "observed_effort", path), f"{path}.observed_effort"),
                    x=_number(_require(obj, "x", path), f"{path}.x"),
                    y=_number(_require(obj, "y", path), f"{path}.y"),
                    counts=None if obj.get("counts") is None else _parse_counts(obj["counts"], f"{path}.counts"),
                    h=None if obj.get("h") is None else _number(obj["h"], f"{path}.h"),
                    custom_effort=None if obj.get("custom_effort") is None else _number(obj["custom_effort"], f"{path}.custom_effort"),
                )
            )
        except ValueError as exc:
            raise DocumentParseError(path, str(exc)) from exc
    return records


def load_effort_curve(source: Source) -> EffortCurve:
    data = _read_json(source, "curve")
    if isinstance(data, dict):
        data = _require(data, "points", "curve")
    rows = _expect_list(data, "curve.points")
    points = []
    for i, row in enumerate(rows):
        pair = _expect_list(row, f"curve.points[{i}]")
        if len(pair) != 2:
            raise DocumentParseError(f"curve.points[{i}]", f"expected [workload_count, effort], got {row!r}")
        count = pair[0]
        if isinstance(count, bool) or not isinstance(count, int):
            raise DocumentParseError(f"curve.points[{i}][0]", f"expected an integer workload count, got {count!r}")
        points.append((count, _number(pair[1], f"curve.points[{i}][1]")))
    try:
        return EffortCurve(points=tuple(points))
    except ValueError as exc:
        raise DocumentParseError("curve.points", str(exc)) from exc


def load_nfr_document(source: Source) -> dict[str, NfrProfile]:
    """Parse an NFR document: one profile, or a mapping of industry -> profile."""
    data = _expect_object(_read_json(source, "nfr"), "nfr")
    if any(name in data for name in _NFR_FIELDS):
        return {"": parse_nfr_profile(data, "nfr")}
    return {name: parse_nfr_profile(profile, f"nfr.{name}") for name, profile in data.items()}


def save_json(payload: Union[dict, list], path: Union[str, Path]) -> None:
    """Write a payload in the canonical serialization (sorted keys, two-space indent)."""
    from .pipeline import to_canonical_bytes

    Path(path).write_bytes(to_canonical_bytes(payload))


def load_json(path: Union[str, Path]) -> Any:
    return _read_json(path, "document")
