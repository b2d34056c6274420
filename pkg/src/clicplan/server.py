"""HTTP service exposing the evaluation engine and the registry store.

Evaluation is stateless per request; the registry store is the only
mutable state and is guarded single-writer/multi-reader with snapshot
reads and optimistic versioning (a stale version on PUT is a 409).
Responses for evaluate/whatif use the same canonical serialization as the
CLI, so both entry points produce byte-identical payloads.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional

from .defaults import default_industry_registry, default_provider_profile
from .documents import load_industry_registry, load_portfolio, load_provider_profile
from .errors import (
    DocumentParseError,
    PlanningError,
    RegistryConflictError,
    UnknownIndustryError,
    UnknownReferenceError,
    ValidationFailure,
)
from .model import EngagementFactors, IndustryRegistry, ProviderProfile, Quadrant
from .partition import recommend_options
from .pipeline import estimate_pipeline, report_payload, run_what_if, to_canonical_bytes
from .scenario import Move

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json",
    ".txt": "text/plain; charset=utf-8",
}


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    ui_dir: Optional[str] = None
    registry: Optional[IndustryRegistry] = None
    provider: Optional[ProviderProfile] = None


class _VersionedStore:
    """Holds one registry object; swaps are atomic and version-checked."""

    def __init__(self, value):
        self._lock = threading.Lock()
        self._value = value
        self._version = 1

    def snapshot(self):
        with self._lock:
            return self._value, self._version

    def replace(self, value, expected_version: Optional[int] = None) -> int:
        with self._lock:
            if expected_version is not None and expected_version != self._version:
                raise RegistryConflictError(
                    f"registry version conflict: expected {expected_version}, current {self._version}"
                )
            self._value = value
            self._version += 1
            return self._version


def _parse_moves(body: dict, schedule) -> list[Move]:
    moves = []
    raw_moves = body.get("moves", [])
    if not isinstance(raw_moves, list):
        raise DocumentParseError("moves", "expected a list of moves")
    for i, raw in enumerate(raw_moves):
        if not isinstance(raw, dict):
            raise DocumentParseError(f"moves[{i}]", "expected an object")
        workload_id = raw.get("workload_id")
        if not isinstance(workload_id, str) or not workload_id:
            raise DocumentParseError(f"moves[{i}].workload_id", "required field is missing")
        try:
            quadrant = Quadrant(str(raw.get("target_quadrant", "")).upper())
        except ValueError:
            raise DocumentParseError(
                f"moves[{i}].target_quadrant", f"expected one of Q1..Q4, got {raw.get('target_quadrant')!r}"
            ) from None
        window = raw.get("window")
        windows = [window] if window else list(schedule)
        moves.extend(Move(workload_id=workload_id, window=w, target_quadrant=quadrant) for w in windows)
    return moves


def _catalog_payload() -> dict:
    return {
        "options": {
            quadrant.value: [
                {"tag": option.value, "description": option.description}
                for option in recommend_options(quadrant)
            ]
            for quadrant in Quadrant
        }
    }


class PlanRequestHandler(BaseHTTPRequestHandler):
    server_version = "clicplan"
    delta_store: _VersionedStore
    provider_store: _VersionedStore
    ui_dir: Optional[Path] = None

    # -- plumbing ---------------------------------------------------------

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass

    def _send_bytes(self, status: int, data: bytes, content_type: str = "application/json") -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _send_json(self, status: int, payload) -> None:
        self._send_bytes(status, to_canonical_bytes(payload))

    def _send_error_json(self, status: int, message: str, path: str = "") -> None:
        error = {"message": message}
        if path:
            error["path"] = path
        self._send_json(status, {"error": error})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise DocumentParseError("body", "request body is empty")
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise DocumentParseError("body", f"invalid JSON: {exc.msg}") from exc
        if not isinstance(body, dict):
            raise DocumentParseError("body", "expected a JSON object")
        return body

    def _handle(self, worker) -> None:
        try:
            worker()
        except RegistryConflictError as exc:
            self._send_error_json(409, str(exc))
        except DocumentParseError as exc:
            self._send_error_json(422, str(exc), exc.path)
        except ValidationFailure as exc:
            self._send_json(
                422,
                {
                    "error": {
                        "message": "portfolio validation failed",
                        "findings": [
                            {"severity": f.severity, "path": f.path, "message": f.message}
                            for f in exc.findings
                        ],
                    }
                },
            )
        except (UnknownReferenceError, UnknownIndustryError, ValueError) as exc:
            self._send_error_json(422, str(exc))
        except PlanningError as exc:
            self._send_error_json(500, str(exc))
        except Exception as exc:  # pragma: no cover - last-resort guard
            self._send_error_json(500, f"internal error: {exc}")

    # -- request routing --------------------------------------------------

    def do_GET(self):  # noqa: N802 - stdlib casing
        self._handle(self._get)

    def do_POST(self):  # noqa: N802
        self._handle(self._post)

    def do_PUT(self):  # noqa: N802
        self._handle(self._put)

    def _get(self) -> None:
        path = self.path.split("?", 1)[0]
        if path == "/api/v1/health":
            self._send_json(200, {"status": "ok"})
        elif path == "/api/v1/catalog/options":
            self._send_json(200, _catalog_payload())
        elif path == "/api/v1/registries/delta":
            registry, version = self.delta_store.snapshot()
            self._send_json(200, {"entries": registry.as_dict(), "version": version})
        elif path == "/api/v1/registries/provider":
            provider, version = self.provider_store.snapshot()
            payload = provider.as_dict()
            payload["version"] = version
            self._send_json(200, payload)
        elif path.startswith("/api/"):
            self._send_error_json(404, f"unknown resource {path!r}")
        else:
            self._serve_static(path)

    def _post(self) -> None:
        path = self.path.split("?", 1)[0]
        if path == "/api/v1/evaluate":
            body = self._read_body()
            portfolio = load_portfolio(self._require_portfolio(body))
            registry, provider = self._request_registries(body)
            report = estimate_pipeline(
                portfolio,
                registry,
                provider,
                EngagementFactors(y=self._y(body)),
                observed_effort=self._optional_number(body, "observed_effort"),
            )
            self._send_bytes(200, to_canonical_bytes(report_payload(report)))
        elif path == "/api/v1/whatif":
            body = self._read_body()
            portfolio = load_portfolio(self._require_portfolio(body))
            registry, provider = self._request_registries(body)
            moves = _parse_moves(body, portfolio.schedule)
            payload = run_what_if(portfolio, registry, provider, EngagementFactors(y=self._y(body)), moves)
            self._send_bytes(200, to_canonical_bytes(payload))
        else:
            self._send_error_json(404, f"unknown resource {path!r}")

    def _put(self) -> None:
        path = self.path.split("?", 1)[0]
        if path == "/api/v1/registries/delta":
            body = self._read_body()
            registry = load_industry_registry(body)
            version = self.delta_store.replace(registry, self._optional_int(body, "version"))
            self._send_json(200, {"entries": registry.as_dict(), "version": version})
        elif path == "/api/v1/registries/provider":
            body = self._read_body()
            provider = load_provider_profile(body)
            version = self.provider_store.replace(provider, self._optional_int(body, "version"))
            payload = provider.as_dict()
            payload["version"] = version
            self._send_json(200, payload)
        else:
            self._send_error_json(404, f"unknown resource {path!r}")

    # -- request helpers ----------------------------------------------------

    @staticmethod
    def _require_portfolio(body: dict) -> dict:
        portfolio = body.get("portfolio")
        if not isinstance(portfolio, dict):
            raise DocumentParseError("portfolio", "required field is missing")
        return portfolio

    def _request_registries(self, body: dict):
        if body.get("registry") is not None:
            registry = load_industry_registry(body["registry"])
        else:
            registry, _ = self.delta_store.snapshot()
        if body.get("provider") is not None:
            provider = load_provider_profile(body["provider"])
        else:
            provider, _ = self.provider_store.snapshot()
        return registry, provider

    @staticmethod
    def _y(body: dict) -> float:
        y = body.get("y", 1.0)
        if isinstance(y, bool) or not isinstance(y, (int, float)):
            raise DocumentParseError("y", f"expected a number, got {y!r}")
        return float(y)

    @staticmethod
    def _optional_number(body: dict, key: str) -> Optional[float]:
        value = body.get(key)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise DocumentParseError(key, f"expected a number, got {value!r}")
        return float(value)

    @staticmethod
    def _optional_int(body: dict, key: str) -> Optional[int]:
        value = body.get(key)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise DocumentParseError(key, f"expected an integer, got {value!r}")
        return value

    def _serve_static(self, path: str) -> None:
        if self.ui_dir is None:
            self._send_error_json(404, "no UI assets configured; start with --ui-dir")
            return
        relative = path.lstrip("/") or "index.html"
        target = (self.ui_dir / relative).resolve()
        try:
            target.relative_to(self.ui_dir.resolve())
        except ValueError:
            self._send_error_json(404, "not found")
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_error_json(404, f"no such asset {path!r}")
            return
        content_type = _CONTENT_TYPES.get(target.suffix.lower(), "application/octet-stream")
        self._send_bytes(200, target.read_bytes(), content_type)


def make_server(config: ServiceConfig) -> ThreadingHTTPServer:
    """Build a ready-to-run server; caller owns serve_forever/shutdown."""
    handler = type(
        "BoundPlanRequestHandler",
        (PlanRequestHandler,),
        {
            "delta_store": _VersionedStore(config.registry or default_industry_registry()),
            "provider_store": _VersionedStore(config.provider or default_provider_profile()),
            "ui_dir": Path(config.ui_dir) if config.ui_dir else None,
        },
    )
    return ThreadingHTTPServer((config.host, config.port), handler)


def serve(config: ServiceConfig) -> None:
    server = make_server(config)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}/ (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
