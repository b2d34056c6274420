"""Command-line entry point.

Subcommands: evaluate, whatif, calibrate k, calibrate delta, quotient,
serve. Exit codes: 0 ok, 2 validation/parse error, 3 unknown industry,
4 no plateau found, 5 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .calibrate import PlateauParams, aggregate_k, complexity_quotient, estimate_delta_w
from .defaults import default_industry_registry, default_provider_profile
from .documents import (
    load_deployment_records,
    load_effort_curve,
    load_industry_registry,
    load_nfr_document,
    load_portfolio,
    load_provider_profile,
)
from .errors import (
    DocumentParseError,
    NoPlateauError,
    NotCalibratableError,
    PlanningError,
    UnknownIndustryError,
    UnknownReferenceError,
    ValidationFailure,
)
from .model import EngagementFactors, Quadrant
from .pipeline import estimate_pipeline, report_payload, run_what_if, to_canonical_bytes
from .scenario import Move

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNKNOWN_INDUSTRY = 3
EXIT_NO_PLATEAU = 4
EXIT_INTERNAL = 5


def _emit(payload: dict, output: Optional[str]) -> None:
    data = to_canonical_bytes(payload)
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _load_registry(path: Optional[str]):
    return load_industry_registry(path) if path else default_industry_registry()


def _load_provider(path: Optional[str]):
    return load_provider_profile(path) if path else default_provider_profile()


def parse_move_spec(spec: str, schedule: Sequence[str]) -> list[Move]:
    """Parse ``<workload>:<quadrant>[@<window>]``; no window means every window."""
    base, _, window = spec.partition("@")
    workload_id, sep, quadrant_tag = base.partition(":")
    if not sep or not workload_id or not quadrant_tag:
        raise DocumentParseError("--move", f"expected <workload>:<quadrant>[@<window>], got {spec!r}")
    try:
        quadrant = Quadrant(quadrant_tag.upper())
    except ValueError:
        raise DocumentParseError("--move", f"expected a quadrant Q1..Q4, got {quadrant_tag!r}") from None
    windows = [window] if window else list(schedule)
    return [Move(workload_id=workload_id, window=w, target_quadrant=quadrant) for w in windows]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plan", description="Hybrid-cloud deployment planning engine")
    sub = parser.add_subparsers(dest="command", required=True)

    evaluate = sub.add_parser("evaluate", help="evaluate a portfolio end to end")
    evaluate.add_argument("-f", "--file", required=True, help="portfolio document")
    evaluate.add_argument("--registry", help="CLIC-constant registry document")
    evaluate.add_argument("--provider", help="provider profile document")
    evaluate.add_argument("--y", type=float, default=1.0, help="custom work complexity factor (0, 1]")
    evaluate.add_argument("--observed", type=float, help="observed effort in person-months, for variance")
    evaluate.add_argument("-o", "--output", help="write the report here instead of stdout")

    whatif = sub.add_parser("whatif", help="evaluate quadrant moves against a portfolio")
    whatif.add_argument("-f", "--file", required=True)
    whatif.add_argument("--move", action="append", required=True, metavar="ID:QUADRANT[@WINDOW]",
                        help="repeatable; no window applies the move to every window")
    whatif.add_argument("--registry")
    whatif.add_argument("--provider")
    whatif.add_argument("--y", type=float, default=1.0)
    whatif.add_argument("-o", "--output")

    calibrate = sub.add_parser("calibrate", help="estimate model constants from records")
    calibrate_sub = calibrate.add_subparsers(dest="what", required=True)

    cal_k = calibrate_sub.add_parser("k", help="complexity-to-effort constant via cumulative moving average")
    cal_k.add_argument("-f", "--file", required=True, help="deployment records document")
    cal_k.add_argument("--registry")
    cal_k.add_argument("-o", "--output")

    cal_delta = calibrate_sub.add_parser("delta", help="CLIC constant from an effort curve plateau")
    cal_delta.add_argument("-f", "--file", required=True, help="effort curve document")
    cal_delta.add_argument("--tau", type=float, default=0.05, help="relative-increase tolerance")
    cal_delta.add_argument("--min-tail", type=int, default=2, help="consecutive gaps that must stay below tau")
    cal_delta.add_argument("-o", "--output")

    quotient = sub.add_parser("quotient", help="complexity quotient of graded non-functional requirements")
    quotient.add_argument("-f", "--file", required=True, help="NFR document (one profile or a mapping)")
    quotient.add_argument("-o", "--output")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--ui-dir", help="directory of built UI assets to serve at /")
    serve.add_argument("--registry")
    serve.add_argument("--provider")

    return parser


def _cmd_evaluate(args) -> int:
    portfolio = load_portfolio(args.file)
    report = estimate_pipeline(
        portfolio,
        _load_registry(args.registry),
        _load_provider(args.provider),
        EngagementFactors(y=args.y),
        observed_effort=args.observed,
    )
    _emit(report_payload(report), args.output)
    return EXIT_OK


def _cmd_whatif(args) -> int:
    portfolio = load_portfolio(args.file)
    moves = []
    for spec in args.move:
        moves.extend(parse_move_spec(spec, portfolio.schedule))
    payload = run_what_if(
        portfolio,
        _load_registry(args.registry),
        _load_provider(args.provider),
        EngagementFactors(y=args.y),
        moves,
    )
    _emit(payload, args.output)
    return EXIT_OK


def _cmd_calibrate_k(args) -> int:
    records = load_deployment_records(args.file)
    calibration = aggregate_k(records, _load_registry(args.registry))
    _emit(
        {
            "k": calibration.k,
            "count": calibration.count,
            "k_values": list(calibration.k_values),
            "cma_values": list(calibration.cma_values),
        },
        args.output,
    )
    return EXIT_OK


def _cmd_calibrate_delta(args) -> int:
    curve = load_effort_curve(args.file)
    params = PlateauParams(tau=args.tau, min_tail=args.min_tail)
    delta_w = estimate_delta_w(curve, params)
    _emit({"delta_w": delta_w, "tau": params.tau, "min_tail": params.min_tail}, args.output)
    return EXIT_OK


def _cmd_quotient(args) -> int:
    profiles = load_nfr_document(args.file)
    if list(profiles) == [""]:
        payload = {"quotient": complexity_quotient(profiles[""])}
    else:
        payload = {"quotients": {name: complexity_quotient(profile) for name, profile in profiles.items()}}
    _emit(payload, args.output)
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .server import ServiceConfig, serve

    serve(
        ServiceConfig(
            host=args.host,
            port=args.port,
            ui_dir=args.ui_dir,
            registry=_load_registry(args.registry),
            provider=_load_provider(args.provider),
        )
    )
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "evaluate": _cmd_evaluate,
        "whatif": _cmd_whatif,
        "quotient": _cmd_quotient,
        "serve": _cmd_serve,
    }
    try:
        if args.command == "calibrate":
            handler = {"k": _cmd_calibrate_k, "delta": _cmd_calibrate_delta}[args.what]
        else:
            handler = handlers[args.command]
        return handler(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        if any("unknown industry" in f.message for f in exc.findings):
            return EXIT_UNKNOWN_INDUSTRY
        return EXIT_INVALID
    except (DocumentParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnknownIndustryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_INDUSTRY
    except NoPlateauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_PLATEAU
    except (UnknownReferenceError, NotCalibratableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except KeyboardInterrupt:
        return EXIT_INTERNAL
    except PlanningError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
