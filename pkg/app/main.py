"""
Command-line front end.

    genus-bounds params --r R --i I [--d D]
    genus-bounds bound --kind KIND [--r R] [--d D] [--i I] [--s S] [--pi P] [--j J] [--strict]
    genus-bounds verify --suite NAME|all [--r-max N] [--i-max N] [--d-max N] [--workers N]
                        [--enumeration-cap N]
    genus-bounds sweep --r A..B --i A..B --d A..B [--format csv|json] [--workers N]
    genus-bounds appendix-table [--format text|json]

Data goes to stdout, diagnostics to stderr. Exit status 0 on success, 1 when
a verification fails, 2 on usage or validation errors.
"""

import argparse
import json
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from genus_core.config import ConfigValidationError
from genus_core.errors import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    GenusError,
    raise_validation_error,
)
from genus_core.utils.logging import (
    LogConfig,
    get_logger,
    log_error_with_context,
    log_run_end,
    log_run_start,
    setup_logging,
)

from . import bounds
from .config import CONFIG_FILE_ENV, CalculatorConfig, load_config
from .params import derive_params
from .schemas import CliInvocation, SectionData, ValueResult
from .sweep import emit_csv, emit_json, sweep
from .threshold import d0_threshold
from .verify import SUITE_NAMES, appendix_r4_table, run_all, run_suite

logger = get_logger(__name__)

BOUND_KINDS = (
    "castelnuovo",
    "g0",
    "beta0",
    "clifford",
    "suff",
    "d0",
    "r6",
    "r9",
    "interval",
    "projection",
    "ambient",
    "asymptotic",
    "coarse",
    "intersection",
)

# arguments each bound kind needs
BOUND_ARGUMENTS: Dict[str, Sequence[str]] = {
    "castelnuovo": ("r", "d"),
    "g0": ("r", "d", "i"),
    "beta0": ("r", "d", "i"),
    "clifford": ("s", "pi", "j"),
    "suff": ("r", "s", "pi", "i"),
    "d0": ("r", "i"),
    "r6": ("d",),
    "r9": ("r", "d"),
    "interval": ("r", "d"),
    "projection": ("r", "i", "pi"),
    "ambient": ("r", "i"),
    "asymptotic": ("r", "i"),
    "coarse": ("r", "d", "i"),
    "intersection": ("r", "d", "i"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def parse_range(text: str) -> range:
    """``A..B`` inclusive on both ends, or a single integer."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            start, stop = int(low), int(high)
        else:
            start = stop = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}, expected A..B")
    if start > stop:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(start, stop + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genus-bounds", description="Exact genus bounds for space curves")
    parser.add_argument("--log-level", default=None, help="Logging level (default from config)")
    parser.add_argument("--config", default=None, help=f"YAML config file (or ${CONFIG_FILE_ENV})")
    commands = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    params = commands.add_parser("params", help="Print the derived parameters")
    params.add_argument("--r", type=int, required=True)
    params.add_argument("--i", type=int, required=True)
    params.add_argument("--d", type=int)
    params.add_argument("--format", choices=("json", "text"), default="json")

    bound = commands.add_parser("bound", help="Compute one bound")
    bound.add_argument("--kind", choices=BOUND_KINDS, required=True)
    for name in ("r", "d", "i", "s", "pi", "j"):
        bound.add_argument(f"--{name}", type=int)
    bound.add_argument("--strict", action="store_true", help="Refuse degrees d <= d0")
    bound.add_argument("--format", choices=("json", "text"), default="json")

    verify = commands.add_parser("verify", help="Run verification suites")
    verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    verify.add_argument("--r-max", type=int)
    verify.add_argument("--i-max", type=int)
    verify.add_argument("--d-max", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--enumeration-cap", type=int, help="Per-cell size above which suites sample")
    verify.add_argument("--format", choices=("json",), default="json")

    table = commands.add_parser("sweep", help="Tabulate bounds over a grid")
    table.add_argument("--r", type=parse_range, required=True)
    table.add_argument("--i", type=parse_range, required=True)
    table.add_argument("--d", type=parse_range, required=True)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--workers", type=int)

    appendix = commands.add_parser("appendix-table", help="Print the r = 4 appendix cases")
    appendix.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _dump(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    elif isinstance(payload, list):
        payload = [item.model_dump(mode="json") if isinstance(item, BaseModel) else item for item in payload]
    return json.dumps(payload, indent=2)


def _text(payload: BaseModel) -> str:
    return "\n".join(f"{key}: {value}" for key, value in payload.model_dump(mode="json").items())


def _write(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _run_params(args: argparse.Namespace, config: CalculatorConfig, out) -> int:
    derived = derive_params(args.r, args.i, args.d)
    _write(out, _dump(derived) if args.format == "json" else _text(derived))
    return EXIT_OK


def _bound_payload(args: argparse.Namespace, config: CalculatorConfig) -> BaseModel:
    kind = args.kind
    missing = [name for name in BOUND_ARGUMENTS[kind] if getattr(args, name) is None]
    if missing:
        raise_validation_error(
            f"bound --kind {kind} needs " + ", ".join(f"--{name}" for name in missing),
            field="kind",
            value=kind,
        )
    r, d, i = args.r, args.d, args.i
    inputs = {name: getattr(args, name) for name in BOUND_ARGUMENTS[kind]}

    computed: Dict[str, Callable[[], Any]] = {
        "castelnuovo": lambda: bounds.castelnuovo_bound(r, d),
        "clifford": lambda: bounds.clifford_h0_upper(
            SectionData(s=args.s, pi=args.pi, j=args.j, r=r)
        ),
        "suff": lambda: bounds.surface_sections_lower(r, args.s, args.pi, i),
        "d0": lambda: d0_threshold(r, i, config),
        "projection": lambda: list(bounds.projection_range(r, i, args.pi)),
        "ambient": lambda: list(bounds.ambient_range(r, i)),
        "asymptotic": lambda: str(bounds.asymptotic_coefficient(r, i)),
        "coarse": lambda: bounds.coarse_bound(r, d, i),
        "intersection": lambda: bounds.complete_intersection_genus(r, d, i),
    }
    if kind in computed:
        return ValueResult(kind=kind, inputs=inputs, value=computed[kind]())

    if kind == "g0":
        return bounds.g0_bound(r, d, i, config)
    if kind == "beta0":
        return bounds.beta0_bound(r, d, i, config)
    if kind == "r6":
        if r is not None and r != 6:
            raise_validation_error("bound --kind r6 is for r = 6", field="r", value=r)
        return bounds.g_sharp_r6(d, args.strict, config)
    if kind == "r9":
        return bounds.candidates_result(r, d, args.strict, config)
    return bounds.interval_result(r, d, args.strict, config)


def _run_bound(args: argparse.Namespace, config: CalculatorConfig, out) -> int:
    payload = _bound_payload(args, config)
    _write(out, _dump(payload) if args.format == "json" else _text(payload))
    return EXIT_OK


def _run_verify(args: argparse.Namespace, config: CalculatorConfig, out) -> int:
    if args.suite == "all":
        reports = run_all(config)
        _write(out, _dump(reports))
    else:
        reports = [run_suite(args.suite, config)]
        _write(out, _dump(reports[0]))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_VERIFICATION_FAILED


def _run_sweep(args: argparse.Namespace, config: CalculatorConfig, out) -> int:
    result = sweep(args.r, args.i, args.d, config)
    encoded = emit_csv(result.rows) if args.format == "csv" else emit_json(result.rows)
    _write(out, encoded.decode("utf-8"))
    return EXIT_OK


def _run_appendix_table(args: argparse.Namespace, config: CalculatorConfig, out) -> int:
    cases = appendix_r4_table()
    if args.format == "json":
        _write(out, _dump(cases))
        return EXIT_OK
    header = ("i", "s0", "c0", "gamma", "value")
    lines = [header] + [tuple(str(getattr(case, key)) for key in header) for case in cases]
    widths = [max(len(line[k]) for line in lines) for k in range(len(header))]
    for line in lines:
        out.write("  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip() + "\n")
    return EXIT_OK


COMMANDS = {
    "params": _run_params,
    "bound": _run_bound,
    "verify": _run_verify,
    "sweep": _run_sweep,
    "appendix-table": _run_appendix_table,
}


def _load_run_config(args: argparse.Namespace) -> CalculatorConfig:
    overrides: Dict[str, Any] = {"log_level": args.log_level}
    if args.subcommand == "verify":
        overrides.update(
            r_max=args.r_max,
            i_max=args.i_max,
            d_max=args.d_max,
            workers=args.workers,
            enumeration_cap=args.enumeration_cap,
        )
    elif args.subcommand == "sweep":
        overrides["workers"] = args.workers
    return load_config(args.config, **overrides)


def run(argv: Optional[List[str]] = None, out=None) -> int:
    """Execute one command line; returns the exit status."""
    out = out or sys.stdout
    started = time.perf_counter()
    command = "genus-bounds"
    try:
        args = build_parser().parse_args(argv)
        command = args.subcommand
        config = _load_run_config(args)
        setup_logging(LogConfig(level=config.log_level), config.service_name)
        invocation = CliInvocation(
            subcommand=args.subcommand,
            flags={key: value for key, value in vars(args).items() if key != "subcommand"},
            output_format=getattr(args, "format", "json"),
        )
        log_run_start(logger, command, config.service_version)
        logger.debug(f"Invocation: {invocation.model_dump()}")
        status = COMMANDS[command](args, config, out)
    except SystemExit as exc:
        status = exc.code if isinstance(exc.code, int) else EXIT_OK
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        status = EXIT_USAGE
    except GenusError as exc:
        log_error_with_context(logger, exc, json.dumps(exc.to_dict()))
        status = exc.exit_status
    except (ValidationError, ConfigValidationError) as exc:
        log_error_with_context(logger, exc, command)
        status = EXIT_USAGE
    log_run_end(logger, command, status, (time.perf_counter() - started) * 1000)
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
