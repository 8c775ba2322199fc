#!/usr/bin/env python3
"""
Rabi Heun Spectrum - Command Line

Evaluates confluent Heun functions and the analytic Rabi model solutions,
scans the spectral condition functions, computes the spectrum, traces the
exceptional curves and compares against the Fock space diagonalization.
Tables go to standard output (or --out) as CSV or JSON; logs go to
standard error.

Exit codes: 0 success, 2 usage error, 3 numerical domain error,
4 convergence failure.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError as ConfigValidationError

from core.config import EXIT_CODES, LOG_CONFIG, PACKAGE_CONFIG
from tools.commands import Command, OutputFormat, RunConfig, run_command
from tools.reporting import render
from utils.error_handler import ErrorHandler
from utils.logging_config import get_logger, setup_logging

logger = get_logger("cli")
error_handler = ErrorHandler(logger)

__all__ = ["RunConfig", "build_parser", "config_from_args", "main"]

def _float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabi-heun",
        description=PACKAGE_CONFIG["description"],
        epilog="Negative list values need the --opt=value form, e.g. --z=-0.3,0,0.3",
    )
    parser.add_argument("command", choices=[c.value for c in Command], help="Command to run")

    model = parser.add_argument_group("model")
    model.add_argument("--delta", type=float, help="Half level splitting in units of the mode frequency")
    model.add_argument("--g", type=float, help="Coupling in units of the mode frequency")

    scan = parser.add_argument_group("energy scan")
    scan.add_argument("--emin", type=float, dest="e_min", help="Lower end of the energy window")
    scan.add_argument("--emax", type=float, dest="e_max", help="Upper end of the energy window")
    scan.add_argument("--estep", type=float, dest="e_step", help="Energy grid step")
    scan.add_argument("--z", type=_float_list, dest="z_list",
                      help="Comma-separated evaluation points inside (-g, g)")
    scan.add_argument("--nmax", type=int, dest="n_max",
                      help="Series terms (hc) or photon truncation (oracle, spectrum, compare)")
    scan.add_argument("--tol", type=float, help="Series or refinement tolerance")

    heun = parser.add_argument_group("hc")
    heun.add_argument("--x", type=_float_list, dest="x_values", help="Comma-separated x values with |x| < 1")
    heun.add_argument("--set", choices=["A", "B"], dest="heun_set", help="Heun parameter set of the model")
    heun.add_argument("--energy", type=float, help="Trial energy for --set")
    heun.add_argument("--heun", type=_float_list, help="Explicit alpha,beta,gamma,delta,eta")

    judd = parser.add_argument_group("judd")
    judd.add_argument("--n1", type=int, default=1, help="Set A truncation order of the exceptional curve")
    judd.add_argument("--gmin", type=float, dest="g_min")
    judd.add_argument("--gmax", type=float, dest="g_max")
    judd.add_argument("--gstep", type=float, dest="g_step")

    out = parser.add_argument_group("output")
    out.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    out.add_argument("--out", dest="output", help="Output file (default: standard output)")
    out.add_argument("--no-header", action="store_true", help="Omit the timestamp header line")
    out.add_argument("--log-dir", default=LOG_CONFIG["log_directory"], help="Directory for rotating log files")
    out.add_argument("--log-level", default=LOG_CONFIG["console_level"], help="Console log level")
    return parser

def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields: Dict[str, Any] = {
        key: getattr(args, key)
        for key in ("command", "delta", "g", "e_min", "e_max", "e_step", "z_list", "n_max", "tol",
                    "format", "output", "x_values", "heun_set", "energy", "heun", "n1",
                    "g_min", "g_max", "g_step")
        if getattr(args, key) is not None
    }
    fields["header"] = not args.no_header
    return RunConfig(**fields)

def _write(text: str, output: Optional[str]):
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(log_dir=args.log_dir, console_level=args.log_level)
    logging.captureWarnings(True)

    try:
        config = config_from_args(args)
    except ConfigValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        print(f"rabi-heun: invalid arguments: {messages}", file=sys.stderr)
        return EXIT_CODES["usage"]

    try:
        output = run_command(config)
        _write(render(output, config.format.value, config.header), config.output)
    except Exception as e:
        result = error_handler.handle_error(e, {"command": config.command.value,
                                                "parameters": config.parameters()})
        print(f"rabi-heun: {result['message']}\n  {result['user_message']}", file=sys.stderr)
        return result["exit_code"]

    logger.info(f"{config.command.value} finished with {output.row_count} rows")
    return EXIT_CODES["success"]

if __name__ == "__main__":
    sys.exit(main())
