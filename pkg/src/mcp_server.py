#!/usr/bin/env python3
"""
Rabi Heun Spectrum MCP Server

Exposes the command-line tables as MCP tools over standard input/output.
Every tool takes the fields of the run configuration and returns the JSON
document the command line emits with --format json.
"""

import json
from typing import Any, Dict, List, Optional

from mcp.server.fastmcp import FastMCP

from core.config import PACKAGE_CONFIG, get_config_summary
from tools.commands import Command, RunConfig, run_command
from tools.reporting import render_json
from utils.error_handler import ErrorHandler
from utils.helpers import _log_tool_execution, format_error_response
from utils.logging_config import get_logger, logging_config, setup_logging

logger = get_logger("mcp")
error_handler = ErrorHandler(logger)

# Create FastMCP application
mcp = FastMCP("Rabi Heun Spectrum")

def _run(command: Command, parameters: Dict[str, Any]) -> str:
    """Validate, run and render one command; errors become an error response"""
    fields = {k: v for k, v in parameters.items() if v is not None}
    try:
        config = RunConfig(command=command, **fields)
        text = render_json(run_command(config), header=False)
        _log_tool_execution(command.value, fields, {"success": True})
        return text
    except Exception as e:
        result = error_handler.handle_error(e, {"command": command.value, "parameters": fields})
        response = format_error_response(result["message"], result["category"])
        response["exit_code"] = result["exit_code"]
        _log_tool_execution(command.value, fields, response)
        return json.dumps(response, ensure_ascii=False)

# =====================================================
# Series and condition functions
# =====================================================

@mcp.tool()
async def hc_table(
    heun: Optional[List[float]] = None,
    heun_set: Optional[str] = None,
    energy: Optional[float] = None,
    delta: Optional[float] = None,
    g: Optional[float] = None,
    x_values: Optional[List[float]] = None,
    n_max: Optional[int] = None,
    tol: Optional[float] = None
) -> str:
    """
    Evaluate the confluent Heun function on an x grid

    Args:
        heun: Explicit parameters [alpha, beta, gamma, delta, eta]
        heun_set: Model parameter set A or B (with energy, delta, g)
        energy: Trial energy for heun_set
        delta: Half level splitting
        g: Coupling
        x_values: Points with |x| < 1 (default 0.0 .. 0.9)
        n_max: Maximum number of series terms
        tol: Convergence tolerance
    """
    return _run(Command.HC, {"heun": heun, "heun_set": heun_set, "energy": energy, "delta": delta,
                             "g": g, "x_values": x_values, "n_max": n_max, "tol": tol})

@mcp.tool()
async def condition_table(
    delta: float,
    g: float,
    e_min: Optional[float] = None,
    e_max: Optional[float] = None,
    e_step: Optional[float] = None,
    z_list: Optional[List[float]] = None
) -> str:
    """
    G and K condition functions over an energy grid

    Args:
        delta: Half level splitting
        g: Coupling
        e_min: Lower end of the energy window
        e_max: Upper end of the energy window
        e_step: Grid step
        z_list: Evaluation points inside (-g, g)
    """
    return _run(Command.CONDITIONS, {"delta": delta, "g": g, "e_min": e_min, "e_max": e_max,
                                     "e_step": e_step, "z_list": z_list})

@mcp.tool()
async def wronskian_table(
    delta: float,
    g: float,
    e_min: Optional[float] = None,
    e_max: Optional[float] = None,
    e_step: Optional[float] = None,
    z_list: Optional[List[float]] = None
) -> str:
    """
    Wronskians W1 and W2 over an energy grid

    Args:
        delta: Half level splitting
        g: Coupling
        e_min: Lower end of the energy window
        e_max: Upper end of the energy window
        e_step: Grid step
        z_list: Evaluation points inside (-g, g)
    """
    return _run(Command.WRONSKIAN, {"delta": delta, "g": g, "e_min": e_min, "e_max": e_max,
                                    "e_step": e_step, "z_list": z_list})

# =====================================================
# Spectrum
# =====================================================

@mcp.tool()
async def spectrum(
    delta: float,
    g: float,
    e_min: Optional[float] = None,
    e_max: Optional[float] = None,
    e_step: Optional[float] = None,
    z_list: Optional[List[float]] = None,
    n_max: Optional[int] = None,
    tol: Optional[float] = None
) -> str:
    """
    Eigenvalues in an energy window with parity and classification

    Args:
        delta: Half level splitting
        g: Coupling
        e_min: Lower end of the energy window
        e_max: Upper end of the energy window
        e_step: Scan step
        z_list: Two or more evaluation points inside (-g, g)
        n_max: Photon truncation of the labelling oracle
        tol: Root refinement tolerance
    """
    return _run(Command.SPECTRUM, {"delta": delta, "g": g, "e_min": e_min, "e_max": e_max,
                                   "e_step": e_step, "z_list": z_list, "n_max": n_max, "tol": tol})

@mcp.tool()
async def judd_curve(
    n1: int = 1,
    g: Optional[float] = None,
    g_min: Optional[float] = None,
    g_max: Optional[float] = None,
    g_step: Optional[float] = None
) -> str:
    """
    Exceptional delta values of the N1-th curve along a coupling grid

    Args:
        n1: Set A truncation order (energy N1 - g^2)
        g: Single coupling
        g_min: Start of the coupling grid
        g_max: End of the coupling grid
        g_step: Coupling grid step
    """
    return _run(Command.JUDD, {"n1": n1, "g": g, "g_min": g_min, "g_max": g_max, "g_step": g_step})

@mcp.tool()
async def oracle_table(
    delta: float,
    g: float,
    e_min: Optional[float] = None,
    e_max: Optional[float] = None,
    n_max: Optional[int] = None,
    tol: Optional[float] = None
) -> str:
    """
    Converged levels of the truncated Fock space diagonalization

    Args:
        delta: Half level splitting (0 allowed)
        g: Coupling (0 allowed)
        e_min: Lower end of the energy window
        e_max: Upper end of the energy window
        n_max: Photon truncation
        tol: Convergence tolerance against the doubled truncation
    """
    return _run(Command.ORACLE, {"delta": delta, "g": g, "e_min": e_min, "e_max": e_max,
                                 "n_max": n_max, "tol": tol})

@mcp.tool()
async def compare_table(
    delta: float,
    g: float,
    e_min: Optional[float] = None,
    e_max: Optional[float] = None,
    e_step: Optional[float] = None,
    z_list: Optional[List[float]] = None,
    n_max: Optional[int] = None
) -> str:
    """
    Analytic spectrum against the oracle, with eigenvector overlaps

    Args:
        delta: Half level splitting
        g: Coupling
        e_min: Lower end of the energy window
        e_max: Upper end of the energy window
        e_step: Scan step
        z_list: Two or more evaluation points inside (-g, g)
        n_max: Photon truncation of the oracle
    """
    return _run(Command.COMPARE, {"delta": delta, "g": g, "e_min": e_min, "e_max": e_max,
                                  "e_step": e_step, "z_list": z_list, "n_max": n_max})

@mcp.resource("rabi-heun://config/summary")
def get_configuration_summary() -> str:
    """Default tolerances and truncations"""
    return json.dumps(get_config_summary(), indent=2, ensure_ascii=False)

@mcp.resource("rabi-heun://diagnostics/errors")
def get_error_diagnostics() -> str:
    """Failures handled since the server started, and the log files in use"""
    diagnostics = {
        "errors": error_handler.get_error_summary(),
        "logs": logging_config.get_log_stats(),
    }
    return json.dumps(diagnostics, indent=2, ensure_ascii=False, default=str)

def main():
    """Main function - Start MCP server"""
    setup_logging()
    logger.info(f"{PACKAGE_CONFIG['name']} MCP server {PACKAGE_CONFIG['version']} starting")
    logger.info("Tools: hc_table, condition_table, wronskian_table, spectrum, "
                "judd_curve, oracle_table, compare_table")
    logger.info("Listening for MCP protocol on standard input/output...")
    mcp.run()

if __name__ == "__main__":
    main()
