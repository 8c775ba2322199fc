#!/usr/bin/env python3
"""
Helper Functions Module

Contains response formatting and JSON conversion helpers shared by the
command line and the tool server
"""

import math
from enum import Enum
from typing import Any, Dict

import numpy as np

from utils.logging_config import get_logger

logger = get_logger("helpers")

def _log_tool_execution(tool_name: str, parameters: Dict[str, Any], result: Dict[str, Any]) -> None:
    """Log tool execution

    Args:
        tool_name: Command or tool name
        parameters: Input parameters
        result: Execution result
    """
    status = "success" if result.get("success", False) else "failed"
    logger.info(f"Tool execution {tool_name}: {status}", extra={"context": {"parameters": parameters}})

    if not result.get("success", False) and "error" in result:
        logger.error(f"Tool {tool_name} error: {result['error']}")

def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars, arrays, enums and non-finite floats to JSON values"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value

def format_error_response(error_message: str, error_code: str = None) -> Dict[str, Any]:
    """Format error response

    Args:
        error_message: Error message
        error_code: Error code (optional)

    Returns:
        Dict[str, Any]: Standardized error response
    """
    response: Dict[str, Any] = {
        "success": False,
        "error": error_message
    }

    if error_code:
        response["error_code"] = error_code

    return response
