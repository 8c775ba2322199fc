#!/usr/bin/env python3
"""
Error Handling Module

Provides the exception hierarchy of the solver, error classification,
structured error logging and the mapping from error categories to CLI exit codes
"""

import traceback
import time
from typing import Any, Dict, List
from enum import Enum
import logging
from datetime import datetime

# Error severity levels
class ErrorSeverity(Enum):
    LOW = "low"           # Input problem, nothing was computed
    MEDIUM = "medium"     # A single evaluation failed, caller may reroute
    HIGH = "high"         # A command could not produce its result
    CRITICAL = "critical" # Internal identity violated

# Error categories
class ErrorCategory(Enum):
    NUMERICAL_DOMAIN = "numerical_domain"  # Poles, out-of-domain arguments
    CONVERGENCE = "convergence"            # Series or eigensolver did not converge
    CONSISTENCY = "consistency"            # Asserted identity failed
    VALIDATION = "validation"              # Invalid parameters or flags
    FILESYSTEM = "filesystem"              # Output file errors
    UNKNOWN = "unknown"                    # Unknown errors

# Exit code per category, see EXIT_CODES in core.config
CATEGORY_EXIT_CODES = {
    ErrorCategory.VALIDATION: 2,
    ErrorCategory.NUMERICAL_DOMAIN: 3,
    ErrorCategory.CONSISTENCY: 3,
    ErrorCategory.CONVERGENCE: 4,
    ErrorCategory.FILESYSTEM: 2,
    ErrorCategory.UNKNOWN: 1,
}

# Custom exception classes
class RabiHeunError(Exception):
    """Base exception class for solver errors"""
    def __init__(self, message: str, category: ErrorCategory = ErrorCategory.UNKNOWN,
                 severity: ErrorSeverity = ErrorSeverity.MEDIUM, details: Dict[str, Any] = None):
        super().__init__(message)
        self.message = message
        self.category = category
        self.severity = severity
        self.details = details or {}
        self.timestamp = datetime.now()

class DomainError(RabiHeunError):
    """Argument outside the convergence domain of the series"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.NUMERICAL_DOMAIN, ErrorSeverity.MEDIUM, details)

class PoleError(RabiHeunError):
    """Recurrence hit A_n = 0 with a nonzero numerator (energy on a series pole)"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.NUMERICAL_DOMAIN, ErrorSeverity.MEDIUM, details)

class RatioPole(RabiHeunError):
    """Energy on the ratio pole E = -g^2 of the solution constants"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.NUMERICAL_DOMAIN, ErrorSeverity.MEDIUM, details)

class InconsistentTruncation(RabiHeunError):
    """Truncation residual requested for parameters violating the delta-condition"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.NUMERICAL_DOMAIN, ErrorSeverity.MEDIUM, details)

class OffCurve(RabiHeunError):
    """Model parameters are not on the requested exceptional curve"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.NUMERICAL_DOMAIN, ErrorSeverity.MEDIUM, details)

class LostBracket(RabiHeunError):
    """Root bracket lost its sign structure during refinement"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.NUMERICAL_DOMAIN, ErrorSeverity.LOW, details)

class TruncationError(RabiHeunError):
    """Fock expansion did not decay below the tail tolerance"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.CONVERGENCE, ErrorSeverity.HIGH, details)

class NonConvergence(RabiHeunError):
    """Oracle truncation too small to converge the requested levels"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.CONVERGENCE, ErrorSeverity.HIGH, details)

class OracleUnavailable(RabiHeunError):
    """Oracle diagonalization could not be used for labelling"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.CONVERGENCE, ErrorSeverity.LOW, details)

class ConsistencyError(RabiHeunError):
    """Two representations of the same quantity disagree"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.CONSISTENCY, ErrorSeverity.CRITICAL, details)

class ValidationError(RabiHeunError):
    """Data validation error"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, ErrorCategory.VALIDATION, ErrorSeverity.LOW, details)

class DivergenceWarning(RuntimeWarning):
    """Series reached n_max before the convergence test passed"""

class ErrorHandler:
    """Error Handler

    Classifies exceptions, logs them with structured context, keeps a bounded
    history and maps each failure to the exit code of the command line
    """

    def __init__(self, logger: logging.Logger):
        self.logger = logger
        self.error_history: List[Dict[str, Any]] = []
        self.max_history_size = 100

    def handle_error(self, error: Exception, context: Dict[str, Any] = None) -> Dict[str, Any]:
        """Handle error

        Args:
            error: Exception object
            context: Error context information (command, parameters)

        Returns:
            Dict[str, Any]: Error handling result including the exit code
        """
        solver_error = self._classify_error(error, context)
        error_record = self._log_error(solver_error, context)
        self._add_to_history(error_record)
        user_report = self._generate_user_report(solver_error)

        return {
            "error_id": error_record["error_id"],
            "category": solver_error.category.value,
            "severity": solver_error.severity.value,
            "error_type": type(error).__name__,
            "message": solver_error.message,
            "user_message": user_report["user_message"],
            "details": solver_error.details,
            "exit_code": self.exit_code_for(solver_error),
            "timestamp": solver_error.timestamp.isoformat()
        }

    def exit_code_for(self, error: Exception) -> int:
        """Exit code of the command line for an error"""
        if isinstance(error, RabiHeunError):
            return CATEGORY_EXIT_CODES.get(error.category, 1)
        return CATEGORY_EXIT_CODES[self._classify_error(error).category]

    def _classify_error(self, error: Exception, context: Dict[str, Any] = None) -> RabiHeunError:
        """Classify error"""
        if isinstance(error, RabiHeunError):
            return error

        error_message = str(error)
        error_type = type(error).__name__

        if isinstance(error, (ZeroDivisionError, OverflowError, FloatingPointError)):
            return RabiHeunError(
                f"Numerical domain error: {error_message}",
                ErrorCategory.NUMERICAL_DOMAIN,
                ErrorSeverity.MEDIUM,
                {"original_error": error_type, "context": context}
            )

        if isinstance(error, (OSError, PermissionError)):
            return RabiHeunError(
                f"Output error: {error_message}",
                ErrorCategory.FILESYSTEM,
                ErrorSeverity.HIGH,
                {"original_error": error_type, "context": context}
            )

        if isinstance(error, (ValueError, TypeError)) or any(
                keyword in error_message.lower() for keyword in ["invalid", "validation", "parameter"]):
            return ValidationError(
                f"Data validation error: {error_message}",
                {"original_error": error_type, "context": context}
            )

        return RabiHeunError(
            f"Unknown error: {error_message}",
            ErrorCategory.UNKNOWN,
            ErrorSeverity.MEDIUM,
            {"original_error": error_type, "context": context}
        )

    def _log_error(self, error: RabiHeunError, context: Dict[str, Any] = None) -> Dict[str, Any]:
        """Log error"""
        error_id = f"ERR_{int(time.time() * 1000)}"

        error_record = {
            "error_id": error_id,
            "timestamp": error.timestamp,
            "category": error.category.value,
            "severity": error.severity.value,
            "message": error.message,
            "details": error.details,
            "context": context or {},
            "traceback": traceback.format_exc()
        }

        log_level = {
            ErrorSeverity.LOW: logging.INFO,
            ErrorSeverity.MEDIUM: logging.WARNING,
            ErrorSeverity.HIGH: logging.ERROR,
            ErrorSeverity.CRITICAL: logging.CRITICAL
        }.get(error.severity, logging.ERROR)

        self.logger.log(
            log_level,
            f"[{error_id}] {error.category.value.upper()}: {error.message}",
            extra={
                "error_id": error_id,
                "category": error.category.value,
                "severity": error.severity.value,
                "details": error.details,
                "context": context
            }
        )

        return error_record

    def _add_to_history(self, error_record: Dict[str, Any]):
        """Add to error history"""
        self.error_history.append(error_record)

        if len(self.error_history) > self.max_history_size:
            self.error_history = self.error_history[-self.max_history_size:]

    def _generate_user_report(self, error: RabiHeunError) -> Dict[str, Any]:
        """Generate user-friendly error report"""
        user_messages = {
            ErrorCategory.NUMERICAL_DOMAIN: "The requested energy or argument sits on a pole or outside the "
                                            "convergence domain; move E off the baselines m - g^2 or keep z inside (-g, g).",
            ErrorCategory.CONVERGENCE: "A series or truncated expansion did not converge; raise --nmax or relax --tol.",
            ErrorCategory.CONSISTENCY: "Two representations of the same condition function disagree; "
                                       "the inputs are numerically ill-conditioned.",
            ErrorCategory.VALIDATION: "Input parameters are incorrect, please check and correct parameter values.",
            ErrorCategory.FILESYSTEM: "The output file could not be written, please check the path.",
        }

        return {
            "user_message": user_messages.get(
                error.category,
                "An issue was encountered, please check technical details."
            ),
            "technical_details": {
                "error_type": error.category.value,
                "severity": error.severity.value,
                "message": error.message,
                "timestamp": error.timestamp.isoformat()
            }
        }

    def get_error_summary(self) -> Dict[str, Any]:
        """Get error summary"""
        if not self.error_history:
            return {"total_errors": 0}

        categories: Dict[str, int] = {}
        severities: Dict[str, int] = {}

        for error in self.error_history:
            cat = error["category"]
            sev = error["severity"]
            categories[cat] = categories.get(cat, 0) + 1
            severities[sev] = severities.get(sev, 0) + 1

        return {
            "total_errors": len(self.error_history),
            "categories": categories,
            "severities": severities,
            "last_error": self.error_history[-1]
        }
