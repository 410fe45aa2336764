"""
Custom exceptions for the monotone CLT toolkit.
"""

from typing import List, Optional


class MonotoneCLTError(Exception):
    """Base exception for all monotone CLT errors."""
    pass


class InvalidInputError(MonotoneCLTError):
    """Raised when an operation's pre-condition is violated."""

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        super().__init__(message)
        self.errors = errors or []

    def __str__(self):
        base_message = super().__str__()
        if self.errors:
            error_details = "\n".join(f"  - {error}" for error in self.errors)
            base_message = f"{base_message}\nDetails:\n{error_details}"
        return base_message


class ResourceLimitError(MonotoneCLTError):
    """Raised when an enumeration would exceed the configured cap."""

    def __init__(self, message: str, requested: int, cap: int):
        super().__init__(message)
        self.requested = requested
        self.cap = cap

    def __str__(self):
        return f"{super().__str__()} (requested {self.requested}, cap {self.cap})"


class InsufficientMomentsError(MonotoneCLTError):
    """Raised when a moment sequence is too short for the requested reduction."""

    def __init__(self, color: int, required_order: int, available_order: int):
        super().__init__(
            f"Color {color} needs moments up to order {required_order}, "
            f"but its sequence stops at order {available_order}"
        )
        self.color = color
        self.required_order = required_order
        self.available_order = available_order


class DomainError(MonotoneCLTError):
    """Raised when a density is evaluated outside its open support."""
    pass


class ConvergenceError(MonotoneCLTError):
    """Raised when quadrature cannot reach the tolerance within the panel cap."""

    def __init__(self, message: str, estimate: float, error_bound: float, panels: int):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
        self.panels = panels

    def __str__(self):
        return (f"{super().__str__()}: estimate {self.estimate!r}, "
                f"error bound {self.error_bound:.3e} at {self.panels} panels")


class MomentFileError(MonotoneCLTError):
    """Raised when a moment file cannot be parsed or fails validation."""

    def __init__(self, message: str, errors: Optional[List[str]] = None,
                 line_number: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message)
        self.errors = errors or []
        self.line_number = line_number
        self.column = column

    def __str__(self):
        base_message = super().__str__()
        if self.line_number and self.column:
            base_message = f"Line {self.line_number}, Column {self.column}: {base_message}"
        elif self.line_number:
            base_message = f"Line {self.line_number}: {base_message}"
        if self.errors:
            error_details = "\n".join(f"  - {error}" for error in self.errors)
            base_message = f"{base_message}\nValidation errors:\n{error_details}"
        return base_message


class ConfigurationError(MonotoneCLTError):
    """Raised when a run configuration is malformed."""
    pass


class SchemaError(MonotoneCLTError):
    """Raised when a bundled JSON schema cannot be loaded."""
    pass
