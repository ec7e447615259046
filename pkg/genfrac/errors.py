"""
Exception hierarchy for genfrac.

Validation problems (bad input, failed preconditions) and numerical guards
(series caps, overflow, non-convergent quadrature) are kept apart because the
command line maps them to different exit codes.
"""
from typing import Optional


class GenFracError(Exception):
    """Base class for all genfrac errors."""

    exit_code = 1


class ValidationError(GenFracError, ValueError):
    """Invalid input or violated precondition."""

    exit_code = 2


class MeasureSpecError(ValidationError):
    """Parse error in a textual measure specification."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            pointer = " " * position + "^"
            message = f"{message} at position {position}\n  {text}\n  {pointer}"
        super().__init__(message)


class InvalidMeasureError(ValidationError):
    """Measure parameters violate the one-sided Levy condition or support rules."""


class NumericalGuardError(GenFracError, ArithmeticError):
    """A numerical safeguard tripped (overflow, cap reached, tail too large)."""

    exit_code = 3


class QuadratureError(NumericalGuardError):
    """Adaptive quadrature did not converge to the requested tolerance."""
