"""Exception hierarchy.

Everything user-facing derives from SpinboostError.  The CLI maps
InputError (and subclasses) to exit code 2 and NumericError to exit
code 3; property-check failures are reported, not raised.
"""


class SpinboostError(Exception):
    """Base class for all package errors."""


class InputError(SpinboostError, ValueError):
    """Invalid argument: bad shapes, domains, labels, malformed files."""


class ShapeError(InputError):
    """Array dimensions inconsistent with the declared factor structure."""


class ValidationError(InputError):
    """A physics-level precondition failed (normalization, positivity, ...)."""


class StateFileError(InputError):
    """A state file could not be parsed or failed validation."""


class NumericError(SpinboostError, RuntimeError):
    """A numerical procedure failed (non-convergence, bad radicand)."""
