"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ThreeArcError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ThreeArcError, ValueError):
    """An input violates a documented precondition."""


class MalformedInputError(ValidationError):
    """Text input could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(ValidationError):
    """An operation was called on a graph outside its domain (e.g. a claw, δ too small)."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(ThreeArcError, RuntimeError):
    """A configured search or size budget was exhausted.

    ``best`` carries the best partial result known when the limit hit (if any),
    ``stage`` an optional description of where it happened.
    """

    def __init__(self, message: str, best=None, stage=None):
        super().__init__(message)
        self.best = best
        self.stage = stage


class GenerationFailed(ThreeArcError, RuntimeError):
    """Random generation exhausted its retry budget."""


class VerificationError(ThreeArcError, AssertionError):
    """A constructed object failed its own re-verification (an implementation bug)."""

    def __init__(self, message: str, witness=None, plan=None):
        super().__init__(message)
        self.witness = witness
        self.plan = plan
