"""Exception types shared across the package."""

from __future__ import annotations


class ZzdecompError(Exception):
    """Base class for all package errors."""


class ModulusMismatchError(ZzdecompError):
    """Two values with different field moduli were combined."""


class DimensionMismatchError(ZzdecompError):
    """Matrix or subspace shapes are incompatible for the operation."""


class SingularMatrixError(ZzdecompError):
    """Inverse requested of a non-invertible matrix."""


class ModuleValidationError(ZzdecompError):
    """A zigzag module violates a structural invariant."""


class NonSurjectiveError(ZzdecompError):
    """A map required to be surjective is not."""


class NonInjectiveError(ZzdecompError):
    """A map required to be injective is not."""


class IntervalNotFoundError(ZzdecompError):
    """Requested interval is absent from a decomposition."""


class BoundaryIntervalError(ZzdecompError):
    """Interval touches the window boundary where an interior one is required."""


class StreamConsistencyError(ZzdecompError):
    """Consecutive stream windows disagree on their overlap."""


class EngineAssertionError(ZzdecompError):
    """An internal invariant failed; indicates a bug, not bad input."""


class ZzmParseError(ZzdecompError):
    """Syntax or validation error in a ZZM document, with a line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
