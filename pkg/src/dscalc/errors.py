"""Exception types raised across the belief-calculus engine.

Everything derives from a builtin category (ValueError, TypeError, ...)
so callers that only know the stdlib hierarchy still catch sensibly.
"""

from __future__ import annotations


class FrameDefinitionError(ValueError):
    """A frame could not be constructed from the given labels."""


class EmptyFrameError(FrameDefinitionError):
    """No labels were given."""


class DuplicateLabelError(FrameDefinitionError):
    """The same label appears twice."""


class FrameSizeError(FrameDefinitionError):
    """More than 64 labels; subsets are single machine words."""


class FrameMismatchError(ValueError):
    """Operands belong to different frames (frames compare by identity)."""


class RefinementError(ValueError):
    """A coarse-to-fine mapping is not a disjoint partition of the fine frame."""


class ModeMismatchError(TypeError):
    """Arithmetic attempted between scalars of different modes.

    There is no silent promotion between rational, float and symbolic
    values; the caller must convert explicitly.
    """


class DegreeOverflowError(OverflowError):
    """A polynomial exponent exceeded the per-variable cap of 64."""


class ZeroDenominatorError(ZeroDivisionError):
    """Division by zero, or a rational function with zero denominator."""


class UndefinedPointError(ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""


class MassValidationError(ValueError):
    """An assignment violates the mass-function invariants."""


class TotalConflictError(ArithmeticError):
    """Dempster combination with normalizing constant K = 0."""


class ScenarioError(ValueError):
    """Unknown scenario name or invalid scenario parameters."""


class ParseError(ValueError):
    """A program text failed to parse; carries source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ExecutionError(RuntimeError):
    """A statement failed while executing a program; carries its line."""

    def __init__(self, message: str, line: int, cause: Exception | None = None):
        super().__init__(f"line {line}: {message}")
        self.message = message
        self.line = line
        self.cause = cause
