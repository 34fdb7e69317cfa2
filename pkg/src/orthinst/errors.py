"""Exception types shared across the package."""

from __future__ import annotations


class OrthinstError(Exception):
    """Base class for every error raised by this package."""


class NonSquare(OrthinstError):
    pass


class Singular(OrthinstError):
    pass


class OddOrder(OrthinstError):
    pass


class NotSymmetric(OrthinstError):
    pass


class BadSubset(OrthinstError):
    pass


class RankMismatch(OrthinstError):
    pass


class DegenerateLine(OrthinstError):
    pass


class PreconditionN(OrthinstError):
    pass


class HypothesisViolation(OrthinstError):
    pass


class UsageError(OrthinstError):
    pass


class SchemaError(OrthinstError):
    """Invalid input document.  ``violations`` is a list of
    (json-pointer, message) pairs locating every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        msg = "; ".join(f"{ptr}: {m}" for ptr, m in self.violations)
        super().__init__(msg or "schema error")


class ShapeMismatch(SchemaError):
    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__([(pointer, message)])


class NotSkew(SchemaError):
    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__([(pointer, message)])


class GenerationExhausted(OrthinstError):
    def __init__(self, message, attempts=0):
        self.attempts = attempts
        super().__init__(message)
