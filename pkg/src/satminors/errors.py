"""Shared exception types."""


class ContextMismatch(ValueError):
    """Operands were built over different ring contexts."""


class ResourceExhausted(RuntimeError):
    """A configurable computation budget (pairs, degree, steps) ran out."""


class NotZeroDimensional(ValueError):
    """Operation requires a zero-dimensional ideal."""


class NonSquare(ValueError):
    """Determinant of a non-square matrix."""


class ConstructionError(RuntimeError):
    """An identity the construction guarantees failed to hold; a bug."""


class HypothesisNotSatisfied(ValueError):
    """Input does not satisfy the hypothesis the check needs."""


class CertificateMissing(RuntimeError):
    """A derived quantity was requested before its certificate was computed."""
