"""Exception hierarchy.

Two families matter to callers: :class:`DecodeError` (bad input data) and
:class:`CapacityError` (an order or arithmetic bound was exceeded).  The CLI
maps them to exit codes 2 and 3 respectively.
"""


class CopermanentError(Exception):
    """Base class for every error raised by this package."""


class DecodeError(CopermanentError, ValueError):
    """Malformed serialized input (graph6 text, checkpoints, reports)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidByte(DecodeError):
    pass


class TruncatedPayload(DecodeError):
    pass


class NonzeroPadding(DecodeError):
    pass


class OrderMismatch(DecodeError):
    """A graph of the wrong order was fed to an order-specific routine."""


class CapacityError(CopermanentError, ArithmeticError):
    """A size or arithmetic bound was exceeded."""


class OrderTooLarge(CapacityError):
    pass


class CoefficientOverflow(CapacityError):
    pass


class DegreeOverflow(CapacityError):
    pass


class EvaluationOverflow(CapacityError):
    pass


class PermanentOverflow(CapacityError):
    pass
