"""Exception types and checked integer arithmetic shared by every module."""

INT_LIMIT = 2**63 - 1


class BsdhError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(BsdhError, ValueError):
    """Input data (Cartan matrix, word, positions, divisor) is malformed."""


class ArithmeticOverflow(BsdhError, OverflowError):
    """An integer left the signed 64-bit range."""


class ConsistencyError(BsdhError, RuntimeError):
    """Two independent algorithms disagreed. Always a bug, never a user error."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


def checked(value: int) -> int:
    # Python ints never wrap; the bound keeps results portable to fixed-width consumers.
    if -INT_LIMIT <= value <= INT_LIMIT:
        return value
    raise ArithmeticOverflow(f"integer {value} exceeds signed 64-bit range")
