"""Exception types shared by every module.

The CLI maps these onto exit codes: invalid-argument -> 1, out-of-range -> 2.
"""


class ArithmeticMetricError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(ArithmeticMetricError, ValueError):
    """An argument violates an operation's precondition (zero, non-prime, ...)."""


class OutOfRangeError(ArithmeticMetricError, ValueError):
    """An argument or intermediate result exceeds a configured or 64-bit bound."""


class EmptyIndexError(ArithmeticMetricError, LookupError):
    """A nearest-neighbour query was issued against an empty index."""
