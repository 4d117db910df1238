"""Exceptions raised by fareymap."""


class FareyMapError(Exception):
    """Base class for all library errors."""


class InvalidLevel(FareyMapError, ValueError):
    pass


class InvalidVertex(FareyMapError, ValueError):
    pass


class LevelMismatch(FareyMapError, ValueError):
    pass


class PreconditionViolated(FareyMapError, ValueError):
    pass


class NotPrime(FareyMapError, ValueError):
    pass


class UnsupportedFormat(FareyMapError, ValueError):
    pass


class TooLarge(FareyMapError):
    """The requested object exceeds the enumeration cap."""


class ArithmeticInconsistency(FareyMapError, ArithmeticError):
    """An exact formula produced a value it never should (a bug, not bad input)."""
