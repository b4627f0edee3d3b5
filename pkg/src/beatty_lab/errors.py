"""Exception hierarchy shared by every module."""


class BeattyLabError(Exception):
    """Base class for library errors."""


class InvalidSlope(BeattyLabError, ValueError):
    """A slope or real parameter violates its preconditions."""


class PrecisionExhausted(BeattyLabError, ArithmeticError):
    """A certified decision needs more digits than are available."""


class AmbiguousFloor(BeattyLabError, ArithmeticError):
    """An oracle evaluation could not separate a value from an integer."""
