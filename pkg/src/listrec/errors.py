"""Exception hierarchy.

Every precondition failure raises a subclass of :class:`ListRecError`.
Exhausting a configured enumeration or work budget raises a subclass of
:class:`CapExceeded` instead, so callers (and the CLI exit code) can tell
"your input is wrong" apart from "your input is too big".
"""


class ListRecError(ValueError):
    """Base class for precondition errors."""


class CapExceeded(ListRecError):
    """A search, enumeration or work budget would be exceeded."""


# gf
class NotPrime(ListRecError):
    pass


class NotIrreducible(ListRecError):
    pass


class OrderOverflow(ListRecError):
    pass


class DivisionByZero(ListRecError, ZeroDivisionError):
    pass


class InvalidElement(ListRecError):
    pass


# code
class WrongCoefficientCount(ListRecError):
    pass


class LengthMismatch(ListRecError):
    pass


class EmptyList(ListRecError):
    pass


class IndexOutOfRange(ListRecError):
    pass


class BadSize(ListRecError):
    pass


class InvalidCode(ListRecError):
    pass


class EnumerationTooLarge(CapExceeded):
    pass


# listrecovery / theorem calculus
class RadiusTooLarge(ListRecError):
    pass


class WorkCapExceeded(CapExceeded):
    pass


class SearchSpaceTooLarge(CapExceeded):
    pass


class BadEpsilon(ListRecError):
    pass


class DenominatorNonpositive(ListRecError):
    pass


class RhoTooLarge(ListRecError):
    pass


class BadParameter(ListRecError):
    pass


# adversarial
class TTooLarge(ListRecError):
    pass


class GuardViolated(ListRecError):
    pass


class PointsInvalid(ListRecError):
    pass


class ContainmentBroken(RuntimeError):
    """Raised when a construction fails its own defining property (a bug)."""


# experiments
class AlphaOutOfRange(ListRecError):
    pass


class FormatError(ListRecError):
    """Malformed input file."""
