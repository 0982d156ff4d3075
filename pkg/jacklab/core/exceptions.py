"""
Exception hierarchy for jacklab.
"""


class JackLabError(Exception):
    """Base class for all errors raised by jacklab."""


class PartitionError(JackLabError, ValueError):
    """Malformed partition or a comparison between incomparable sizes."""


class ConversionError(JackLabError, ArithmeticError):
    """A coefficient does not lie in the requested ring."""


class DegreeBoundError(JackLabError, ArithmeticError):
    """A Laurent polynomial exceeds the asserted degree."""


class CountingIdentityError(JackLabError):
    """A counting identity produced a non-integral or negative value."""


class DegenerateBasisError(JackLabError):
    """A character matrix turned out to be singular."""


class MapStructureError(JackLabError, ValueError):
    """A map violates the structure an operation requires."""


class MatchingError(JackLabError, ValueError):
    """A matching is malformed or outside the requested class."""


class OracleMismatchError(JackLabError):
    """Two independent computations of the same quantity disagree."""


class UnknownSuiteError(JackLabError, KeyError):
    """The requested verification suite does not exist."""


class BasisMismatchError(JackLabError, ValueError):
    """Symmetric functions in different bases or degrees were combined."""
