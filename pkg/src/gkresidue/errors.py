"""Exception hierarchy.

Errors split into two families that the command line maps to distinct exit
codes: violations of a mathematical precondition (:class:`PreconditionError`)
and malformed input (:class:`InputError`).
"""


class GKError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(GKError):
    """A mathematical hypothesis required by an operation does not hold."""


class InputError(GKError, ValueError):
    """The caller supplied malformed data."""


class ZeroPolynomial(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class UnknownVariable(InputError):
    pass


class ParseError(InputError):
    """Raised for unreadable system files; carries a location string."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)


class DegenerateSum(PreconditionError):
    """The Minkowski sum is not full-dimensional."""


class NotGeneric(PreconditionError):
    """The polytopes are not in generic relative position.

    ``witness`` is a nonzero integer functional for which no supporting face
    of the summands is a vertex, when one is available.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NoFlags(NotGeneric):
    """Some summand is a single point, so no admissible complete flag exists."""


class NotCritical(PreconditionError):
    pass


class NotVertex(PreconditionError):
    pass


class NotPointed(PreconditionError):
    pass


class ConsistencyError(GKError, ArithmeticError):
    """An exact result violated an invariant that should hold by theory.

    This signals a bug (for instance a wrong orientation convention), never
    bad input.
    """
