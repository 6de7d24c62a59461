"""Exception types raised by the library.

Every error derives from ``ParabolicaError`` so the CLI can map user errors to
exit code 1 and ``InvariantViolation`` to exit code 2.
"""


class ParabolicaError(Exception):
    """Base class for all library errors."""


class IndexOutOfRange(ParabolicaError, ValueError):
    pass


class StrandMismatch(ParabolicaError, ValueError):
    pass


class GroupMismatch(ParabolicaError, ValueError):
    pass


class InvalidInterval(ParabolicaError, ValueError):
    pass


class NotPure(ParabolicaError, ValueError):
    pass


class NotInImage(ParabolicaError, ValueError):
    """The braid is pure in the required sense but outside the embedding's image."""


class NotRound(ParabolicaError, ValueError):
    pass


class NotBraidSubgroup(ParabolicaError, ValueError):
    pass


class NotAdjacent(ParabolicaError, ValueError):
    pass


class SurroundsBothEnds(ParabolicaError, ValueError):
    pass


class AdmissibilityError(ParabolicaError, ValueError):
    pass


class VertexMissing(ParabolicaError, KeyError):
    pass


class SearchExhausted(ParabolicaError, RuntimeError):
    pass


class InvariantViolation(ParabolicaError, AssertionError):
    """A result failed its self-check. Indicates a bug or a false claim."""


class UnsupportedWitness(InvariantViolation):
    pass
