"""Exception hierarchy shared by every module of the package."""


class StarRingError(Exception):
    """Base class for all errors raised by starinv."""


class DimensionMismatch(StarRingError):
    pass


class NonCanonicalScalar(StarRingError):
    pass


class ModulusOutOfRange(StarRingError):
    pass


class InvalidCarrier(StarRingError):
    """A CarrierSpec violates one of its construction invariants."""


class SpecMismatch(StarRingError):
    pass


class InvalidWeight(StarRingError):
    pass


class NotIdempotent(StarRingError):
    pass


class InfiniteCarrier(StarRingError):
    pass


class CarrierTooLarge(StarRingError):
    pass


class NotInvertible(StarRingError):
    """Base for every "inverse of this kind does not exist" failure.

    ``reason`` is a short machine-readable string.
    """

    def __init__(self, message, reason=None):
        super().__init__(message)
        self.reason = reason or message


class NotCoreInvertible(NotInvertible):
    pass


class NotMPInvertible(NotInvertible):
    pass


class NoOneThreeInverse(NotInvertible):
    pass


class NotGroupInvertible(NotInvertible):
    pass


class NotDrazinInvertible(NotInvertible):
    pass


class NotWeightedCoreInvertible(NotInvertible):
    pass


class UniquenessViolation(StarRingError):
    """An exhaustive scan found more than one solution of a system whose
    solution must be unique. Signals a bug or a broken carrier."""
