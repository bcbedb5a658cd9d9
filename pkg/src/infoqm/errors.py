"""Exception hierarchy. Every domain failure derives from :class:`DomainError`."""


class DomainError(ValueError):
    """Input is well-formed but outside the domain of an operation."""


class NotHermitian(DomainError):
    pass


class DimensionTooLarge(DomainError):
    pass


class InvalidDistribution(DomainError):
    pass


class BitsModeRequiresPowerOfTwo(DomainError):
    pass


class NotBinary(DomainError):
    pass


class UnphysicalVector(DomainError):
    pass


class InvalidState(DomainError):
    pass


class WrongDimension(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class NotProjector(DomainError):
    pass


class ZeroProbabilityOutcome(DomainError):
    pass


class UnsupportedDimension(DomainError):
    pass


class ZeroField(DomainError):
    pass
