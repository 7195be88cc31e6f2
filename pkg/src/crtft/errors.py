"""Exception types raised by crtft.

Every error that reflects a violated mathematical precondition derives from
:class:`DomainError`; the CLI maps those to exit code 2.
"""


class DomainError(ValueError):
    """Input violates a precondition of the requested operation."""


class InvalidModulus(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class NotPairwiseCoprime(DomainError):
    pass


class ResidueOutOfRange(DomainError):
    pass


class EmptyInput(DomainError):
    pass


class NonFiniteValue(DomainError):
    pass


class NotPowerOfTwo(DomainError):
    pass


class FactorsNotCoprime(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class InvalidGrid(DomainError):
    pass


class NonFiniteSample(NonFiniteValue):
    pass
