"""Exception types raised by exchkit."""


class SizeGuardError(ValueError):
    """Raised when a request exceeds an exact-enumeration size guard."""


class NotWeightedExchangeableError(ValueError):
    """Raised when a law fails the weighted exchangeability check."""


class DecompositionMismatchError(ValueError):
    """Raised when a type-class conditional law disagrees with the urn law.

    This is a numerical falsification of the extreme point characterization
    for the given input, never a recoverable condition.
    """


class InstanceFormatError(ValueError):
    """Raised when an instance payload does not match the JSON schema."""
