"""Exception types shared across the package."""


class SGBError(ValueError):
    pass


class ParseError(SGBError):
    """Malformed input text; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotPrime(ParseError):
    pass


class ZeroExponent(ParseError):
    pass


class TooLarge(SGBError):
    """A guard on group order or search size was exceeded."""


class TooMany(TooLarge):
    """Subgroup enumeration exceeded its limit."""


class NoWitness(SGBError):
    pass


class PreconditionFailed(SGBError):
    pass


class BadParameters(SGBError):
    pass
