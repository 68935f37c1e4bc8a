"""Exception hierarchy for nsfrac.

Every error raised on bad input derives from both :class:`NsfracError` and
:class:`ValueError`, so callers can catch either.
"""


class NsfracError(ValueError):
    """Base class for all validation and numerical errors in nsfrac."""


class OrderOutOfRange(NsfracError):
    pass


class InvalidNormalization(NsfracError):
    pass


class InvalidGrid(NsfracError):
    pass


class NonFiniteSample(NsfracError):
    pass


class MissingDerivative(NsfracError):
    pass


class InvalidPsi(NsfracError):
    pass


class InvalidSequence(NsfracError):
    pass


class DegenerateImage(NsfracError):
    pass


class UnsupportedPoleStructure(NsfracError):
    pass


class ImproperImage(NsfracError):
    """Raised when a rational image has a polynomial part (a delta term in x)."""


class TruncationTooSevere(NsfracError):
    pass


class InvalidParams(NsfracError):
    pass


class ParseError(NsfracError):
    """Function-spec syntax error; ``position`` is the 0-based column."""

    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")
