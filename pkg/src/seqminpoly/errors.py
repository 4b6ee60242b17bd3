"""Exception hierarchy shared by all modules."""


class SeqMinPolyError(Exception):
    """Base class for all library errors."""


class ZeroDenominator(SeqMinPolyError):
    pass


class NonInvertibleDenominator(SeqMinPolyError):
    pass


class DivisionByZero(SeqMinPolyError):
    pass


class FieldMismatch(SeqMinPolyError):
    pass


class DegreeTooSmall(SeqMinPolyError):
    pass


class InsufficientTerms(SeqMinPolyError):
    pass


class DimensionMismatch(SeqMinPolyError):
    pass


class BadInput(SeqMinPolyError):
    pass


class ParseError(BadInput):
    pass


class NotMonic(BadInput):
    pass


class BadInitLength(BadInput):
    pass


class NotLinearlyRecurrent(SeqMinPolyError):
    """The degree-bound hypothesis on the input sequence is violated."""


class OracleExhausted(SeqMinPolyError):
    """A sequence oracle was asked for more terms than it can serve."""
