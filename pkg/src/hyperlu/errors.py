"""Exception hierarchy shared by all hyperlu modules."""


class HyperLUError(ValueError):
    """Base class; every library error is also a ValueError."""


class EmptyHyperedge(HyperLUError):
    pass


class VertexOutOfRange(HyperLUError):
    pass


class EdgeTooSmall(HyperLUError):
    pass


class SizeOutOfRange(HyperLUError):
    pass


class NotAHypergraphState(HyperLUError):
    pass


class LengthMismatch(HyperLUError):
    pass


class DimensionMismatch(HyperLUError):
    pass


class NotUnitary(HyperLUError):
    pass


class TooLarge(HyperLUError):
    """A computation was refused because it exceeds a documented size cap."""


class RelationDoesNotHold(HyperLUError):
    pass


class NotSymmetric(HyperLUError):
    pass


class DegreeZero(HyperLUError):
    pass


class ArgOutOfRange(HyperLUError):
    pass


class BadParams(HyperLUError):
    pass


class TooFewQubits(HyperLUError):
    pass


class CannotTraceAll(HyperLUError):
    pass


class SizeMismatch(HyperLUError):
    pass


class ParseError(HyperLUError):
    """Malformed input file. Carries a 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
