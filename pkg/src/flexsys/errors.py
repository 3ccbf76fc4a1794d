"""Exception types raised by the library."""


class FlexError(Exception):
    """Base class for all library errors."""


class NotZeroless(FlexError, ArithmeticError):
    """An operation needed a zeroless external number."""


class DimensionMismatch(FlexError, ValueError):
    pass


class InconsistentSystem(FlexError):
    pass


class ValidationError(FlexError, ValueError):
    """Malformed system; ``kind`` is e.g. ``FullLineRHS`` or ``InconsistentArity``."""

    def __init__(self, kind: str, message: str = ""):
        super().__init__(f"{kind}: {message}" if message else kind)
        self.kind = kind


class ParseError(FlexError, ValueError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"line {line}, col {col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.line = line
        self.col = col
        self.expected = expected


class BadRank(FlexError, ValueError):
    pass


class RobustnessError(FlexError):
    """A hypothesis of the robustness construction does not hold."""


class Singular(RobustnessError):
    pass


class AbsorberDeterminant(RobustnessError):
    pass


class NotReduced(RobustnessError):
    pass


class PreconditionFailed(RobustnessError):
    def __init__(self, which: str, message: str = ""):
        super().__init__(f"{which}: {message}" if message else which)
        self.which = which
