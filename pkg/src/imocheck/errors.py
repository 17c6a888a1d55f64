"""Exception types shared across the checker modules."""


class ImocheckError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominatorError(ImocheckError, ZeroDivisionError):
    """A rational was constructed with denominator zero."""


class InvalidRectError(ImocheckError, ValueError):
    """An operation required a valid rectangle (x1 < x2 and y1 < y2)."""


class InvalidRangeError(ImocheckError, ValueError):
    """A half-open coordinate range was empty or reversed."""


class InvalidPinwheelError(ImocheckError, ValueError):
    """Pinwheel cut positions violate 0 < c1 < c2 < side."""


class BoardTooLargeError(ImocheckError, ValueError):
    """Exhaustive tiling enumeration was asked for a board over the area cap."""


class PreconditionFailedError(ImocheckError, ValueError):
    """A checker was invoked on inputs outside its stated precondition."""


class TheoremViolationError(ImocheckError, AssertionError):
    """A machine-checked theorem failed on valid input.

    This never fires on correct code and valid inputs; it signals a bug or
    an invalid input that slipped past validation.
    """


class OrbitOverflowError(ImocheckError, OverflowError):
    """An orbit value would exceed the checked 64-bit ceiling."""


class TilingParseError(ImocheckError, ValueError):
    """A tiling file line failed to parse.  Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message
