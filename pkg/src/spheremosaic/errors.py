"""Exception hierarchy shared by all spheremosaic modules."""


class SphereMosaicError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SphereMosaicError):
    """Malformed .smt/.kmt/table text; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionMismatch(ParseError):
    """Grid dimensions in a document disagree with its declared size."""


class NotSuitablyConnected(SphereMosaicError):
    """Operation requires a suitably connected mosaic."""


class NotAKnot(SphereMosaicError):
    """Operation requires a single-component knot mosaic."""


class TooManyCrossings(SphereMosaicError):
    """Diagram exceeds the configured crossing limit for polynomial work."""


class NonIntegerExponent(SphereMosaicError):
    """Jones exponents did not land on integers; indicates an internal bug
    (or a link diagram routed into knot-only code)."""


class InvalidInput(SphereMosaicError):
    """A transform received input violating its preconditions."""


class BoundaryHasFourConnectionTile(InvalidInput):
    """Boundary ring of a classical mosaic holds a 4-connection-point tile."""


class IneligiblePosition(InvalidInput):
    """The requested tile position does not satisfy the transform's
    eligibility conditions."""


class ConnectionBroken(SphereMosaicError):
    """A transform produced a mosaic that fails validation; this signals an
    implementation bug, never a legal outcome."""


class BudgetExceeded(SphereMosaicError):
    """Search-space size exceeds the configured exhaustive limits."""


class InternalError(SphereMosaicError):
    """An internal invariant was violated (CLI exit code 2)."""
