"""Shared exception types."""


class MahlerlabError(Exception):
    """Base class for all package-specific failures."""


class PrecisionExhausted(MahlerlabError):
    """Raised when the adaptive-precision ladder hits its cap.

    The offending input (typically a torsion point) is attached so callers
    can report exactly where certification failed instead of silently
    dropping a term.
    """

    def __init__(self, message, point=None, precision=None):
        super().__init__(message)
        self.point = point
        self.precision = precision


class CapExceeded(MahlerlabError):
    """Raised when an exact enumeration would exceed its configured size cap."""


class DegenerateInputError(MahlerlabError):
    """Raised for inputs the theory declares degenerate (e.g. all Alexander
    polynomials zero, or a singular period matrix where a finite count was
    required)."""
