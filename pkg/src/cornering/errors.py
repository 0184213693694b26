"""Exception types shared across the library."""


class CorneringError(Exception):
    """Base class for all errors raised by this package."""


class UnknownGenerator(CorneringError):
    """A term mentions a generator or object letter that was never declared."""


class TypeMismatch(CorneringError):
    """Sequential composition of terms whose inner boundaries disagree."""


class BoundaryMismatch(CorneringError):
    """A morphism's dom/cod does not fit where it is being used."""


class FactorizationRejected(CorneringError):
    """A slide was requested with a factorization that does not reproduce the tooth."""


class DepthMismatch(CorneringError):
    """An operation required a comb of a specific depth."""


class GapOutOfRange(CorneringError):
    """A gap index outside 1..depth-1 was addressed."""


class PatternMismatch(CorneringError):
    """Two comb-like values were combined but their boundary patterns differ."""


class NotHomogeneous(CorneringError):
    """A lawfulness check was applied to an optic that is not of shape (A,A) -> (B,B)."""


class LayoutLimitExceeded(CorneringError):
    """The SVG layouter refuses inputs beyond its documented size limit."""


class DslError(CorneringError):
    """A problem in a .cornering source file, carrying a source location."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        base = super().__str__()
        if self.line is None:
            return base
        return "line %d, column %d: %s" % (self.line, self.column, base)


class ParseFailure(DslError):
    """Source text that does not match the grammar."""


class DuplicateName(DslError):
    """The same name declared twice in one namespace."""


class UnresolvedReference(DslError):
    """A declaration refers to a name that does not exist."""
