"""Exception types shared across the package."""


class HierGamesError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGameError(HierGamesError, ValueError):
    """A game definition violates a structural requirement."""


class InvalidCoalitionError(HierGamesError, ValueError):
    """A coalition does not fit the game it was used with."""


class InvalidShiftError(HierGamesError, ValueError):
    """A shift was requested that the coalition cannot absorb."""


class NotCompleteError(HierGamesError, ValueError):
    """An operation needs a complete game with levels ordered by desirability."""


class InvalidParamsError(HierGamesError, ValueError):
    """Hierarchy parameters are malformed or outside an operation's domain."""


class NoCertificateError(HierGamesError, ValueError):
    """A non-weightedness certificate was requested for a weighted game."""


class InvalidComparisonError(HierGamesError, ValueError):
    """Two games cannot be compared because their players differ."""


class CapacityError(HierGamesError, RuntimeError):
    """An exhaustive enumeration would exceed the configured capacity."""


class DocumentError(HierGamesError, ValueError):
    """Problem in a game document, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.reason = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DocumentSyntaxError(DocumentError):
    """The document text could not be parsed."""


class DocumentValidationError(DocumentError):
    """The document parsed but describes an invalid game."""
