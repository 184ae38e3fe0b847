"""Exception hierarchy shared by every cellembed module."""


class CellEmbedError(Exception):
    """Base class for all errors raised by the engine."""


class PermutationFormatError(CellEmbedError, ValueError):
    """A permutation string or word could not be parsed or is not a bijection."""


class SizeMismatchError(CellEmbedError, ValueError):
    """Two objects that must live in the same S_n do not."""


class TableauError(CellEmbedError, ValueError):
    """A tableau is not standard, or an insertion would break it."""


class NotComparableError(CellEmbedError, ValueError):
    """An interval was requested for a pair that is not Bruhat comparable."""


class EmbeddingError(CellEmbedError):
    """The embedding algorithm was called outside its domain."""


class ConfigError(CellEmbedError, ValueError):
    """Invalid configuration value."""


class GuardExceededError(CellEmbedError):
    """A size guard stopped an enumeration before it blew up."""

    def __init__(self, guard: str, limit: int, detail: str = ""):
        self.guard = guard
        self.limit = limit
        message = f"guard {guard} exceeded (limit {limit})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class IndexSetError(CellEmbedError, ValueError):
    """A set of positions is out of range or has repeated entries."""
