"""Exception types shared across the package."""


class DecindexError(Exception):
    """Base class for all package-specific errors."""


class ParseError(DecindexError):
    """Malformed decimal text; ``position`` is the offending 0-based index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CanonicalityError(DecindexError):
    """A tuple violates the canonical-form constraints required here."""


class RenderBudgetError(DecindexError):
    """Rendering a tuple would exceed the character budget; never truncated."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(message)
        self.required = required
        self.budget = budget


class IndexRangeError(DecindexError):
    """An index, position, or range lies outside its valid domain."""
