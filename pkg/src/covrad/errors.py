class BudgetError(RuntimeError):
    """A requested object exceeds the configured size budget."""


class IterationCapError(RuntimeError):
    """The covering-radius search passed j = n without success."""
