class BudgetExceeded(ValueError):
    """An exhaustive enumeration was asked for beyond its configured size."""


class CrossCheckError(RuntimeError):
    """Two independent counting routes disagreed."""
