"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was invoked outside its mathematical domain.

    Raised for malformed inputs (empty vectors, non-finite entries, shape
    mismatches) and for parameter values the underlying definitions do not
    cover (p < 1, removing the only column, and so on).
    """
