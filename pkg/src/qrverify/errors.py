"""Exception types shared by the workbench modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class ConsistencyError(AssertionError):
    """An internal invariant failed.  Indicates a bug, never bad input."""
