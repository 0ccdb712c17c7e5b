"""Exceptions shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when an exact computation would exceed an explicit size guard.

    The message says which guard fired and, where one exists, what cheaper
    route to try instead.
    """
