"""Shared exception types."""


class ResourceLimitError(ValueError):
    """An enumeration or state-vector size guard was exceeded."""
