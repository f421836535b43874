"""Shared exception types."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation hit its term/node cap before converging."""
