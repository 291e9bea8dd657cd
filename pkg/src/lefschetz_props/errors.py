"""Exceptions shared across modules."""


class NotArtinianError(ValueError):
    """Raised when an operation requires a finite-dimensional quotient."""


class CapExceededError(RuntimeError):
    """Hilbert function failed to vanish below the socle-degree cap.

    For form ideals this means the artinian test is indeterminate at the
    configured cap; the caller must raise the cap explicitly, never guess.
    """


class BudgetExceededError(RuntimeError):
    """A combinatorial search or campaign hit its configured budget."""
