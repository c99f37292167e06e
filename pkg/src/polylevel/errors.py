"""Shared error types."""


class BudgetExceededError(RuntimeError):
    """An enumeration or search exceeded its configured work budget.

    Raised instead of silently truncating results; callers can retry with a
    larger explicit budget.
    """
