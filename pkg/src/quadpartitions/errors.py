"""Exceptions shared across the package."""


class DivisibilityViolation(ArithmeticError):
    """An exact division required by a recurrence failed.

    The coefficient-matching step of the partition recurrence divides exactly
    when the implementation is correct, so this exception always signals a bug
    rather than bad input.
    """


class BudgetExceeded(RuntimeError):
    """The brute-force enumerator exhausted its node budget."""


class InvariantViolation(AssertionError):
    """A structural invariant that should hold unconditionally was violated."""
