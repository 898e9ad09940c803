class InternalError(RuntimeError):
    """An invariant the library relies on was violated at runtime."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of its step budget before finishing."""
