"""Exception types shared across the package."""


class RankInvError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(RankInvError, ValueError):
    """A mathematical precondition on the inputs is violated."""


class BudgetError(RankInvError, RuntimeError):
    """An exhaustive computation would exceed its enumeration budget."""
