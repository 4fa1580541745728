"""Exception types shared across the toolkit."""


class GraverKitError(Exception):
    """Base class for all toolkit errors."""


class PreconditionError(GraverKitError):
    """A mathematical precondition failed (not pointed, not simple, ...)."""


class BudgetExceededError(GraverKitError):
    """A completion run hit its element or wall-clock budget.

    This is a resource failure, never a mathematical verdict.
    """

    def __init__(self, kind: str, limit, generated: int):
        self.kind = kind  # "elements" or "time"
        self.limit = limit
        self.generated = generated
        super().__init__(
            f"graver completion exceeded its {kind} budget "
            f"(limit={limit}, candidates generated={generated})"
        )
