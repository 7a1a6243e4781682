"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class BlockadeError(Exception):
    exit_code = 1


class ParameterError(BlockadeError, ValueError):
    """Input outside an operation's precondition."""

    exit_code = 2


class BudgetExceeded(BlockadeError):
    """A table or search would exceed its configured budget.

    ``partial`` holds whatever partial result was available (may be None).
    """

    exit_code = 3

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConsistencyError(BlockadeError, AssertionError):
    """An internal identity failed. Indicates a bug or an unsupported regime."""

    exit_code = 4


class MonotonicityError(ConsistencyError):
    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)
