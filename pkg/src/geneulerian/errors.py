"""Exception types raised by the library."""


class GenEulerianError(Exception):
    """Base class for every error this package raises on purpose."""


class BudgetExceededError(GenEulerianError):
    """An exhaustive enumeration would visit more words than allowed."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} words, budget is {budget} "
            f"(raise it with --budget or the budget= argument)"
        )


class CombinatorialRangeError(GenEulerianError, ValueError):
    """Raised for b >= a, where no descent interpretation is implemented."""


class WordSyntaxError(GenEulerianError, ValueError):
    """Malformed word or SCM text. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class WordValidationError(GenEulerianError, ValueError):
    """Well-formed text that violates the multiset or color constraints."""


class BinAssignmentError(GenEulerianError, ValueError):
    pass
