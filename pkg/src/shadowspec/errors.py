"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments outside the domain where an operation is defined."""


class NotAchievable(ValueError):
    """A requested size cannot be realised; ``reason`` is machine readable."""

    def __init__(self, message: str, reason: dict | None = None):
        super().__init__(message)
        self.reason = reason or {}


class BudgetExceeded(RuntimeError):
    """An exhaustive search would visit more objects than allowed."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"search needs {required} visits, budget is {budget}")
        self.required = required
        self.budget = budget


class ParseError(ValueError):
    """Input text does not follow the expected file format."""
