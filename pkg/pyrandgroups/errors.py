class InvalidWordError(ValueError):
    """A word does not satisfy the shape an operation requires (reducedness, alphabet, length class)."""


class SizeLimitError(ValueError):
    """A computed size exceeds the configured cap."""


class BudgetExceededError(ValueError):
    """An exhaustive search or table would exceed its enumeration budget."""


class PrecisionError(ArithmeticError, ValueError):
    """A floor of an irrational power lies too close to an integer to be trusted."""
