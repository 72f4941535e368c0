"""Exception hierarchy shared by every gtsij module."""


class GtsijError(Exception):
    """Base class for all gtsij errors"""


class InterfaceError(GtsijError, ValueError):
    """A precondition or interface mismatch (bad argument, unknown tag, element outside a support)"""


class ParseError(InterfaceError):
    """Malformed s-expression, matrix file or parameter file"""


class BudgetExceededError(GtsijError):
    """A signed set would materialize more support elements than the configured budget"""

    def __init__(self, requested: int, budget: int, what: str = "signed set"):
        self.requested = requested
        self.budget = budget
        super().__init__(f"{what} needs {requested} support elements, budget is {budget}")


class InvariantViolation(GtsijError, AssertionError):
    """An internal invariant broke; always a bug, never user error"""
