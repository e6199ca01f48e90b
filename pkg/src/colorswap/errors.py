"""Exception types shared across the package."""


class ColorSwapError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(ColorSwapError):
    """Ill-formed input: bad lengths, colors out of range, improper colorings."""


class PreconditionError(ColorSwapError):
    """A documented precondition of an operation was violated."""


class WrongSolverError(ColorSwapError):
    """The instance does not belong to the graph class / color range a solver handles."""


class NotACographError(WrongSolverError):
    """The graph admits no cotree decomposition (it contains an induced P4)."""


class NotSplitError(WrongSolverError):
    """The graph's vertices cannot be partitioned into a clique and an independent set."""


class BudgetExceededError(ColorSwapError):
    """An exhaustive enumeration or search exceeded its state budget."""


class ParseError(ColorSwapError):
    """Syntax error in an instance file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
