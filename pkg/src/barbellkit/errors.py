"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph6, edge-list or matrix input.

    ``line`` is the 1-based input line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """An exponential search hit its node cap before completing."""

    def __init__(self, what: str, budget: int):
        self.budget = budget
        super().__init__(f"{what}: search budget of {budget} nodes exceeded")


class HypothesisError(ValueError):
    """Inputs violate the hypothesis of a construction.

    ``clause`` names the violated condition verbatim.
    """

    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(clause)


class InvalidPartition(ValueError):
    """A partition failed verification where a valid one was required."""


class ProofCheckFailure(AssertionError):
    """A construction produced output that does not verify.

    Raised instead of returning an unverified object; indicates a bug.
    """
