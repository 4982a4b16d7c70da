"""Exception types shared across the package."""
from .tables import BudgetExceeded

__all__ = [
    "BudgetExceeded",
    "HypothesisError",
    "MissingWitnessError",
    "NotFoundWithinBound",
    "NotInLError",
    "UnhandledConfigurationError",
    "UnknownVerdictError",
]


class NotInLError(ValueError):
    """Eigenvalues of the matrix do not lie in L."""


class UnknownVerdictError(RuntimeError):
    """A norm-set decision needed by a branch guard came back Unknown."""

    def __init__(self, query: str):
        super().__init__(f"undecided norm-set query: {query}")
        self.query = query


class UnhandledConfigurationError(ValueError):
    """Input is outside every case the classifiers know how to describe."""


class HypothesisError(ValueError):
    """Input violates the preconditions of a construction."""


class MissingWitnessError(ValueError):
    """An operation needs an explicit norm witness that is not available."""


class NotFoundWithinBound(RuntimeError):
    """A bounded search finished without success; this is not a proof of nonexistence."""
