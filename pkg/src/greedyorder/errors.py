"""Exception types shared across the package."""


class BudgetError(RuntimeError):
    """An exhaustive search was asked to run beyond its size cap."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation (e.g. a disconnected graph)."""


class SamplingError(RuntimeError):
    """Rejection sampling gave up before producing an acceptable sample."""
