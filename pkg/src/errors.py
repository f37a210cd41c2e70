class DomainError(ValueError):
    """Input outside the domain of an operation (invalid point, bad slope, t <= 2, ...)."""


class DegenerateCaseError(DomainError):
    """Hypothesis of a computation violated, e.g. f1 == f2 for the resultant check."""


class SearchFailure(RuntimeError):
    """A bracketing or numerical search did not converge."""


__all__ = ["DomainError", "DegenerateCaseError", "SearchFailure"]
