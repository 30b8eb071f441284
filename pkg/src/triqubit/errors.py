"""Exception types raised by the triqubit library."""


class InputValidationError(ValueError):
    """An argument violates a documented precondition."""


class NumericalDomainError(ArithmeticError):
    """A quantity left its mathematically valid domain by more than noise."""


class CanonicalizationError(RuntimeError):
    """Canonical-form search failed; carries the best residual found."""

    def __init__(self, residual: float):
        super().__init__(
            f"canonical form not reached: best residual {residual:.3e}"
        )
        self.residual = residual


class InternalConsistencyError(RuntimeError):
    """An internal sanity check failed (e.g. a quadratic form came out
    complex); indicates a bug rather than bad input."""
