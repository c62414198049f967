"""Exception types raised across the toolkit."""


class DunklOscillatorError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DunklOscillatorError, ValueError):
    """A parameter lies outside the domain where the formulas are defined."""


class PreconditionError(DunklOscillatorError, ValueError):
    """A grid or truncation does not resolve the requested quantity."""


class NumericError(DunklOscillatorError, ArithmeticError):
    """An iterative kernel failed to converge."""

    def __init__(self, message: str, iterations: int = 0, estimates: tuple = ()):
        super().__init__(message)
        self.iterations = iterations
        self.estimates = tuple(estimates)


def require_mu(mu: float) -> None:
    if not mu > -0.5:
        raise DomainError(f"Dunkl parameter must satisfy mu > -1/2, got {mu}")


def require_kappa(kappa: float) -> None:
    if not kappa > 0:
        raise DomainError(f"coupling must satisfy kappa > 0, got {kappa}")
