"""Exception hierarchy shared by all fracmech modules."""


class FracmechError(Exception):
    """Base class for every error raised by fracmech."""


class OrderError(FracmechError, ValueError):
    """Fractional order outside ``(0, 1]``."""


class IntervalError(FracmechError, ValueError):
    """Invalid terminals or subdivision count for a fractional derivative."""


class DomainExitError(FracmechError):
    """A nonlocal interval leaves the declared body box."""


class SingularMatrixError(FracmechError, ArithmeticError):
    """A required inverse does not exist (or is too ill-conditioned)."""


class NumericalError(FracmechError, ArithmeticError):
    """A computation produced non-finite values."""


class LegMismatchError(FracmechError, ValueError):
    """Basis legs of two operands do not compose."""


class ConfigError(FracmechError, ValueError):
    """Experiment configuration failed validation.

    ``violations`` holds every problem found, not only the first one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
