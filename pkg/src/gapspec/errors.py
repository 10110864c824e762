"""Exception and warning types shared across the package."""

__all__ = [
    "DomainError",
    "ArgumentError",
    "NumericalError",
    "PoleError",
    "DegeneracyError",
    "PrecisionWarning",
]


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class ArgumentError(ValueError):
    """Structurally invalid argument (wrong family, bad enum value, ...)."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to converge or produced invalid output."""


class PoleError(NumericalError):
    """Evaluation requested at (or too close to) a pole."""


class DegeneracyError(NumericalError):
    """A computed object degenerated (e.g. eigenvalue outside (0,1) bounds)."""


class PrecisionWarning(UserWarning):
    """Result returned but with reduced confidence in its accuracy."""
