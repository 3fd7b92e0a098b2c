"""Exception hierarchy shared by the library and the CLI."""


class HHVError(Exception):
    """Base class for all errors raised by hhv."""


class ParameterError(HHVError, ValueError):
    """Inputs outside the admissible regime (bad p, lambda, settings, ...)."""


class PoleError(ParameterError):
    """zeta evaluated at its pole rho = 1."""


class DomainError(ParameterError):
    """Argument outside the domain where the expansion is asserted."""


class DivergenceError(ParameterError):
    """A power sum whose exponent does not exceed 1."""


class IngestionError(ParameterError):
    """A sequence file could not be read or contains invalid entries."""


class InvariantViolation(HHVError, RuntimeError):
    """An internal invariant failed; signals a bug or an unproven regime."""
