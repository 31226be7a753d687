"""Exception hierarchy.

Configuration-type failures derive from :class:`ConfigError` (CLI exit code 2),
numerical failures from :class:`NumericalError` (CLI exit code 3).
"""


class LandauError(Exception):
    """Base class for all package errors."""


class ConfigError(LandauError, ValueError):
    """Invalid user input: parameters, field specs, config files."""


class ParameterError(ConfigError):
    """Physical parameters violate their invariants."""


class FieldParseError(ConfigError):
    """A sampled-field file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FieldValidationError(ConfigError):
    """A field description or table is structurally invalid."""


class DomainError(ConfigError):
    """Argument outside the domain of a special function."""


class NumericalError(LandauError, ArithmeticError):
    """A computation could not meet its accuracy contract."""


class LaguerreOverflowError(NumericalError, OverflowError):
    """Unscaled Laguerre value is not representable; use the scaled variant."""


class EvaluationError(NumericalError):
    """A field evaluated to a non-finite value."""


class TruncationError(NumericalError):
    """Probability mass leaks past the truncated level range."""

    def __init__(self, message, achieved_tail=None):
        self.achieved_tail = achieved_tail
        super().__init__(message)


class StepSizeError(NumericalError):
    """Time step too coarse: the integrator lost norm."""

    def __init__(self, message, norm_drift=None):
        self.norm_drift = norm_drift
        super().__init__(message)
