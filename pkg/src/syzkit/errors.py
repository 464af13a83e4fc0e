"""Exception hierarchy shared by all syzkit modules."""


class SyzkitError(Exception):
    """Base class for every error raised by syzkit."""


class DivisionByZero(SyzkitError, ZeroDivisionError):
    pass


class FieldMismatch(SyzkitError, ValueError):
    pass


class ContextMismatch(SyzkitError, ValueError):
    pass


class PolynomialSyntaxError(SyzkitError, ValueError):
    """Malformed polynomial text; ``position`` is the offending character offset."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InhomogeneousError(SyzkitError, ValueError):
    pass


class UnknownVariable(SyzkitError, ValueError):
    pass


class LengthMismatch(SyzkitError, ValueError):
    pass


class AmbientMismatch(SyzkitError, ValueError):
    pass


class ComputationTooLarge(SyzkitError):
    pass


class NotAQuadricInIdeal(SyzkitError, ValueError):
    pass


class NotASubideal(SyzkitError, ValueError):
    pass


class SpecializationError(SyzkitError, ValueError):
    pass


class GenerationFailed(SyzkitError):
    pass


class NotSkew(SyzkitError, ValueError):
    pass


class InvariantViolation(SyzkitError, AssertionError):
    """An internal consistency check failed. Always a bug."""
