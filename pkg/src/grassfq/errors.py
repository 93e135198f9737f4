"""Exception hierarchy shared by every module of the package."""


class GrassfqError(ValueError):
    """Base class for all validation and guard errors raised here."""


class NonPrime(GrassfqError):
    pass


class InvalidDegree(GrassfqError):
    pass


class NotPrimePower(GrassfqError):
    pass


class DivisionByZero(GrassfqError, ZeroDivisionError):
    pass


class DimensionMismatch(GrassfqError):
    pass


class FieldMismatch(GrassfqError):
    pass


class InvalidDimension(GrassfqError):
    pass


class GuardError(GrassfqError):
    """A computation refused because it would exceed a configured size limit."""


class EnumerationTooLarge(GuardError):
    pass


class BudgetExceeded(GuardError):
    pass
