"""Exception hierarchy shared by all trilat modules."""


class TrilatError(Exception):
    """Base class for every error raised by trilat."""


class DomainError(TrilatError, ValueError):
    """A point, walk or parameter does not belong to the domain it is used with."""


class PreconditionError(TrilatError, ValueError):
    pass


class ResourceGuardError(TrilatError):
    """Exhaustive enumeration would exceed the configured size guard."""


class RingMismatchError(TrilatError, TypeError):
    pass


class InversionError(TrilatError, ArithmeticError):
    """The constant term of a series is not a unit of its coefficient ring."""


class ReconstructionError(TrilatError):
    """No exact rational function fits the supplied coefficients."""
