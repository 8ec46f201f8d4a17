"""Exception taxonomy shared by every layer of the library."""


class ExactRealError(Exception):
    """Base class for all errors raised by exactreal."""


class ContainsZero(ExactRealError, ZeroDivisionError):
    """An interval reciprocal was requested for an interval whose closure holds 0."""


class NonPositiveEnlargement(ExactRealError, ValueError):
    pass


class OracleFailure(ExactRealError):
    """A real number could not produce an approximation at the requested precision."""


class SignUnknown(OracleFailure):
    """The budget ran out before a real could be separated from zero.

    ``span`` is filled in by the expression evaluator with the (start, end)
    offsets of the offending subexpression.
    """

    def __init__(self, message="sign could not be certified within budget", span=None):
        super().__init__(message)
        self.span = span


class NotSeparated(ExactRealError):
    pass


class BudgetExhausted(ExactRealError):
    pass


class DeskScaleExceeded(ExactRealError, ValueError):
    pass


class InvariantViolation(ExactRealError, AssertionError):
    """An oracle broke the radius or consistency contract.

    This always indicates a bug (or a false caller-supplied modulus), never a
    property of the number being represented.
    """
