"""Exception hierarchy.

Everything derives from :class:`JnpaError`.  Subclasses of :class:`InputError`
signal malformed or out-of-domain input (the CLI maps them to exit code 2).
"""


class JnpaError(Exception):
    pass


class InputError(JnpaError, ValueError):
    pass


class DimensionMismatch(InputError):
    pass


class FieldMismatch(InputError):
    pass


class MissingProduct(InputError):
    pass


class OrientationError(InputError):
    pass


class CharacteristicError(InputError):
    pass


class ConstraintViolation(InputError):
    pass


class BudgetExceeded(InputError):
    pass


class SingularMatrixError(JnpaError, ArithmeticError):
    pass


class NonInvertibleElement(SingularMatrixError):
    pass


class LawFailure(JnpaError):
    """A precondition law did not hold; ``verdict`` carries the witness."""

    def __init__(self, verdict, message: str | None = None):
        self.verdict = verdict
        super().__init__(message or f"law {verdict.law!r} fails: {verdict.describe()}")


class ConsistencyError(JnpaError):
    """A construction produced output violating a law it should guarantee."""
