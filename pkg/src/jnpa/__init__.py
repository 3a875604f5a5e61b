"""Exact computations with Jacobi Novikov-Poisson algebras over QQ and GF(p)."""

__version__ = "0.1.0"

from .algebra import LEFT, RIGHT, Algebra, StructureTensor, make_algebra  # noqa: E402
from .errors import (  # noqa: E402
    BudgetExceeded, CharacteristicError, ConsistencyError, ConstraintViolation, DimensionMismatch, FieldMismatch,
    InputError, JnpaError, LawFailure, MissingProduct, NonInvertibleElement, OrientationError, SingularMatrixError,
)
from .field import QQ, GF, Field  # noqa: E402
from .laws import LawVerdict, check_jacobi, check_jnp, check_novikov, check_right_jnp  # noqa: E402
from .linalg import Matrix  # noqa: E402

__all__ = [
    "__version__", "Algebra", "StructureTensor", "make_algebra", "LEFT", "RIGHT", "Field", "QQ", "GF", "Matrix",
    "LawVerdict", "check_jnp", "check_right_jnp", "check_novikov", "check_jacobi",
    "JnpaError", "InputError", "DimensionMismatch", "FieldMismatch", "MissingProduct", "OrientationError",
    "CharacteristicError", "ConstraintViolation", "BudgetExceeded", "SingularMatrixError", "NonInvertibleElement",
    "LawFailure", "ConsistencyError",
]
