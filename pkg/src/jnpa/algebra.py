"""Structure-constant algebras with a commutative product and an optional second product."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, InputError, MissingProduct
from .field import Field
from .linalg import Matrix, Vector, basis_vector, zero_vector


class StructureTensor:
    """Bilinear product ``e_i * e_j = sum_k t[i][j][k] e_k`` on an ``n``-dimensional space."""

    __slots__ = ("field", "n", "t", "_sparse")

    def __init__(self, field: Field, n: int, t: Sequence[Sequence[Sequence]]):
        if len(t) != n or any(len(row) != n for row in t) or any(len(v) != n for row in t for v in row):
            raise DimensionMismatch(f"structure tensor is not {n}x{n}x{n}")
        tt = tuple(tuple(tuple(field(x) for x in v) for v in row) for row in t)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "t", tt)
        sparse = [[tuple((k, c) for k, c in enumerate(tt[i][j]) if c) for j in range(n)] for i in range(n)]
        object.__setattr__(self, "_sparse", sparse)

    def __setattr__(self, name, value):
        raise AttributeError("StructureTensor is immutable")

    @classmethod
    def zero(cls, field: Field, n: int) -> "StructureTensor":
        z = zero_vector(field, n)
        return cls(field, n, [[z] * n for _ in range(n)])

    @classmethod
    def from_entries(cls, field: Field, n: int, entries: Iterable) -> "StructureTensor":
        """Build from ``(i, j, k, coeff)`` entries; repeated indices accumulate."""
        t = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in entries:
            for idx in (i, j, k):
                if not 0 <= idx < n:
                    raise InputError(f"index {idx} out of range for dimension {n}")
            t[i][j][k] = t[i][j][k] + field(c)
        return cls(field, n, t)

    @classmethod
    def from_function(cls, field: Field, n: int, f: Callable[[int, int], Sequence]) -> "StructureTensor":
        return cls(field, n, [[tuple(f(i, j)) for j in range(n)] for i in range(n)])

    def basis_product(self, i: int, j: int) -> Vector:
        return self.t[i][j]

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        n = self.n
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in dimension {n}")
        ys = [(j, yj) for j, yj in enumerate(y) if yj]
        out = [self.field.zero] * n
        if not ys:
            return tuple(out)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._sparse[i]
            for j, yj in ys:
                terms = row[j]
                if terms:
                    c = xi * yj
                    for k, t in terms:
                        out[k] += c * t
        return tuple(out)

    def transpose(self) -> "StructureTensor":
        """The opposite product ``x *' y = y * x``."""
        return StructureTensor(self.field, self.n, [[self.t[j][i] for j in range(self.n)] for i in range(self.n)])

    def _combine(self, other: "StructureTensor", f) -> "StructureTensor":
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")
        return StructureTensor(self.field, self.n, [[tuple(f(a, b) for a, b in zip(u, v))
                                                    for u, v in zip(r, s)] for r, s in zip(self.t, other.t)])

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c) -> "StructureTensor":
        c = self.field(c)
        return StructureTensor(self.field, self.n, [[tuple(c * a for a in v) for v in r] for r in self.t])

    def entries(self) -> list[tuple[int, int, int, object]]:
        """Nonzero ``(i, j, k, coeff)`` entries in lexicographic order."""
        return [(i, j, k, c) for i in range(self.n) for j in range(self.n) for k, c in self._sparse[i][j]]

    def is_zero(self) -> bool:
        return not any(self._sparse[i][j] for i in range(self.n) for j in range(self.n))

    def is_commutative(self) -> bool:
        return all(self.t[i][j] == self.t[j][i] for i in range(self.n) for j in range(i))

    def __eq__(self, other):
        return isinstance(other, StructureTensor) and self.field == other.field and self.t == other.t

    def __hash__(self):
        return hash(self.t)

    def __repr__(self):
        ents = ", ".join(f"({i},{j},{k}):{self.field.fmt(c)}" for i, j, k, c in self.entries())
        return f"StructureTensor(n={self.n}, {{{ents}}})"


LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True, eq=True)
class Algebra:
    """A finite-dimensional algebra given by structure constants.

    ``dot`` is the commutative associative product.  ``circ`` is the second
    product, read as a left product when ``orientation == "left"`` and as a
    right product (written ⋄) otherwise.  ``bracket`` holds a Lie bracket when
    the algebra is meant as a Jacobi algebra.  ``form`` and ``maps`` are
    optional attachments (a Gram matrix and named linear operators).
    """

    field: Field
    dim: int
    dot: StructureTensor
    unit: Vector
    circ: StructureTensor | None = None
    orientation: str = LEFT
    bracket: StructureTensor | None = None
    form: Matrix | None = None
    maps: tuple = dc_field(default=())

    def __post_init__(self):
        object.__setattr__(self, "unit", tuple(self.field(x) for x in self.unit))
        if len(self.unit) != self.dim:
            raise DimensionMismatch("unit vector has wrong length")
        if self.orientation not in (LEFT, RIGHT):
            raise InputError(f"orientation must be 'left' or 'right', not {self.orientation!r}")
        for name in ("dot", "circ", "bracket"):
            t = getattr(self, name)
            if t is None:
                continue
            if t.field != self.field:
                raise FieldMismatch(f"{name} tensor over {t.field}, algebra over {self.field}")
            if t.n != self.dim:
                raise DimensionMismatch(f"{name} tensor has dimension {t.n}, algebra {self.dim}")
        if self.form is not None and self.form.shape != (self.dim, self.dim):
            raise DimensionMismatch("form has wrong shape")
        if isinstance(self.maps, dict):
            object.__setattr__(self, "maps", tuple(sorted(self.maps.items())))
        for name, m in self.maps:
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"map {name!r} has wrong shape")

    # convenience
    @property
    def n(self) -> int:
        return self.dim

    @property
    def maps_dict(self) -> dict[str, Matrix]:
        return dict(self.maps)

    def with_(self, **kw) -> "Algebra":
        if "maps" in kw and isinstance(kw["maps"], dict):
            kw["maps"] = tuple(sorted(kw["maps"].items()))
        return replace(self, **kw)

    @cached_property
    def _basis(self) -> tuple:
        return tuple(basis_vector(self.field, self.dim, i) for i in range(self.dim))

    def e(self, i: int) -> Vector:
        if not 0 <= i < self.dim:
            raise IndexError(f"basis index {i} out of range for dimension {self.dim}")
        return self._basis[i]

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def vec(self, coeffs: Sequence) -> Vector:
        if len(coeffs) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coeffs)}")
        return tuple(self.field(c) for c in coeffs)

    def tensor(self, which: str) -> StructureTensor:
        if which not in ("dot", "circ", "bracket"):
            raise InputError(f"unknown product {which!r}")
        t = getattr(self, which)
        if t is None:
            raise MissingProduct(f"algebra has no {which} product")
        return t

    def d(self, x, y) -> Vector:
        return self.dot.mul(x, y)

    def c(self, x, y) -> Vector:
        return self.tensor("circ").mul(x, y)

    def b(self, x, y) -> Vector:
        return self.tensor("bracket").mul(x, y)


def multiply(alg: Algebra, which: str, a: Sequence, b: Sequence) -> Vector:
    return alg.tensor(which).mul(a, b)


def left_mult_operator(alg: Algebra, which: str, a: Sequence) -> Matrix:
    """Matrix of ``x -> a * x`` (column j is ``a * e_j``)."""
    t = alg.tensor(which)
    return Matrix.from_columns(alg.field, [t.mul(a, alg.e(j)) for j in range(alg.dim)], alg.dim)


def right_mult_operator(alg: Algebra, which: str, a: Sequence) -> Matrix:
    """Matrix of ``x -> x * a``."""
    t = alg.tensor(which)
    return Matrix.from_columns(alg.field, [t.mul(alg.e(j), a) for j in range(alg.dim)], alg.dim)


def tensor_index(n1: int, n2: int, i: int, j: int) -> int:
    if not (0 <= i < n1 and 0 <= j < n2):
        raise InputError(f"index pair ({i},{j}) out of range for {n1}x{n2}")
    return i * n2 + j


def tensor_vector(u: Sequence, v: Sequence) -> Vector:
    """Coordinates of ``u ⊗ v`` in the basis ``e_i ⊗ f_j`` ordered by :func:`tensor_index`."""
    return tuple(a * b for a in u for b in v)


def operator_from_images(field: Field, images: Sequence[Sequence]) -> Matrix:
    """Linear operator whose value on ``e_j`` is ``images[j]``."""
    return Matrix.from_columns(field, images, len(images))


def make_algebra(field: Field, n: int, dot_entries, unit, circ_entries=None, **kw) -> Algebra:
    """Shorthand for building from sparse entry lists."""
    dot = StructureTensor.from_entries(field, n, dot_entries)
    circ = None if circ_entries is None else StructureTensor.from_entries(field, n, circ_entries)
    return Algebra(field, n, dot, tuple(unit), circ, **kw)
