"""Dense exact linear algebra over a :class:`~jnpa.field.Field`.

Vectors are plain tuples of field elements.  Matrices are immutable
:class:`Matrix` objects carrying their field.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import BudgetExceeded, DimensionMismatch, FieldMismatch, SingularMatrixError
from .field import Field

Vector = tuple


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        rs = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rs[0]) if rs else 0
        for r in rs:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # constructors
    @classmethod
    def zeros(cls, field: Field, r: int, c: int | None = None) -> "Matrix":
        c = r if c is None else c
        z = field.zero
        return cls(field, [[z] * c for _ in range(r)], c)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        if not cols:
            return cls(field, [[] for _ in range(nrows or 0)], 0)
        return cls(field, list(zip(*cols)), len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix.from_columns(self.field, self.rows, self.ncols) if self.nrows else Matrix(self.field, [], 0)

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, [[c * x for x in r] for r in self.rows], self.ncols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"matrix with {self.ncols} columns applied to length-{len(v)} vector")
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.columns()
        return Matrix.from_columns(self.field, [self.apply(c) for c in cols], self.nrows) if cols else Matrix(
            self.field, [[] for _ in range(self.nrows)], 0)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows \
            and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.field, self.rows))

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square and all(self.rows[i][j] == self.rows[j][i]
                                      for i in range(self.nrows) for j in range(i))

    def to_strings(self) -> list[list[str]]:
        return [[self.field.fmt(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_strings()})"


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns."""
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        if r == m.nrows:
            break
        piv = next((i for i in range(r, m.nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(m.field, rows, m.ncols), len(pivots), tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def solve_linear(A: Matrix, b: Sequence) -> Vector | None:
    """Some ``x`` with ``A x = b``, or ``None`` when the system is inconsistent."""
    if len(b) != A.nrows:
        raise DimensionMismatch(f"{A.nrows} equations but right-hand side of length {len(b)}")
    F = A.field
    aug = Matrix(F, [list(r) + [F(x)] for r, x in zip(A.rows, b)], A.ncols + 1)
    red, _, piv = rref(aug)
    if A.ncols in piv:
        return None
    x = [F.zero] * A.ncols
    for i, c in enumerate(piv):
        x[c] = red.rows[i][A.ncols]
    return tuple(x)


def kernel_basis(A: Matrix) -> list[Vector]:
    """Basis of the null space; one vector per free column, in column order."""
    F = A.field
    red, _, piv = rref(A)
    pivset = set(piv)
    basis = []
    for free in range(A.ncols):
        if free in pivset:
            continue
        x = [F.zero] * A.ncols
        x[free] = F.one
        for i, c in enumerate(piv):
            x[c] = -red.rows[i][free]
        basis.append(tuple(x))
    return basis


def invert(A: Matrix) -> Matrix:
    if not A.is_square:
        raise DimensionMismatch("only square matrices can be inverted")
    n = A.nrows
    F = A.field
    aug = Matrix(F, [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(A.rows)], 2 * n)
    red, _, piv = rref(aug)
    if piv[:n] != tuple(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix(F, [r[n:] for r in red.rows], n)


def det(A: Matrix):
    if not A.is_square:
        raise DimensionMismatch("determinant of a non-square matrix")
    F = A.field
    rows = [list(r) for r in A.rows]
    n = len(rows)
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return F.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def linear_combination(field: Field, coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    n = mats[0].nrows
    out = Matrix.zeros(field, n, mats[0].ncols)
    for c, m in zip(coeffs, mats):
        if c:
            out = out + m.scale(c)
    return out


def _grid(field: Field, n: int, k: int) -> Iterable[tuple]:
    """Evaluation points for a polynomial of degree <= n in each of k variables."""
    if field.is_finite and field.p <= n:
        vals = field.elements()
    else:
        # n+1 distinct values, starting at 1 so the first probe is the plain sum
        vals = [field(v) for v in range(1, n + 2)]
    return product(vals, repeat=k)


def nonsingular_combination(mats: Sequence[Matrix], budget: int = 1_000_000) -> tuple | None:
    """Coefficients ``λ`` with ``det(Σ λ_i M_i) != 0``, or ``None`` if none exists on the grid.

    Over QQ (or F_p with p > n) the grid has n+1 points per variable, which
    suffices because the determinant has degree <= n in each λ_i.  Over F_p
    with p <= n the whole of F_p^k is scanned, so the answer is about actual
    nonsingular members rather than the formal polynomial.
    """
    if not mats:
        return None
    F = mats[0].field
    n = mats[0].nrows
    for m in mats:
        if m.field != F:
            raise FieldMismatch("matrices over different fields")
        if m.shape != (n, n):
            raise DimensionMismatch("matrices must be square and of equal size")
    k = len(mats)
    per = F.p if (F.is_finite and F.p <= n) else n + 1
    if per ** k > budget:
        raise BudgetExceeded(f"{per}^{k} evaluation points exceed budget {budget}")
    for lam in _grid(F, n, k):
        if det(linear_combination(F, lam, mats)):
            return tuple(lam)
    return None


def det_poly_nonzero(mats: Sequence[Matrix], budget: int = 1_000_000) -> bool:
    return nonsingular_combination(mats, budget) is not None


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def basis_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n
