"""Constructions producing new algebras from old ones.

Each construction checks its inputs, builds the output, then re-runs the law
checker that the construction is supposed to guarantee.  A failing post-check
raises :class:`ConsistencyError` instead of returning a bad algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .algebra import LEFT, Algebra, StructureTensor, left_mult_operator, tensor_vector
from .errors import ConsistencyError, FieldMismatch, LawFailure, NonInvertibleElement
from .field import Field
from .laws import (
    Counterexample, LawVerdict, check_admissible_pair, check_derivation, check_jacobi, check_jnp,
    check_right_jnp, check_unital_comm_assoc, failing, passing,
)
from .linalg import Matrix, kernel_basis, solve_linear, vec_add, vec_sub


@dataclass(frozen=True)
class ConstructionReport:
    algebra: Algebra
    provenance: str
    verdicts: tuple = dc_field(default=())

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)


def _require(verdict: LawVerdict) -> None:
    if not verdict.passed:
        raise LawFailure(verdict)


def _finish(alg: Algebra, provenance: str, checks: Sequence[Callable[[Algebra], LawVerdict]],
            verify: bool = True) -> ConstructionReport:
    verdicts = tuple(chk(alg) for chk in checks) if verify else ()
    for v in verdicts:
        if not v.passed:
            raise ConsistencyError(f"{provenance}: output fails {v.law}: {v.describe()}")
    return ConstructionReport(alg, provenance, verdicts)


def _same_field(a: Algebra, b: Algebra) -> Field:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return a.field


def inverse_element(alg: Algebra, u: Sequence) -> tuple:
    """Inverse of ``u`` for the commutative product, via ``L(u) x = 1``."""
    u = alg.vec(u)
    x = solve_linear(left_mult_operator(alg, "dot", u), alg.unit)
    if x is None:
        raise NonInvertibleElement(f"{[alg.field.fmt(c) for c in u]} is not invertible")
    return x


def is_invertible(alg: Algebra, u: Sequence) -> bool:
    try:
        inverse_element(alg, u)
    except NonInvertibleElement:
        return False
    return True


# products induced by operators

def from_derivation(alg: Algebra, P: Matrix, verify: bool = True) -> ConstructionReport:
    """Second product ``a∘b = a·P(b)`` for a derivation ``P`` of the commutative product."""
    _require(check_unital_comm_assoc(alg))
    _require(check_derivation(alg, "dot", P))
    circ = StructureTensor.from_function(alg.field, alg.dim, lambda i, j: alg.d(alg.e(i), P.col(j)))
    out = alg.with_(circ=circ, orientation=LEFT, bracket=None)
    return _finish(out, "from-derivation", [check_jnp], verify)


def circ_q(alg: Algebra, P: Matrix, Q: Matrix, q, verify: bool = True) -> ConstructionReport:
    """Second product ``a∘_q b = a·(P + qQ)(b)`` for an admissible pair ``(P, Q)``."""
    _require(check_unital_comm_assoc(alg))
    _require(check_derivation(alg, "dot", P))
    _require(check_admissible_pair(alg, P, Q))
    R = P + Q.scale(alg.field(q))
    circ = StructureTensor.from_function(alg.field, alg.dim, lambda i, j: alg.d(alg.e(i), R.col(j)))
    out = alg.with_(circ=circ, orientation=LEFT, bracket=None)
    return _finish(out, f"circ-q(q={alg.field.fmt(q)})", [check_jnp], verify)


# Jacobi brackets

def commutator_jacobi(jnp: Algebra, verify: bool = True) -> ConstructionReport:
    """Bracket ``[a,b] = a∘b - b∘a``."""
    _require(check_jnp(jnp))
    circ = jnp.circ
    bracket = circ - circ.transpose()
    return _finish(jnp.with_(bracket=bracket), "commutator", [check_jacobi], verify)


def twisted_jacobi(jnp: Algebra, P: Matrix, verify: bool = True) -> ConstructionReport:
    """Bracket ``[a,b] = P(a)∘b - P(b)∘a`` for a derivation of both products."""
    _require(check_jnp(jnp))
    _require(check_derivation(jnp, "dot", P))
    _require(check_derivation(jnp, "circ", P))
    n = jnp.dim
    bracket = StructureTensor.from_function(
        jnp.field, n, lambda i, j: vec_sub(jnp.c(P.col(i), jnp.e(j)), jnp.c(P.col(j), jnp.e(i))))
    return _finish(jnp.with_(bracket=bracket), "twisted-commutator", [check_jacobi], verify)


# tensor products

def _kron(t1: StructureTensor, t2: StructureTensor) -> StructureTensor:
    """Product on the tensor space: ``(x1⊗x2)(y1⊗y2) = t1(x1,y1) ⊗ t2(x2,y2)``."""
    n1, n2 = t1.n, t2.n
    F = t1.field

    def f(I, J):
        i1, i2 = divmod(I, n2)
        j1, j2 = divmod(J, n2)
        return tensor_vector(t1.t[i1][j1], t2.t[i2][j2])

    return StructureTensor.from_function(F, n1 * n2, f)


def tensor_jnp(a: Algebra, b: Algebra, verify: bool = True) -> ConstructionReport:
    """Tensor product: dot⊗dot and ``∘ = ∘⊗· + ·⊗∘``; unit ``1⊗1``."""
    F = _same_field(a, b)
    _require(check_jnp(a))
    _require(check_jnp(b))
    dot = _kron(a.dot, b.dot)
    circ = _kron(a.circ, b.dot) + _kron(a.dot, b.circ)
    out = Algebra(F, a.dim * b.dim, dot, tensor_vector(a.unit, b.unit), circ, LEFT)
    return _finish(out, "tensor-jnp", [check_jnp], verify)


def tensor_jacobi_bracket(a: Algebra, b: Algebra) -> StructureTensor:
    n2 = b.dim
    A, B = a.circ, b.circ

    def f(I, J):
        i1, i2 = divmod(I, n2)
        j1, j2 = divmod(J, n2)
        return vec_sub(tensor_vector(A.t[i1][j1], B.t[i2][j2]), tensor_vector(A.t[j1][i1], B.t[j2][i2]))

    return StructureTensor.from_function(a.field, a.dim * b.dim, f)


def tensor_jacobi(a: Algebra, b: Algebra, verify: bool = True, check_inputs: bool = True) -> ConstructionReport:
    """Jacobi algebra on ``A⊗B`` from a left JNP ``A`` and a right JNP ``B``.

    Bracket: ``[a1⊗a2, b1⊗b2] = a1∘b1 ⊗ a2⋄b2 - b1∘a1 ⊗ b2⋄a2``.
    """
    F = _same_field(a, b)
    if check_inputs:
        _require(check_jnp(a))
        _require(check_right_jnp(b))
    out = Algebra(F, a.dim * b.dim, _kron(a.dot, b.dot), tensor_vector(a.unit, b.unit),
                  bracket=tensor_jacobi_bracket(a, b))
    return _finish(out, "tensor-jacobi", [check_jacobi], verify)


# deformations

def xi_shift(jnp: Algebra, xi: Sequence, verify: bool = True) -> ConstructionReport:
    """``a × b = a∘b + ξ·a·b``."""
    _require(check_jnp(jnp))
    xi = jnp.vec(xi)
    extra = StructureTensor.from_function(jnp.field, jnp.dim, lambda i, j: jnp.d(xi, jnp.d(jnp.e(i), jnp.e(j))))
    return _finish(jnp.with_(circ=jnp.circ + extra, bracket=None), "xi-shift", [check_jnp], verify)


def kantor_deform(jnp: Algebra, u: Sequence, verify: bool = True) -> ConstructionReport:
    """``a ∘_u b = a∘(u·b)``; ``u`` need not be invertible."""
    _require(check_jnp(jnp))
    u = jnp.vec(u)
    circ = StructureTensor.from_function(jnp.field, jnp.dim, lambda i, j: jnp.c(jnp.e(i), jnp.d(u, jnp.e(j))))
    tag = "conformal" if is_invertible(jnp, u) else "kantor"
    return _finish(jnp.with_(circ=circ, bracket=None), tag, [check_jnp], verify)


def right_kantor_deform(rjnp: Algebra, v: Sequence, verify: bool = True) -> ConstructionReport:
    """``a ⋄_v b = (v·a)⋄b`` on a right JNP algebra."""
    _require(check_right_jnp(rjnp))
    v = rjnp.vec(v)
    circ = StructureTensor.from_function(rjnp.field, rjnp.dim, lambda i, j: rjnp.c(rjnp.d(v, rjnp.e(i)), rjnp.e(j)))
    tag = "right-conformal" if is_invertible(rjnp, v) else "right-kantor"
    return _finish(rjnp.with_(circ=circ, bracket=None), tag, [check_right_jnp], verify)


def conformal_bracket(alg: Algebra, u: Sequence) -> StructureTensor:
    u = alg.vec(u)
    uinv = inverse_element(alg, u)
    return StructureTensor.from_function(
        alg.field, alg.dim, lambda i, j: alg.d(uinv, alg.b(alg.d(u, alg.e(i)), alg.d(u, alg.e(j)))))


def conformal_deform_jacobi(jac: Algebra, u: Sequence, verify: bool = True) -> ConstructionReport:
    """``[a,b]_u = u⁻¹·[u·a, u·b]`` for invertible ``u``."""
    _require(check_jacobi(jac))
    return _finish(jac.with_(bracket=conformal_bracket(jac, u)), "conformal-jacobi", [check_jacobi], verify)


def check_deformation_compatibility(a: Algebra, u: Sequence, b: Algebra, v: Sequence) -> LawVerdict:
    """Compare two ways of deforming the tensor Jacobi algebra.

    Left side: tensor bracket built from the deformed factors ``∘_u`` and ``⋄_v``.
    Right side: ``(u⊗v)``-conformal deformation of the undeformed tensor bracket.
    The brackets are the verdict; the commutative products are compared too
    and a mismatch there is reported as well.
    """
    law = "deformation-compatibility"
    inverse_element(a, u)
    inverse_element(b, v)
    left = tensor_jacobi(kantor_deform(a, u).algebra, right_kantor_deform(b, v).algebra, verify=False)
    base = tensor_jacobi(a, b, verify=False)
    w = tensor_vector(a.vec(u), b.vec(v))
    right_bracket = conformal_bracket(base.algebra, w)
    L, R = left.algebra.bracket, right_bracket
    N = L.n
    for i in range(N):
        for j in range(N):
            if L.t[i][j] != R.t[i][j]:
                return failing(law, Counterexample("deformed-tensor-bracket", (i, j), L.t[i][j], R.t[i][j]))
    if left.algebra.dot != base.algebra.dot:
        return failing(law, Counterexample("tensor-dot", (), (), (), detail="commutative products differ"))
    return passing(law)


# parameter spaces for sampling

def solution_space(field: Field, n_unknowns: int, residual: Callable[[Sequence], Sequence]) -> list[tuple]:
    """Kernel of a linear map given as a function on coefficient vectors."""
    cols = []
    for u in range(n_unknowns):
        x = [field.zero] * n_unknowns
        x[u] = field.one
        cols.append(tuple(residual(x)))
    m = len(cols[0]) if cols else 0
    A = Matrix.from_columns(field, cols, m)
    return kernel_basis(A)


def _matrix(field: Field, n: int, flat: Sequence) -> Matrix:
    return Matrix(field, [flat[r * n:(r + 1) * n] for r in range(n)], n)


def derivation_space(alg: Algebra, which: Sequence[str] = ("dot",)) -> list[Matrix]:
    """Basis of operators that are derivations of every listed product."""
    F, n = alg.field, alg.dim

    def residual(x):
        P = _matrix(F, n, x)
        out = []
        for w in which:
            t = alg.tensor(w)
            for i in range(n):
                for j in range(n):
                    lhs = P.apply(t.t[i][j])
                    rhs = vec_add(t.mul(P.col(i), alg.e(j)), t.mul(alg.e(i), P.col(j)))
                    out.extend(vec_sub(lhs, rhs))
        return out

    return [_matrix(F, n, v) for v in solution_space(F, n * n, residual)]


def admissible_pair_space(alg: Algebra) -> list[tuple[Matrix, Matrix]]:
    """Basis of pairs ``(P, Q)`` with ``P`` a derivation and ``Q(ab) = Q(a)b - aP(b)``."""
    F, n = alg.field, alg.dim
    N = n * n

    def residual(x):
        P, Q = _matrix(F, n, x[:N]), _matrix(F, n, x[N:])
        out = []
        for i in range(n):
            for j in range(n):
                e_i, e_j = alg.e(i), alg.e(j)
                ab = alg.dot.t[i][j]
                out.extend(vec_sub(P.apply(ab), vec_add(alg.d(P.col(i), e_j), alg.d(e_i, P.col(j)))))
                out.extend(vec_sub(Q.apply(ab), vec_sub(alg.d(Q.col(i), e_j), alg.d(e_i, P.col(j)))))
        return out

    return [(_matrix(F, n, v[:N]), _matrix(F, n, v[N:])) for v in solution_space(F, 2 * N, residual)]


def random_scalar(field: Field, rng: random.Random, lo: int = -3, hi: int = 3):
    if field.is_finite:
        return field(rng.randrange(field.p))
    num = rng.randint(lo, hi)
    den = rng.choice((1, 1, 1, 2, 3))
    return field(num) / den


def random_vector(alg: Algebra, rng: random.Random) -> tuple:
    return tuple(random_scalar(alg.field, rng) for _ in range(alg.dim))


def random_combination(field: Field, basis: Sequence, rng: random.Random):
    """Random linear combination of matrices (or of vectors)."""
    if not basis:
        return None
    coeffs = [random_scalar(field, rng) for _ in basis]
    if isinstance(basis[0], Matrix):
        out = Matrix.zeros(field, basis[0].nrows, basis[0].ncols)
        for c, m in zip(coeffs, basis):
            out = out + m.scale(c)
        return out
    out = tuple(field.zero for _ in basis[0])
    for c, v in zip(coeffs, basis):
        out = tuple(x + c * y for x, y in zip(out, v))
    return out


def random_invertible(alg: Algebra, rng: random.Random, tries: int = 100) -> tuple:
    for _ in range(tries):
        u = random_vector(alg, rng)
        if is_invertible(alg, u):
            return u
    raise NonInvertibleElement(f"no invertible element found in {tries} draws")
