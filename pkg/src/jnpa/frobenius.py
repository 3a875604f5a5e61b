"""Invariant bilinear forms, integrals and Frobenius structures."""
from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import Sequence

from .algebra import Algebra, StructureTensor, left_mult_operator
from .constructions import _require, solution_space, tensor_jacobi
from .errors import CharacteristicError, InputError, LawFailure, SingularMatrixError
from .laws import (
    Counterexample, LawVerdict, _run, check_derivation, check_jacobi, check_jnp, failing, first_failure,
    identity, opposite, passing,
)
from .linalg import Matrix, invert, nonsingular_combination, linear_combination, rank, vec_add


def bilinear(G: Matrix, x: Sequence, y: Sequence):
    return sum((a * b for a, b in zip(x, G.apply(y))), G.field.zero)


def functional(v: Sequence, x: Sequence):
    out = v[0] * x[0]
    for a, b in zip(v[1:], x[1:]):
        out = out + a * b
    return out


# form identities, registered so counterexamples can be re-evaluated

@identity("form-symmetric", 2)
def _id_sym(alg, ix, G):
    i, j = ix
    return (G[i, j],), (G[j, i],)


@identity("form-dot-invariant", 3)
def _id_inv_dot(alg, ix, G):
    a, b, c = (alg.e(i) for i in ix)
    return (bilinear(G, alg.d(a, b), c),), (bilinear(G, a, alg.d(b, c)),)


@identity("form-circ-invariant", 3)
def _id_inv_circ(alg, ix, G):
    a, b, c = (alg.e(i) for i in ix)
    lhs = bilinear(G, alg.c(a, b), c)
    rhs = -bilinear(G, b, vec_add(alg.c(a, c), alg.c(c, a)))
    return (lhs,), (rhs,)


@identity("form-bracket-invariant", 3)
def _id_inv_br(alg, ix, G):
    a, b, c = (alg.e(i) for i in ix)
    return (bilinear(G, alg.b(a, b), c),), (bilinear(G, a, alg.b(b, c)),)


@identity("integral", 3)
def _id_integral(alg, ix, v):
    a, b, c = (alg.e(i) for i in ix)
    lhs = functional(v, alg.d(alg.c(a, b), c))
    rhs = -functional(v, alg.d(b, vec_add(alg.c(a, c), alg.c(c, a))))
    return (lhs,), (rhs,)


def _check_shape(alg: Algebra, G: Matrix):
    if G.shape != (alg.dim, alg.dim):
        raise InputError(f"form must be {alg.dim}x{alg.dim}")
    if G.field != alg.field:
        raise InputError("form and algebra live over different fields")


def _nondegenerate(law: str, G: Matrix) -> LawVerdict | None:
    r = rank(G)
    if r < G.nrows:
        return failing(law, Counterexample("form-nondegenerate", (), (), (),
                                           detail=f"rank {r} < {G.nrows}"))
    return None


def check_quadratic(jnp: Algebra, G: Matrix) -> LawVerdict:
    """JNP algebra with a nondegenerate symmetric form invariant under both products."""
    law = "quadratic"
    _check_shape(jnp, G)
    v = check_jnp(jnp)
    if not v.passed:
        return failing(law, v.counterexample)
    v = _run(law, jnp, ("form-symmetric",), G=G)
    if not v.passed:
        return v
    bad = _nondegenerate(law, G)
    if bad is not None:
        return bad
    return _run(law, jnp, ("form-dot-invariant", "form-circ-invariant"), G=G)


def check_right_quadratic(rjnp: Algebra, G: Matrix) -> LawVerdict:
    """Quadratic right JNP algebra: its opposite product gives a quadratic JNP algebra."""
    v = check_quadratic(opposite(rjnp), G)
    if v.passed or v.counterexample is None:
        return LawVerdict("right-quadratic", v.passed, v.counterexample, v.notes)
    return failing("right-quadratic", replace(v.counterexample, opposite=True))


def _sym_from_flat(F, n: int, x: Sequence) -> Matrix:
    G = [[F.zero] * n for _ in range(n)]
    it = iter(x)
    for i in range(n):
        for j in range(i, n):
            G[i][j] = G[j][i] = next(it)
    return Matrix(F, G, n)


def invariant_form_space(jnp: Algebra) -> list[Matrix]:
    """Basis of symmetric forms invariant under both products."""
    _require(check_jnp(jnp))
    F, n = jnp.field, jnp.dim

    def residual(x):
        G = _sym_from_flat(F, n, x)
        out = []
        for ix in product(range(n), repeat=3):
            for fn in (_id_inv_dot, _id_inv_circ):
                (l,), (r,) = fn(jnp, ix, G=G)
                out.append(l - r)
        return out

    return [_sym_from_flat(F, n, v) for v in solution_space(F, n * (n + 1) // 2, residual)]


def integral_space(jnp: Algebra) -> list[tuple]:
    """Basis of functionals ``v`` with ``v((a∘b)·c) = -v(b·(a∘c + c∘a))``."""
    _require(check_jnp(jnp))
    F, n = jnp.field, jnp.dim

    def residual(x):
        return [l - r for ix in product(range(n), repeat=3)
                for (l,), (r,) in [_id_integral(jnp, ix, v=x)]]

    return solution_space(F, n, residual)


def is_integral(jnp: Algebra, v: Sequence) -> bool:
    return first_failure(jnp, "integral", v=tuple(jnp.vec(v))) is None


def is_invariant_form(jnp: Algebra, G: Matrix) -> bool:
    return all(first_failure(jnp, name, G=G) is None
               for name in ("form-symmetric", "form-dot-invariant", "form-circ-invariant"))


def gram_of_functional(alg: Algebra, v: Sequence) -> Matrix:
    """``B_v(e_i, e_j) = v(e_i·e_j)``."""
    n = alg.dim
    return Matrix(alg.field, [[functional(v, alg.dot.t[i][j]) for j in range(n)] for i in range(n)], n)


def integral_to_form(jnp: Algebra, v: Sequence) -> Matrix:
    v = jnp.vec(v)
    if not is_integral(jnp, v):
        raise InputError("functional is not an integral")
    return gram_of_functional(jnp, v)


def form_to_integral(jnp: Algebra, G: Matrix) -> tuple:
    """``v_B(a) = B(a, 1_A)``."""
    _check_shape(jnp, G)
    if not is_invariant_form(jnp, G):
        raise InputError("form is not an invariant symmetric form")
    return G.apply(jnp.unit)


@dataclass(frozen=True)
class FrobeniusAnswer:
    frobenius: bool
    integral: tuple | None = None
    form: Matrix | None = None

    def __bool__(self):
        return self.frobenius


def is_frobenius(jnp: Algebra, budget: int = 1_000_000) -> FrobeniusAnswer:
    """Decide whether some invariant symmetric form is nondegenerate; return a witness integral."""
    forms = invariant_form_space(jnp)
    lam = nonsingular_combination(forms, budget) if forms else None
    if lam is None:
        return FrobeniusAnswer(False)
    G = linear_combination(jnp.field, lam, forms)
    return FrobeniusAnswer(True, form_to_integral(jnp, G), G)


def nondegenerate_integral(jnp: Algebra, budget: int = 1_000_000) -> tuple | None:
    """Search the integral space directly for a member with nondegenerate ``B_v``."""
    ints = integral_space(jnp)
    if not ints:
        return None
    grams = [gram_of_functional(jnp, v) for v in ints]
    lam = nonsingular_combination(grams, budget)
    if lam is None:
        return None
    F = jnp.field
    return tuple(sum((c * v[k] for c, v in zip(lam, ints)), F.zero) for k in range(jnp.dim))


@dataclass(frozen=True)
class FrobeniusPair:
    """Integral ``v``, tensor ``e = Σ E[i][j] e_i⊗e_j`` and Euler–Casimir element ``ω = Σ e¹·e²``."""

    v: tuple
    E: Matrix
    omega: tuple

    def to_dict(self, field) -> dict:
        return {"v": [field.fmt(x) for x in self.v], "E": self.E.to_strings(),
                "omega": [field.fmt(x) for x in self.omega]}


def frobenius_pair(jnp: Algebra, v: Sequence, require_integral: bool = True) -> FrobeniusPair:
    v = jnp.vec(v)
    if require_integral and not is_integral(jnp, v):
        raise InputError("functional is not an integral")
    Fm = gram_of_functional(jnp, v)
    try:
        E = invert(Fm)
    except SingularMatrixError:
        raise SingularMatrixError("functional is degenerate: v(a·b) has rank "
                                  f"{rank(Fm)} < {jnp.dim}") from None
    n = jnp.dim
    omega = jnp.zero()
    for i in range(n):
        for j in range(n):
            if E[i, j]:
                omega = vec_add(omega, tuple(E[i, j] * x for x in jnp.dot.t[i][j]))
    return FrobeniusPair(v, E, omega)


def pair_conditions(jnp: Algebra, pair: FrobeniusPair) -> LawVerdict:
    """Both defining conditions of a Frobenius pair, checked exactly."""
    law = "frobenius-pair"
    F, n, E, v = jnp.field, jnp.dim, pair.E, pair.v
    left = tuple(sum((E[i, j] * v[i] for i in range(n)), F.zero) for j in range(n))
    right = tuple(sum((E[i, j] * v[j] for j in range(n)), F.zero) for i in range(n))
    if left != jnp.unit:
        return failing(law, Counterexample("counit-left", (), left, jnp.unit))
    if right != jnp.unit:
        return failing(law, Counterexample("counit-right", (), right, jnp.unit))
    for a in range(n):
        L = left_mult_operator(jnp, "dot", jnp.e(a))
        lhs, rhs = L @ E, E @ L.T
        if lhs != rhs:
            return failing(law, Counterexample("balanced", (a,), sum(lhs.rows, ()), sum(rhs.rows, ())))
    return passing(law)


def adjoint_operator(alg: Algebra, P: Matrix, G: Matrix) -> Matrix:
    """``P̂ = G⁻¹ Pᵀ G``, so that ``B(P a, b) = B(a, P̂ b)``."""
    _check_shape(alg, G)
    law = "dot-frobenius"
    v = _run(law, alg, ("form-symmetric", "form-dot-invariant"), G=G)
    if not v.passed:
        raise LawFailure(v)
    return invert(G) @ P.T @ G


def differential_frobenius_construct(alg: Algebra, P: Matrix, G: Matrix, q) -> tuple[Algebra, LawVerdict]:
    """Build ``a ∘_q b = a·(P + qP̂)(b)`` and test whether ``(A, ·, ∘_q, B)`` is quadratic."""
    F = alg.field
    if F.characteristic == 2:
        raise CharacteristicError("this construction needs characteristic other than 2")
    _check_shape(alg, G)
    bad = _nondegenerate("dot-frobenius", G)
    if bad is not None:
        raise LawFailure(bad)
    _require(check_derivation(alg, "dot", P))
    Phat = adjoint_operator(alg, P, G)
    R = P + Phat.scale(F(q))
    circ = StructureTensor.from_function(F, alg.dim, lambda i, j: alg.d(alg.e(i), R.col(j)))
    out = alg.with_(circ=circ, orientation="left", bracket=None, form=G, maps={"P": P, "Phat": Phat})
    verdict = check_quadratic(out, G)
    hat_der = check_derivation(alg, "dot", Phat).passed
    note = "adjoint operator is a derivation" if hat_der else "adjoint operator is not a derivation"
    return out, LawVerdict(verdict.law, verdict.passed, verdict.counterexample, (note,))


def tensor_form(Ga: Matrix, Gb: Matrix) -> Matrix:
    n1, n2 = Ga.nrows, Gb.nrows
    return Matrix(Ga.field, [[Ga[i // n2, k // n2] * Gb[i % n2, k % n2] for k in range(n1 * n2)]
                             for i in range(n1 * n2)], n1 * n2)


def check_frobenius_jacobi(jac: Algebra, G: Matrix) -> LawVerdict:
    law = "frobenius-jacobi"
    v = check_jacobi(jac)
    if not v.passed:
        return failing(law, v.counterexample)
    v = _run(law, jac, ("form-symmetric",), G=G)
    if not v.passed:
        return v
    bad = _nondegenerate(law, G)
    if bad is not None:
        return bad
    return _run(law, jac, ("form-dot-invariant", "form-bracket-invariant"), G=G)


def frobenius_jacobi_tensor(a: Algebra, Ga: Matrix, b: Algebra, Gb: Matrix) -> tuple[Algebra, Matrix, LawVerdict]:
    """Tensor Jacobi algebra of a quadratic JNP and a quadratic right JNP, with the product form."""
    for verdict in (check_quadratic(a, Ga), check_right_quadratic(b, Gb)):
        if not verdict.passed:
            raise LawFailure(verdict)
    J = tensor_jacobi(a, b, verify=False, check_inputs=False).algebra
    GJ = tensor_form(Ga, Gb)
    J = J.with_(form=GJ)
    return J, GJ, check_frobenius_jacobi(J, GJ)
