"""Modules over a JNP algebra: axioms, adjoint module, dual module."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .algebra import Algebra, left_mult_operator, right_mult_operator
from .constructions import _require
from .errors import DimensionMismatch, InputError, LawFailure, SingularMatrixError
from .constructions import solution_space
from .frobenius import gram_of_functional
from .laws import Counterexample, LawVerdict, check_jnp, failing, passing
from .linalg import Matrix, nonsingular_combination, rank


@dataclass(frozen=True)
class ModuleStructure:
    """Representation ``(V, l, r, σ)``: ``l[i] = l(e_i)``, ``r[i] = r(e_i)``, ``s[i] = σ(e_i)`` on ``V``."""

    dim: int
    l: tuple
    r: tuple
    s: tuple

    def __post_init__(self):
        for fam in (self.l, self.r, self.s):
            for M in fam:
                if M.shape != (self.dim, self.dim):
                    raise DimensionMismatch(f"module matrices must be {self.dim}x{self.dim}")
        if not (len(self.l) == len(self.r) == len(self.s)):
            raise DimensionMismatch("l, r and s families must have the same length")

    @property
    def base_dim(self) -> int:
        return len(self.l)

    def to_dict(self) -> dict:
        """Module payload; files wrap it as ``{"module": ...}``."""
        return {"dimV": self.dim,
                "l": [M.to_strings() for M in self.l],
                "r": [M.to_strings() for M in self.r],
                "s": [M.to_strings() for M in self.s]}

    @classmethod
    def from_dict(cls, field, d: dict) -> "ModuleStructure":
        from .io import matrix_from_json
        if isinstance(d, dict) and isinstance(d.get("module"), dict):
            d = d["module"]
        try:
            m = d["dimV"]
            fams = [tuple(matrix_from_json(field, m, M, key) for M in d[key]) for key in ("l", "r", "s")]
        except (KeyError, TypeError):
            raise InputError("module needs 'dimV', 'l', 'r' and 's'") from None
        return cls(m, *fams)


def _apply_family(alg: Algebra, fam: Sequence[Matrix], x: Sequence) -> Matrix:
    """Extend a basis-indexed family linearly: ``φ(x) = Σ x_i φ(e_i)``."""
    m = fam[0].nrows
    out = Matrix.zeros(alg.field, m)
    for c, M in zip(x, fam):
        if c:
            out = out + M.scale(c)
    return out


def check_module(jnp: Algebra, M: ModuleStructure) -> LawVerdict:
    """Associative module, the mixed compatibility identities, then the Novikov bimodule identities.

    The chained identity ``r(b)σ(a) = σ(a)r(b) = σ(a∘b)`` is split into two
    constraints; the last mixed identity is enforced as one equation.
    """
    law = "module"
    if M.base_dim != jnp.dim:
        raise DimensionMismatch(f"module families have length {M.base_dim}, algebra has dimension {jnp.dim}")
    F, n, m = jnp.field, jnp.dim, M.dim
    if any(X.field != F for fam in (M.l, M.r, M.s) for X in fam):
        raise InputError("module matrices live over a different field")
    I = Matrix.identity(F, m)

    def l(x):
        return _apply_family(jnp, M.l, x)

    def r(x):
        return _apply_family(jnp, M.r, x)

    def s(x):
        return _apply_family(jnp, M.s, x)

    e, one = jnp.e, jnp.unit
    dot, circ = jnp.d, jnp.c

    unary = [("sigma-unit", lambda a: (s(one), I))]
    binary = [
        ("sigma-multiplicative", lambda a, b: (s(dot(a, b)), s(a) @ s(b))),
        ("right-sigma-commute", lambda a, b: (r(b) @ s(a), s(a) @ r(b))),
        ("sigma-right-circ", lambda a, b: (s(a) @ r(b), s(circ(a, b)))),
        ("left-of-product", lambda a, b: (l(dot(a, b)), s(a) @ l(b))),
        ("left-sigma-commutator", lambda a, b: (l(a) @ s(b) - s(b) @ l(a),
                                                s(circ(a, b)) - s(circ(a, one)) @ s(b))),
        ("right-of-product", lambda a, b: (r(dot(a, b)) - s(b) @ r(a), s(a) @ r(b) - s(dot(a, b)) @ r(one))),
        ("bimodule-left-symmetric", lambda a, b: (l(a) @ l(b) - l(circ(a, b)), l(b) @ l(a) - l(circ(b, a)))),
        ("bimodule-mixed", lambda a, b: (l(a) @ r(b) - r(b) @ l(a), r(circ(a, b)) - r(b) @ r(a))),
        ("bimodule-left-right", lambda a, b: (l(circ(a, b)), r(b) @ l(a))),
        ("bimodule-right-commutative", lambda a, b: (r(a) @ r(b), r(b) @ r(a))),
    ]
    for name, f in unary:
        lhs, rhs = f(None)
        if lhs != rhs:
            return failing(law, Counterexample(name, (), sum(lhs.rows, ()), sum(rhs.rows, ())))
    for name, f in binary:
        for i, j in product(range(n), repeat=2):
            lhs, rhs = f(e(i), e(j))
            if lhs != rhs:
                return failing(law, Counterexample(name, (i, j), sum(lhs.rows, ()), sum(rhs.rows, ())))
    return passing(law)


def adjoint_module(jnp: Algebra) -> ModuleStructure:
    """``(A, L_∘, R_∘, L_·)``."""
    _require(check_jnp(jnp))
    n = jnp.dim
    l = tuple(left_mult_operator(jnp, "circ", jnp.e(i)) for i in range(n))
    r = tuple(right_mult_operator(jnp, "circ", jnp.e(i)) for i in range(n))
    s = tuple(left_mult_operator(jnp, "dot", jnp.e(i)) for i in range(n))
    return ModuleStructure(n, l, r, s)


def dual_module(jnp: Algebra, M: ModuleStructure, check: bool = True) -> ModuleStructure:
    """Dual module on ``V*`` in the dual basis.

    With ``φ*(a) = -φ(a)ᵀ`` the dual structure ``(l* + r*, -r*, -σ*)`` becomes
    ``l' = -lᵀ - rᵀ``, ``r' = rᵀ``, ``σ' = σᵀ``.
    """
    if check:
        v = check_module(jnp, M)
        if not v.passed:
            raise LawFailure(v)
    l = tuple(-(a.T) - b.T for a, b in zip(M.l, M.r))
    r = tuple(b.T for b in M.r)
    s = tuple(c.T for c in M.s)
    return ModuleStructure(M.dim, l, r, s)


def check_frobenius_via_modules(jnp: Algebra, v: Sequence) -> LawVerdict:
    """Does ``f(a)(b) = v(a·b)`` intertwine the adjoint module with its dual?"""
    law = "frobenius-module-isomorphism"
    v = jnp.vec(v)
    Fm = gram_of_functional(jnp, v)  # symmetric, so F[j][i] = F[i][j]
    if rank(Fm) < jnp.dim:
        raise SingularMatrixError("functional is degenerate")
    ad = adjoint_module(jnp)
    du = dual_module(jnp, ad, check=False)
    for name, fam, dfam in (("intertwine-sigma", ad.s, du.s), ("intertwine-left", ad.l, du.l),
                            ("intertwine-right", ad.r, du.r)):
        for i, (X, Y) in enumerate(zip(fam, dfam)):
            lhs, rhs = Fm @ X, Y @ Fm
            if lhs != rhs:
                return failing(law, Counterexample(name, (i,), sum(lhs.rows, ()), sum(rhs.rows, ())))
    return passing(law)


def intertwining_functionals(jnp: Algebra) -> list[tuple]:
    """Basis of all ``v`` whose map ``a ↦ v(a·-)`` intertwines the adjoint module with its dual.

    Nondegeneracy is not imposed; see :func:`module_frobenius`.
    """
    ad = adjoint_module(jnp)
    du = dual_module(jnp, ad, check=False)
    F, n = jnp.field, jnp.dim
    pairs = [(X, Y) for fam, dfam in ((ad.s, du.s), (ad.l, du.l), (ad.r, du.r)) for X, Y in zip(fam, dfam)]

    def residual(v):
        Fm = gram_of_functional(jnp, v)
        out = []
        for X, Y in pairs:
            out.extend(sum((Fm @ X - Y @ Fm).rows, ()))
        return out

    return solution_space(F, n, residual)


def module_frobenius(jnp: Algebra, budget: int = 1_000_000) -> tuple | None:
    """A functional giving a module isomorphism between the adjoint module and its dual, or ``None``."""
    basis = intertwining_functionals(jnp)
    if not basis:
        return None
    grams = [gram_of_functional(jnp, v) for v in basis]
    lam = nonsingular_combination(grams, budget)
    if lam is None:
        return None
    F = jnp.field
    return tuple(sum((c * v[k] for c, v in zip(lam, basis)), F.zero) for k in range(jnp.dim))
