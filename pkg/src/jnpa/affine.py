"""Laurent-polynomial extension ``A[t, t⁻¹]`` on finitely supported elements.

Products on ``A ⊗ k[t, t⁻¹]``::

    (a tᵐ)·(b tⁿ) = (a·b) tᵐ⁺ⁿ
    [a tᵐ, b tⁿ]  = m (a∘b) tᵐ⁺ⁿ⁻¹ - n (b∘a) tᵐ⁺ⁿ⁻¹

:func:`verify_affinization` evaluates the Jacobi-algebra axioms for these
products on basis elements over a finite grid of degrees.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, Sequence

from .algebra import Algebra
from .errors import CharacteristicError, DimensionMismatch, InputError
from .laws import Counterexample, LawVerdict, failing, passing
from .linalg import vec_add, vec_scale


class LaurentElement:
    """``Σ_m a_m tᵐ`` with finitely many nonzero ``a_m``; zero coefficients are dropped."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, Sequence] | None = None):
        clean = {}
        for m, v in (terms or {}).items():
            v = tuple(v)
            if len(v) != n:
                raise DimensionMismatch(f"coefficient of t^{m} has length {len(v)}, expected {n}")
            if any(v):
                clean[int(m)] = v
        self.n = n
        self.terms = clean

    @classmethod
    def monomial(cls, a: Sequence, m: int) -> "LaurentElement":
        return cls(len(a), {m: a})

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = vec_add(out[m], v) if m in out else v
        return LaurentElement(self.n, out)

    def scale(self, c) -> "LaurentElement":
        return LaurentElement(self.n, {m: vec_scale(c, v) for m, v in self.terms.items()})

    def __sub__(self, other: "LaurentElement") -> "LaurentElement":
        return self + other.scale(-1)

    def __eq__(self, other):
        return isinstance(other, LaurentElement) and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"LaurentElement({self.terms})"


def _accumulate(n: int, pieces: Iterable[tuple[int, tuple]]) -> LaurentElement:
    out: dict[int, tuple] = {}
    for m, v in pieces:
        out[m] = vec_add(out[m], v) if m in out else v
    return LaurentElement(n, out)


def _check(alg: Algebra, *xs: LaurentElement):
    for x in xs:
        if x.n != alg.dim:
            raise DimensionMismatch(f"element of base dimension {x.n} in a {alg.dim}-dimensional algebra")


def laurent_dot(alg: Algebra, x: LaurentElement, y: LaurentElement) -> LaurentElement:
    _check(alg, x, y)
    return _accumulate(alg.dim, ((m + n, alg.d(a, b)) for m, a in x.terms.items() for n, b in y.terms.items()))


def laurent_bracket(alg: Algebra, x: LaurentElement, y: LaurentElement) -> LaurentElement:
    _check(alg, x, y)
    F = alg.field
    pieces = []
    for m, a in x.terms.items():
        for n, b in y.terms.items():
            v = vec_add(vec_scale(F(m), alg.c(a, b)), vec_scale(F(-n), alg.c(b, a)))
            pieces.append((m + n - 1, v))
    return _accumulate(alg.dim, pieces)


def parse_grid(spec: str) -> list[int]:
    """``"LO..HI"`` to the integer list ``[LO, ..., HI]``."""
    try:
        lo, hi = spec.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"grid must look like LO..HI, got {spec!r}") from None
    if hi < lo:
        raise InputError(f"empty grid {spec!r}")
    return list(range(lo, hi + 1))


MIN_GRID = 3


def verify_affinization(alg: Algebra, grid: Sequence[int] = range(-2, 3),
                        allow_prime_field: bool = False) -> LawVerdict:
    """Check that the Laurent extension is a Jacobi algebra with unit ``1_A t⁰``.

    The residual of each axiom, evaluated at basis elements, is a polynomial in
    the degrees (m, n, l) of degree at most two in each one (the Jacobi
    identity is the quadratic case).  Agreement on three distinct values per
    degree therefore proves the axiom for all integer degrees, which is why
    the grid must contain at least three distinct integers.
    """
    law = "affinization-jacobi"
    grid = sorted(set(int(g) for g in grid))
    if len(grid) < MIN_GRID:
        raise InputError(f"grid needs at least {MIN_GRID} distinct degrees, got {grid}")
    alg.tensor("circ")
    notes = [f"grid {grid[0]}..{grid[-1]}" if grid == list(range(grid[0], grid[-1] + 1)) else f"grid {grid}",
             f"{alg.dim ** 3} basis triples"]
    if alg.field.is_finite:
        if not allow_prime_field:
            raise CharacteristicError("affinization is a characteristic-zero statement; pass the override to "
                                      "evaluate over a prime field anyway")
        notes.append(f"evaluated over {alg.field}: no correctness claim outside characteristic 0")

    n = alg.dim
    unit = LaurentElement.monomial(alg.unit, 0)
    mono = {(i, m): LaurentElement.monomial(alg.e(i), m) for i in range(n) for m in grid}

    def br(x, y):
        return laurent_bracket(alg, x, y)

    def dot(x, y):
        return laurent_dot(alg, x, y)

    def fail(name, ix, degs, lhs, rhs):
        detail = f"lhs {_fmt(alg, lhs)} vs rhs {_fmt(alg, rhs)}"
        return failing(law, Counterexample(name, tuple(ix), (), (), degrees=tuple(degs), detail=detail), notes)

    # pairs
    for i, j in product(range(n), repeat=2):
        for m, k in product(grid, repeat=2):
            x, y = mono[i, m], mono[j, k]
            lhs, rhs = br(x, y), br(y, x).scale(-1)
            if lhs != rhs:
                return fail("bracket-antisymmetric", (i, j), (m, k), lhs, rhs)
            lhs, rhs = dot(x, y), dot(y, x)
            if lhs != rhs:
                return fail("dot-commutative", (i, j), (m, k), lhs, rhs)
    for i in range(n):
        for m in grid:
            x = mono[i, m]
            if dot(unit, x) != x:
                return fail("dot-unit", (i,), (m,), dot(unit, x), x)
            if not br(x, x).is_zero():
                return fail("bracket-alternating", (i,), (m,), br(x, x), LaurentElement(n))
    # triples
    for i, j, k in product(range(n), repeat=3):
        for m, p, l in product(grid, repeat=3):
            a, b, c = mono[i, m], mono[j, p], mono[k, l]
            lhs, rhs = dot(dot(a, b), c), dot(a, dot(b, c))
            if lhs != rhs:
                return fail("dot-associative", (i, j, k), (m, p, l), lhs, rhs)
            jac = br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)
            if not jac.is_zero():
                return fail("bracket-jacobi", (i, j, k), (m, p, l), jac, LaurentElement(n))
            bc = dot(b, c)
            lhs = br(a, bc)
            rhs = dot(br(a, b), c) + dot(b, br(a, c)) + dot(bc, br(unit, a))
            if lhs != rhs:
                return fail("bracket-leibniz-with-unit-term", (i, j, k), (m, p, l), lhs, rhs)
    return passing(law, notes)


def _fmt(alg: Algebra, x: LaurentElement) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for m in x.degrees():
        coeffs = ",".join(alg.field.fmt(c) for c in x.terms[m])
        parts.append(f"({coeffs})t^{m}")
    return " + ".join(parts)
