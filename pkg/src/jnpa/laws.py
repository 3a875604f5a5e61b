"""Identity checkers.

Every law is checked on basis tuples, which suffices because all identities
are multilinear.  Tuples are scanned in lexicographic order and the first
failure is reported, so verdicts are deterministic.

Each elementary identity is registered in :data:`IDENTITIES` as a function
``f(alg, indices, **operands) -> (lhs, rhs)``; a counterexample can always be
re-evaluated with :func:`reevaluate`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Callable, Sequence

from .algebra import LEFT, RIGHT, Algebra
from .errors import BudgetExceeded, CharacteristicError, InputError, OrientationError
from .linalg import Matrix, rref, vec_add, vec_scale, vec_sub


@dataclass(frozen=True)
class Counterexample:
    identity: str
    indices: tuple
    lhs: tuple
    rhs: tuple
    opposite: bool = False  # evaluated on the opposite second product
    degrees: tuple | None = None
    detail: str | None = None


@dataclass(frozen=True)
class LawVerdict:
    law: str
    passed: bool
    counterexample: Counterexample | None = None
    notes: tuple = dc_field(default=())

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return "pass"
        cx = self.counterexample
        if cx is None:
            return "fail"
        s = f"{cx.identity} fails at indices {list(cx.indices)}"
        if cx.degrees is not None:
            s += f", degrees {list(cx.degrees)}"
        if cx.detail:
            s += f" ({cx.detail})"
        return s

    def to_dict(self, field=None) -> dict:
        d: dict[str, Any] = {"law": self.law, "pass": self.passed}
        if self.counterexample is not None:
            cx = self.counterexample
            fmt = field.fmt if field is not None else str
            c: dict[str, Any] = {
                "identity": cx.identity,
                "indices": list(cx.indices),
                "lhs": [fmt(x) for x in cx.lhs],
                "rhs": [fmt(x) for x in cx.rhs],
            }
            if cx.degrees is not None:
                c["degrees"] = list(cx.degrees)
            if cx.detail:
                c["detail"] = cx.detail
            d["counterexample"] = c
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def passing(law: str, notes=()) -> LawVerdict:
    return LawVerdict(law, True, None, tuple(notes))


def failing(law: str, cx: Counterexample, notes=()) -> LawVerdict:
    return LawVerdict(law, False, cx, tuple(notes))


# identity registry

IDENTITIES: dict[str, tuple[int, Callable]] = {}


def identity(name: str, arity: int):
    def deco(fn):
        IDENTITIES[name] = (arity, fn)
        return fn
    return deco


def _dot(alg, x, y):
    return alg.dot.mul(x, y)


def _circ(alg, x, y):
    return alg.tensor("circ").mul(x, y)


def _br(alg, x, y):
    return alg.tensor("bracket").mul(x, y)


@identity("dot-commutative", 2)
def _id_comm(alg, ix):
    a, b = (alg.e(i) for i in ix)
    return _dot(alg, a, b), _dot(alg, b, a)


@identity("dot-associative", 3)
def _id_assoc(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    return _dot(alg, _dot(alg, a, b), c), _dot(alg, a, _dot(alg, b, c))


@identity("dot-left-unit", 1)
def _id_lunit(alg, ix):
    a = alg.e(ix[0])
    return _dot(alg, alg.unit, a), a


@identity("dot-right-unit", 1)
def _id_runit(alg, ix):
    a = alg.e(ix[0])
    return _dot(alg, a, alg.unit), a


@identity("novikov-left-symmetric", 3)
def _id_na1(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    lhs = vec_sub(_circ(alg, _circ(alg, a, b), c), _circ(alg, a, _circ(alg, b, c)))
    rhs = vec_sub(_circ(alg, _circ(alg, b, a), c), _circ(alg, b, _circ(alg, a, c)))
    return lhs, rhs


@identity("novikov-right-commutative", 3)
def _id_na2(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    return _circ(alg, _circ(alg, a, b), c), _circ(alg, _circ(alg, a, c), b)


@identity("dot-circ-associative", 3)
def _id_jnpa1(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    return _circ(alg, _dot(alg, a, b), c), _dot(alg, a, _circ(alg, b, c))


@identity("circ-leibniz-with-unit-term", 3)
def _id_jnpa2(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    lhs = _circ(alg, c, _dot(alg, a, b))
    rhs = vec_add(_dot(alg, _circ(alg, c, a), b), _dot(alg, a, _circ(alg, c, b)))
    rhs = vec_sub(rhs, _dot(alg, _dot(alg, a, b), _circ(alg, c, alg.unit)))
    return lhs, rhs


@identity("circ-derivation-of-dot", 3)
def _id_dnpa2(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    lhs = _circ(alg, a, _dot(alg, b, c))
    rhs = vec_add(_dot(alg, _circ(alg, a, b), c), _dot(alg, b, _circ(alg, a, c)))
    return lhs, rhs


@identity("bracket-alternating", 1)
def _id_alt(alg, ix):
    a = alg.e(ix[0])
    return _br(alg, a, a), alg.zero()


@identity("bracket-antisymmetric", 2)
def _id_anti(alg, ix):
    a, b = (alg.e(i) for i in ix)
    return _br(alg, a, b), vec_scale(-1, _br(alg, b, a))


@identity("bracket-jacobi", 3)
def _id_jacobi(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    s = vec_add(_br(alg, _br(alg, a, b), c), _br(alg, _br(alg, b, c), a))
    s = vec_add(s, _br(alg, _br(alg, c, a), b))
    return s, alg.zero()


@identity("bracket-leibniz-with-unit-term", 3)
def _id_jac(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    lhs = _br(alg, a, _dot(alg, b, c))
    rhs = vec_add(_dot(alg, _br(alg, a, b), c), _dot(alg, b, _br(alg, a, c)))
    rhs = vec_add(rhs, _dot(alg, _dot(alg, b, c), _br(alg, alg.unit, a)))
    return lhs, rhs


@identity("transposed-poisson", 3)
def _id_tp(alg, ix):
    a, b, c = (alg.e(i) for i in ix)
    lhs = vec_scale(alg.field(2), _dot(alg, c, _br(alg, a, b)))
    rhs = vec_add(_br(alg, _dot(alg, c, a), b), _br(alg, a, _dot(alg, c, b)))
    return lhs, rhs


@identity("derivation", 2)
def _id_der(alg, ix, P: Matrix, which: str = "dot"):
    a, b = (alg.e(i) for i in ix)
    t = alg.tensor(which)
    lhs = P.apply(t.mul(a, b))
    rhs = vec_add(t.mul(P.apply(a), b), t.mul(a, P.apply(b)))
    return lhs, rhs


@identity("admissible-pair", 2)
def _id_pair(alg, ix, P: Matrix, Q: Matrix):
    a, b = (alg.e(i) for i in ix)
    lhs = Q.apply(_dot(alg, a, b))
    rhs = vec_sub(_dot(alg, Q.apply(a), b), _dot(alg, a, P.apply(b)))
    return lhs, rhs


def opposite(alg: Algebra) -> Algebra:
    """Same algebra with the second product replaced by its opposite, viewed as a left product."""
    return alg.with_(circ=alg.tensor("circ").transpose(), orientation=LEFT)


def reevaluate(alg: Algebra, cx: Counterexample, **operands):
    """Recompute ``(lhs, rhs)`` of a counterexample."""
    if cx.identity not in IDENTITIES:
        raise InputError(f"identity {cx.identity!r} cannot be re-evaluated here")
    target = opposite(alg) if cx.opposite else alg
    return IDENTITIES[cx.identity][1](target, cx.indices, **operands)


def first_failure(alg: Algebra, name: str, opposite_flag: bool = False, **operands) -> Counterexample | None:
    arity, fn = IDENTITIES[name]
    for ix in product(range(alg.dim), repeat=arity):
        lhs, rhs = fn(alg, ix, **operands)
        if lhs != rhs:
            return Counterexample(name, ix, tuple(lhs), tuple(rhs), opposite_flag)
    return None


def _run(law: str, alg: Algebra, names: Sequence[str], opposite_flag: bool = False, **operands) -> LawVerdict:
    for name in names:
        cx = first_failure(alg, name, opposite_flag, **operands)
        if cx is not None:
            return failing(law, cx)
    return passing(law)


COMM_ASSOC = ("dot-commutative", "dot-associative")
UNITAL_COMM_ASSOC = COMM_ASSOC + ("dot-left-unit", "dot-right-unit")
NOVIKOV = ("novikov-left-symmetric", "novikov-right-commutative")
JNP = UNITAL_COMM_ASSOC + NOVIKOV + ("dot-circ-associative", "circ-leibniz-with-unit-term")
DNP = COMM_ASSOC + NOVIKOV + ("dot-circ-associative", "circ-derivation-of-dot")
LIE = ("bracket-alternating", "bracket-antisymmetric", "bracket-jacobi")
JACOBI = UNITAL_COMM_ASSOC + LIE + ("bracket-leibniz-with-unit-term",)


def _need_orientation(alg: Algebra, want: str):
    alg.tensor("circ")
    if alg.orientation != want:
        raise OrientationError(f"expected a {want} product, algebra carries a {alg.orientation} one")


def check_unital_comm_assoc(alg: Algebra) -> LawVerdict:
    return _run("unital-commutative-associative", alg, UNITAL_COMM_ASSOC)


def check_novikov(alg: Algebra) -> LawVerdict:
    _need_orientation(alg, LEFT)
    return _run("novikov", alg, NOVIKOV)


def check_right_novikov(alg: Algebra) -> LawVerdict:
    _need_orientation(alg, RIGHT)
    return _run("right-novikov", opposite(alg), NOVIKOV, opposite_flag=True)


def check_dnp(alg: Algebra) -> LawVerdict:
    _need_orientation(alg, LEFT)
    return _run("differential-novikov-poisson", alg, DNP)


def check_jnp(alg: Algebra) -> LawVerdict:
    _need_orientation(alg, LEFT)
    return _run("jacobi-novikov-poisson", alg, JNP)


def check_right_jnp(alg: Algebra) -> LawVerdict:
    _need_orientation(alg, RIGHT)
    return _run("right-jacobi-novikov-poisson", opposite(alg), JNP, opposite_flag=True)


def check_jacobi(alg: Algebra) -> LawVerdict:
    alg.tensor("bracket")
    return _run("jacobi", alg, JACOBI)


def check_lie(alg: Algebra) -> LawVerdict:
    alg.tensor("bracket")
    return _run("lie", alg, LIE)


def check_transposed_poisson(alg: Algebra) -> LawVerdict:
    """Commutative associative dot, Lie bracket and ``2 z·{x, y} = {z·x, y} + {x, z·y}``."""
    if alg.field.characteristic == 2:
        raise CharacteristicError("the transposed Poisson identity needs characteristic other than 2")
    alg.tensor("bracket")
    return _run("transposed-poisson", alg, COMM_ASSOC + LIE + ("transposed-poisson",))


def check_derivation(alg: Algebra, which: str, P: Matrix) -> LawVerdict:
    alg.tensor(which)
    if P.shape != (alg.dim, alg.dim):
        raise InputError("operator has wrong size")
    return _run(f"derivation-of-{which}", alg, ("derivation",), P=P, which=which)


def check_admissible_pair(alg: Algebra, P: Matrix, Q: Matrix) -> LawVerdict:
    for M in (P, Q):
        if M.shape != (alg.dim, alg.dim):
            raise InputError("operator has wrong size")
    return _run("admissible-pair", alg, ("admissible-pair",), P=P, Q=Q)


# simplicity of the second product over a prime field

def _closure_dim(alg: Algebra, v: tuple) -> int:
    """Dimension of the smallest subspace containing v and stable under e_i∘- and -∘e_i."""
    F, n = alg.field, alg.dim
    circ = alg.tensor("circ")
    basis: list[tuple] = [v]
    queue = [v]
    while queue and len(basis) < n:
        w = queue.pop()
        for i in range(n):
            e = alg.e(i)
            for cand in (circ.mul(e, w), circ.mul(w, e)):
                if not any(cand):
                    continue
                _, r, _ = rref(Matrix(F, basis + [cand], n))
                if r > len(basis):
                    basis.append(cand)
                    queue.append(cand)
    return len(basis)


def projective_points(field, n: int):
    """Nonzero vectors of F_p^n with first nonzero coordinate 1, lexicographically."""
    for lead in range(n - 1, -1, -1):
        for tail in field.vectors(n - lead - 1):
            yield (field.zero,) * lead + (field.one,) + tuple(tail)


def check_simple_novikov(alg: Algebra, budget: int = 200_000) -> LawVerdict:
    """No proper nonzero two-sided ideal for the second product (over F_p, by enumeration)."""
    F = alg.field
    if not F.is_finite:
        raise InputError("simplicity is decided by enumeration and needs a prime field")
    circ = alg.tensor("circ")
    law = "simple-novikov"
    n = alg.dim
    lines = (F.p ** n - 1) // (F.p - 1)
    if lines > budget:
        raise BudgetExceeded(f"{lines} lines exceed budget {budget}")
    if circ.is_zero():
        return failing(law, Counterexample("nonzero-product", (), (), (), detail="product is identically zero"))
    for v in sorted(projective_points(F, n), key=lambda w: tuple(int(x) for x in w)):
        d = _closure_dim(alg, v)
        if d < n:
            return failing(law, Counterexample("no-proper-ideal", (), tuple(v), (F(d),),
                                               detail=f"ideal generated by this vector has dimension {d} < {n}"))
    return passing(law)


LAW_CHECKERS: dict[str, Callable[[Algebra], LawVerdict]] = {
    "unital-comm-assoc": check_unital_comm_assoc,
    "novikov": check_novikov,
    "right-novikov": check_right_novikov,
    "dnp": check_dnp,
    "jnp": check_jnp,
    "right-jnp": check_right_jnp,
    "jacobi": check_jacobi,
    "lie": check_lie,
    "transposed-poisson": check_transposed_poisson,
    "simple-novikov": check_simple_novikov,
}
