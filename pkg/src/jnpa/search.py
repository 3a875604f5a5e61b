"""Exhaustive search for second products over a prime field.

In a JNP algebra, putting ``b = 1`` in ``(a·b)∘c = a·(b∘c)`` forces
``a∘c = a·(1∘c)``.  So the product is determined by the operator
``D = 1∘(-)``, and it suffices to scan the ``p^(n²)`` matrices ``D``
instead of the ``p^(n³)`` structure tensors.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import Algebra, StructureTensor
from .errors import BudgetExceeded, FieldMismatch, InputError
from .field import Field
from .laws import check_dnp, check_jnp, check_novikov, check_unital_comm_assoc
from .linalg import Matrix

LAW_FILTERS = {"jnp": check_jnp, "novikov": check_novikov, "dnp": check_dnp}
DEFAULT_BUDGET = 1_000_000


def circ_from_operator(base: Algebra, D: Matrix) -> StructureTensor:
    """``e_i∘e_j = e_i·D(e_j)``, i.e. ``d^k_ij = Σ_m D[m][j] c^k_im``."""
    dot = base.tensor("dot")
    return StructureTensor.from_function(base.field, base.dim, lambda i, j: dot.mul(base.e(i), D.col(j)))


def shape_coordinates(circ: StructureTensor) -> tuple:
    """Flattened structure constants ``circ[i][j][k]`` in row-major order (the ``l1, l2, ...`` coordinates)."""
    return tuple(c for row in circ.t for v in row for c in v)


def _key(circ: StructureTensor) -> tuple:
    return tuple(int(c) for c in shape_coordinates(circ))


def _prepare(base: Algebra, p: int, law: str) -> tuple[Algebra, Field]:
    if law not in LAW_FILTERS:
        raise InputError(f"unknown law {law!r}; choose from {sorted(LAW_FILTERS)}")
    if not base.field.is_finite:
        raise FieldMismatch("search runs over a prime field; load the base with --field p=P")
    if base.field.p != p:
        raise FieldMismatch(f"base algebra is over {base.field}, search requested over GF({p})")
    v = check_unital_comm_assoc(base)
    if not v.passed:
        raise InputError(f"base is not unital commutative associative: {v.describe()}")
    return base.with_(circ=None, bracket=None, orientation="left"), base.field


@dataclass
class SearchResult:
    field: Field
    base: Algebra
    law: str
    solutions: list = dc_field(default_factory=list)  # StructureTensor, sorted by coordinates
    buckets: dict = dc_field(default_factory=dict)  # invariant key -> list of solutions

    @property
    def count(self) -> int:
        return len(self.solutions)

    def representatives(self) -> list:
        """Lexicographically smallest solution of each invariant bucket."""
        return [min(members, key=_key) for _, members in sorted(self.buckets.items())]

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.to_json(), "law": self.law, "count": self.count,
            "buckets": [{"invariants": dict(k), "size": len(m),
                         "representative": [F.fmt(c) for c in shape_coordinates(min(m, key=_key))]}
                        for k, m in sorted(self.buckets.items())],
        }


def enumerate_jnp(base: Algebra, p: int, budget: int = DEFAULT_BUDGET, law: str = "jnp",
                  group: bool = True) -> SearchResult:
    """All products of the form ``a·D(b)`` that pass the chosen law filter.

    The reduction is forced only by the JNP axioms, so ``law="novikov"`` or
    ``"dnp"`` filters this family and is not a complete Novikov enumeration.
    """
    from .catalog import invariants
    alg, F = _prepare(base, p, law)
    n = alg.dim
    if p ** (n * n) > budget:
        raise BudgetExceeded(f"{p}^{n * n} candidates exceed budget {budget}")
    check = LAW_FILTERS[law]
    res = SearchResult(F, alg, law)
    elems = list(F.elements())
    for flat in product(elems, repeat=n * n):  # row-major over D
        D = Matrix(F, [flat[r * n:(r + 1) * n] for r in range(n)], n)
        circ = circ_from_operator(alg, D)
        cand = alg.with_(circ=circ)
        if check(cand).passed:
            res.solutions.append(circ)
    res.solutions.sort(key=_key)
    if group:
        for circ in res.solutions:
            inv = invariants(alg.with_(circ=circ))
            res.buckets.setdefault(tuple(sorted(inv.items())), []).append(circ)
    return res


def enumerate_full(base: Algebra, p: int, budget: int = DEFAULT_BUDGET, law: str = "jnp") -> list:
    """Unreduced scan over all ``p^(n³)`` structure tensors."""
    alg, F = _prepare(base, p, law)
    n = alg.dim
    if p ** (n ** 3) > budget:
        raise BudgetExceeded(f"{p}^{n ** 3} candidates exceed budget {budget}")
    check = LAW_FILTERS[law]
    out = []
    for flat in product(list(F.elements()), repeat=n ** 3):
        t = [[flat[(i * n + j) * n:(i * n + j + 1) * n] for j in range(n)] for i in range(n)]
        circ = StructureTensor(F, n, t)
        if check(alg.with_(circ=circ)).passed:
            out.append(circ)
    return sorted(out, key=_key)


def cross_check_reduction(base: Algebra, p: int, budget: int = DEFAULT_BUDGET) -> bool:
    """The reduced and unreduced JNP scans find the same set of products."""
    full = {_key(c) for c in enumerate_full(base, p, budget)}
    reduced = {_key(c) for c in enumerate_jnp(base, p, budget, group=False).solutions}
    return full == reduced
