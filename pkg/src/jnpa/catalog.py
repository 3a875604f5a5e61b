"""Executable classification tables and worked examples.

Each :class:`CatalogEntry` is a parametric family.  ``emit(name, values, field)``
validates the assignment against the entry's constraints and returns a
:class:`CatalogInstance`.  Basis indices are 0-based in code; the tables
below are written with 1-based labels ``e1, e2, ...`` and converted, with
``e1`` the unit in all 2- and 3-dimensional rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Mapping, Sequence

from .algebra import LEFT, RIGHT, Algebra, StructureTensor
from .errors import CharacteristicError, ConstraintViolation, FieldMismatch, InputError
from .field import QQ, Field
from .linalg import Matrix, kernel_basis, rank


# binomial coefficients modulo p

def binom_mod(n: int, k: int, p: int) -> int:
    """``C(n, k) mod p`` via Lucas' theorem; zero when ``k < 0`` or ``k > n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        num = den = 1
        for t in range(kd):
            num = num * (nd - t) % p
            den = den * (t + 1) % p
        out = out * num * pow(den, -1, p) % p
        n //= p
        k //= p
    return out


# building blocks

def _table(F: Field, n: int, spec: Mapping[tuple[int, int], Mapping[int, Any]]) -> StructureTensor:
    """Tensor from ``{(i, j): {k: coeff}}`` with 1-based labels."""
    entries = [(i - 1, j - 1, k - 1, F(c)) for (i, j), terms in spec.items() for k, c in terms.items()]
    return StructureTensor.from_entries(F, n, entries)


def _unit_first(F: Field, n: int) -> tuple:
    return tuple(F.one if i == 0 else F.zero for i in range(n))


def _sym(spec: dict) -> dict:
    """Add the mirror of every off-diagonal product (for commutative tables)."""
    out = dict(spec)
    for (i, j), v in spec.items():
        out.setdefault((j, i), v)
    return out


def _unital(n: int, extra: dict) -> dict:
    """e1 is the unit; ``extra`` lists the remaining products among e2..en."""
    spec = {(1, j): {j: 1} for j in range(1, n + 1)}
    spec.update(extra)
    return _sym(spec)


DOT_2D = {
    "A1": _unital(2, {}),
    "A2": _unital(2, {(2, 2): {2: 1}}),
}

DOT_3D = {
    "D1": _unital(3, {(2, 2): {3: 1}}),
    "D2": _unital(3, {(2, 2): {2: 1}}),
    "D3": _unital(3, {(2, 2): {2: 1}, (3, 3): {3: 1}}),
    "D4": _unital(3, {}),
}


@dataclass(frozen=True)
class CatalogInstance:
    algebra: Algebra
    form: Matrix | None = None
    maps: Mapping[str, Matrix] = dc_field(default_factory=dict)
    partner: Algebra | None = None
    partner_form: Matrix | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: str
    dim: int | None
    params: tuple
    law: str
    build: Callable[[Field, dict], CatalogInstance]
    constraints: tuple = ()
    field_requirement: tuple | None = None  # (description, predicate on Field)
    int_params: tuple = ()
    description: str = ""

    def summary(self) -> dict:
        d = {"name": self.name, "group": self.group, "dim": self.dim, "law": self.law,
             "params": list(self.int_params) + list(self.params),
             "constraints": [c[0] for c in self.constraints]}
        if self.field_requirement:
            d["field"] = self.field_requirement[0]
        if self.description:
            d["description"] = self.description
        return d


REGISTRY: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    if entry.name in REGISTRY:
        raise RuntimeError(f"duplicate catalog entry {entry.name}")
    REGISTRY[entry.name] = entry


def _jnp_instance(F, n, dot, circ, **kw) -> CatalogInstance:
    alg = Algebra(F, n, _table(F, n, dot), _unit_first(F, n), _table(F, n, circ), LEFT)
    return CatalogInstance(alg, **kw)


# field requirements

def _char_not(*ps):
    return (f"characteristic not in {{{', '.join(map(str, ps))}}}", lambda F: F.characteristic not in ps)


_CHAR3 = ("characteristic 3", lambda F: F.characteristic == 3)
_PRIME_ODD = ("prime field of odd characteristic", lambda F: F.is_finite and F.p > 2)
_PRIME = ("prime field", lambda F: F.is_finite)


def _nz(*names):
    return tuple((f"{nm} != 0", (lambda v, nm=nm: v[nm] != 0)) for nm in names)


# two-dimensional table

def _circ_2d(t: str, k1, k2) -> dict:
    if t == "J1":
        return {(1, 1): {1: k1}, (1, 2): {2: k2}, (2, 1): {2: k1}}
    if t == "J2":
        return {(1, 1): {1: k1, 2: 1}, (1, 2): {2: k2}, (2, 1): {2: k1}}
    s = k1 + k2
    return {(1, 1): {1: k1, 2: k2}, (1, 2): {2: s}, (2, 1): {2: s}, (2, 2): {2: s}}


_DOT_OF_2D = {"J1": "A1", "J2": "A1", "J3": "A2"}

for _t in ("J1", "J2", "J3"):
    _register(CatalogEntry(
        f"2d-{_t}", "2d", 2, ("k1", "k2"), "jnp",
        (lambda F, v, t=_t: _jnp_instance(F, 2, DOT_2D[_DOT_OF_2D[t]], _circ_2d(t, v["k1"], v["k2"]))),
        description=f"two-dimensional type {_t} over dot {_DOT_OF_2D[_t]}"))

for _d in ("A1", "A2"):
    _register(CatalogEntry(
        f"2d-{_d}", "2d-dot", 2, (), "unital-comm-assoc",
        (lambda F, v, d=_d: CatalogInstance(Algebra(F, 2, _table(F, 2, DOT_2D[d]), _unit_first(F, 2)))),
        description="two-dimensional unital commutative associative algebra"))


# three-dimensional table

def _circ_3d(t: int, k1, k2, k3) -> tuple[str, dict]:
    if 1 <= t <= 4:
        c = {(1, 1): {1: k1}, (1, 2): {2: k2, 3: k3}, (1, 3): {3: 2 * k2 - k1},
             (2, 1): {2: k1}, (2, 2): {3: k2}, (3, 1): {3: k1}}
        if t == 2:
            c[1, 1] = {1: k1, 3: 1}
        elif t == 3:
            c[1, 1] = {1: k1, 2: 1, 3: 1}
            c[2, 1] = {2: k1, 3: 1}
        elif t == 4:
            c[1, 1] = {1: k1, 2: 1}
            c[2, 1] = {2: k1, 3: 1}
        return "D1", c
    if t in (5, 6):
        s = k1 + k2
        c = {(1, 1): {1: k1, 2: k2}, (1, 2): {2: s}, (1, 3): {3: k3},
             (2, 1): {2: s}, (2, 2): {2: s}, (3, 1): {3: k1}}
        if t == 5:
            c[1, 1] = {1: k1, 2: k2, 3: 1}
        return "D2", c
    if t == 7:
        s, r = k1 + k2, k1 + k3
        c = {(1, 1): {1: k1, 2: k2, 3: k3}, (1, 2): {2: s}, (1, 3): {3: r},
             (2, 1): {2: s}, (2, 2): {2: s}, (3, 1): {3: r}, (3, 3): {3: r}}
        return "D3", c
    # types 8..23 share the dot D4 and the last two rows
    kk = {2: k2, 3: k3}
    e2, e3, e23, zero = {2: 1}, {3: 1}, {2: 1, 3: 1}, {}
    first = {
        8: ({1: k1, 2: 1}, e3, kk), 9: ({1: k1, 2: 1}, e23, kk),
        10: ({1: k1, 3: 1}, kk, e2), 11: ({1: k1, 3: 1}, kk, e23),
        12: ({1: k1, 2: 1}, e2, kk), 13: ({1: k1, 2: 1}, zero, kk),
        14: ({1: k1, 3: 1}, kk, e3), 15: ({1: k1, 3: 1}, kk, zero),
        16: ({1: k1, 2: 1, 3: 1}, e23, kk), 17: ({1: k1, 2: 1, 3: 1}, e3, kk),
        18: ({1: k1, 2: 1, 3: 1}, e2, kk), 19: ({1: k1, 2: 1, 3: 1}, zero, kk),
        20: ({1: k1}, kk, e3), 21: ({1: k1}, kk, e2), 22: ({1: k1}, kk, zero), 23: ({1: k1}, kk, e23),
    }[t]
    c = {(1, 1): first[0], (1, 2): first[1], (1, 3): first[2], (2, 1): {2: k1}, (3, 1): {3: k1}}
    return "D4", c


for _t in range(1, 24):
    _register(CatalogEntry(
        f"3d-J{_t}", "3d", 3, ("k1", "k2", "k3"), "jnp",
        (lambda F, v, t=_t: _jnp_instance(F, 3, DOT_3D[_circ_3d(t, v["k1"], v["k2"], v["k3"])[0]],
                                          _circ_3d(t, v["k1"], v["k2"], v["k3"])[1])),
        description=f"three-dimensional type J{_t} over dot {_circ_3d(_t, 0, 0, 0)[0]}"))

for _d in DOT_3D:
    _register(CatalogEntry(
        f"3d-{_d}", "3d-dot", 3, (), "unital-comm-assoc",
        (lambda F, v, d=_d: CatalogInstance(Algebra(F, 3, _table(F, 3, DOT_3D[d]), _unit_first(F, 3)))),
        description="three-dimensional unital commutative associative algebra"))


# prime characteristic: simple second product

def _char3_simple(F: Field, v: dict) -> CatalogInstance:
    k1, k2, k3, a, b = (v[x] for x in ("k1", "k2", "k3", "a", "b"))
    # basis y_{-1}, y_0, y_1 stored at indices 0, 1, 2
    Y = lambda i: i + 1  # noqa: E731
    dot = {}

    def put(i, j, terms):
        dot[i, j] = terms
        dot[j, i] = terms

    put(-1, -1, {-1: k1, 0: k2, 1: k3})
    put(-1, 0, {0: k1, 1: -k2})
    put(-1, 1, {1: k1})
    put(0, 0, {1: -k1})
    n = 3
    dot_entries = [(Y(i), Y(j), Y(k), c) for (i, j), t in dot.items() for k, c in t.items()]
    circ_entries = _simple_circ_entries(F, 1, a, b)
    inv = 1 / k1
    unit = (inv, -inv * inv * k2, -(inv * inv * k3 + inv ** 3 * k2 * k2))
    alg = Algebra(F, n, StructureTensor.from_entries(F, n, [(i, j, k, F(c)) for i, j, k, c in dot_entries]),
                  unit, StructureTensor.from_entries(F, n, circ_entries), LEFT)
    return CatalogInstance(alg)


def _y_index(i: int, top: int) -> int | None:
    return i + 1 if -1 <= i <= top else None


def _simple_circ_entries(F: Field, nexp: int, a, b) -> list:
    p = F.p
    top = p ** nexp - 2
    out = []
    for i in range(-1, top + 1):
        for j in range(-1, top + 1):
            c = binom_mod(i + j + 1, j, p)
            tgt = _y_index(i + j, top)
            if c:
                if tgt is None:
                    raise AssertionError(f"nonvanishing coefficient C({i + j + 1},{j}) outside the basis")
                out.append((i + 1, j + 1, tgt, F(c)))
    out.append((0, 0, top + 1, F(a)))
    out.append((0, 1, top + 1, F(b)))
    return out


def _charp_simple(F: Field, v: dict) -> CatalogInstance:
    nexp = v["n"]
    p = F.p
    top = p ** nexp - 2
    dim = top + 2
    dot = []
    for i in range(-1, top + 1):
        for j in range(-1, top + 1):
            c = binom_mod(i + j + 2, j + 1, p)
            tgt = _y_index(i + j + 1, top)
            if c:
                if tgt is None:
                    raise AssertionError(f"nonvanishing coefficient C({i + j + 2},{j + 1}) outside the basis")
                dot.append((i + 1, j + 1, tgt, F(c)))
    circ = _simple_circ_entries(F, nexp, v["a"], v["b"])
    alg = Algebra(F, dim, StructureTensor.from_entries(F, dim, dot), _unit_first(F, dim),
                  StructureTensor.from_entries(F, dim, circ), LEFT)
    return CatalogInstance(alg)


_register(CatalogEntry("char3-simple", "prime", 3, ("k1", "k2", "k3", "a", "b"), "jnp+simple",
                       _char3_simple, _nz("k1"), _CHAR3,
                       description="three-dimensional family with simple second product (basis y_-1, y_0, y_1)"))
_register(CatalogEntry("charp-simple", "prime", None, ("a", "b"), "jnp+simple", _charp_simple,
                       (("n >= 1", lambda v: v["n"] >= 1),), _PRIME_ODD, int_params=("n",),
                       description="p^n-dimensional example with simple second product (basis y_-1 .. y_{p^n-2})"))


# truncated polynomial rings with a derivation

def _poly_dot(F: Field, N: int) -> StructureTensor:
    return StructureTensor.from_entries(F, N, [(i, j, i + j, 1) for i in range(N) for j in range(N) if i + j < N])


def _poly_euler(F: Field, v: dict) -> CatalogInstance:
    N = v["N"]
    dot = _poly_dot(F, N)
    P = Matrix(F, [[i if i == j else 0 for j in range(N)] for i in range(N)], N)  # x d/dx
    circ = StructureTensor.from_function(F, N, lambda i, j: dot.mul(dot.t[0][i], P.col(j)))
    alg = Algebra(F, N, dot, _unit_first(F, N), circ, LEFT, maps={"P": P})
    return CatalogInstance(alg, maps={"P": P})


def _poly_derivative(F: Field, v: dict) -> CatalogInstance:
    N = F.p
    dot = _poly_dot(F, N)
    P = Matrix(F, [[j if i == j - 1 else 0 for j in range(N)] for i in range(N)], N)  # d/dx
    circ = StructureTensor.from_function(F, N, lambda i, j: dot.mul(dot.t[0][i], P.col(j)))
    alg = Algebra(F, N, dot, _unit_first(F, N), circ, LEFT, maps={"P": P})
    return CatalogInstance(alg, maps={"P": P})


_register(CatalogEntry("poly-euler", "example", None, (), "dnp", _poly_euler,
                       (("N >= 1", lambda v: v["N"] >= 1),), int_params=("N",),
                       description="k[x]/(x^N) with a∘b = a·x d/dx(b)"))
_register(CatalogEntry("poly-derivative", "example", None, (), "dnp", _poly_derivative, (), _PRIME,
                       description="F_p[x]/(x^p) with a∘b = a·d/dx(b)"))


def _kantor_example(F: Field, v: dict) -> CatalogInstance:
    dot = _unital(3, {(2, 2): {2: 1}})
    circ = {(1, 1): {3: 1}, (1, 3): {3: -1}}
    return _jnp_instance(F, 3, dot, circ)


_register(CatalogEntry("kantor-example", "example", 3, (), "jnp", _kantor_example,
                       description="three-dimensional algebra used to illustrate the Kantor deformation"))


# four-dimensional differential Frobenius example

_DF_DOT = _unital(4, {(2, 2): {3: 1}, (2, 3): {4: 1}})
_DF_FORM = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
_H = Fraction(1, 2)


def _df_maps(F: Field) -> dict:
    P = Matrix.from_columns(F, [(0, 0, 0, 0), (0, Fraction(1, 3), _H, 1), (0, 0, Fraction(2, 3), 1), (0, 0, 0, 1)], 4)
    Phat = Matrix.from_columns(F, [(1, 1, 1, 0), (0, Fraction(2, 3), _H, 0), (0, 0, Fraction(1, 3), 0), (0, 0, 0, 0)],
                               4)
    return {"P": P, "Phat": Phat}


_DF_CIRC = {
    (1, 1): {1: -_H, 2: -_H, 3: -_H}, (1, 2): {3: Fraction(1, 4), 4: 1}, (1, 3): {3: _H, 4: 1}, (1, 4): {4: 1},
    (2, 1): {2: -_H, 3: -_H, 4: -_H}, (2, 2): {4: Fraction(1, 4)}, (2, 3): {4: _H},
    (3, 1): {3: -_H, 4: -_H}, (4, 1): {4: -_H},
}


def _diff_frobenius(F: Field, v: dict) -> CatalogInstance:
    maps = _df_maps(F)
    G = Matrix(F, _DF_FORM, 4)
    alg = Algebra(F, 4, _table(F, 4, _DF_DOT), _unit_first(F, 4), form=G, maps={"P": maps["P"]})
    return CatalogInstance(alg, G, maps)


def _diff_frobenius_quadratic(F: Field, v: dict) -> CatalogInstance:
    maps = _df_maps(F)
    G = Matrix(F, _DF_FORM, 4)
    inst = _jnp_instance(F, 4, _DF_DOT, _DF_CIRC)
    return CatalogInstance(inst.algebra.with_(form=G), G, maps)


_register(CatalogEntry("4d-diff-frobenius", "example", 4, (), "differential-frobenius", _diff_frobenius, (),
                       _char_not(2, 3),
                       description="unital commutative differential Frobenius algebra: dot, derivation P, form"))
_register(CatalogEntry("4d-diff-frobenius-table", "example", 4, (), "quadratic", _diff_frobenius_quadratic, (),
                       _char_not(2, 3), description="the tabulated second product at q = -1/2, with its form"))


# closing example: quadratic JNP and quadratic right JNP on the same dot and form

def _final_pair(F: Field, v: dict) -> CatalogInstance:
    G = Matrix(F, [[0, 1], [1, 0]], 2)
    A = _jnp_instance(F, 2, DOT_2D["A1"], {(1, 1): {1: 1}, (1, 2): {2: -2}, (2, 1): {2: 1}}).algebra
    B = Algebra(F, 2, _table(F, 2, DOT_2D["A1"]), _unit_first(F, 2),
                _table(F, 2, {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: -2}}), RIGHT)
    return CatalogInstance(A.with_(form=G), G, {}, B.with_(form=G), G)


_register(CatalogEntry("final-frobenius-pair", "example", 2, (), "frobenius-jacobi", _final_pair,
                       description="quadratic JNP algebra A with a quadratic right JNP partner B"))


# quadratic tables

def _quad(base: str, kfix: Callable[[dict], tuple], G: Callable[[dict], list]):
    def build(F: Field, v: dict) -> CatalogInstance:
        ks = kfix(v)
        n = 2 if base.startswith("2d") else 3
        names = ("k1", "k2", "k3")[:len(ks)]
        alg = REGISTRY[base].build(F, dict(zip(names, (F(k) for k in ks))))
        M = Matrix(F, G(v), n)
        return CatalogInstance(alg.algebra.with_(form=M), M)
    return build


def _quad_entry(name, base, params, kfix, G, constraints=(), field_req=None):
    _register(CatalogEntry(name, "quadratic", 2 if base.startswith("2d") else 3, params, "quadratic",
                           _quad(base, kfix, G), tuple(constraints), field_req,
                           description=f"invariant nondegenerate form on {base}"))


_quad_entry("quad-2d-J1-k0", "2d-J1", ("g11", "g12"), lambda v: (0, 0),
            lambda v: [[v["g11"], v["g12"]], [v["g12"], 0]], _nz("g12"))
_quad_entry("quad-2d-J1-k1", "2d-J1", ("k1", "g12"), lambda v: (v["k1"], -2 * v["k1"]),
            lambda v: [[0, v["g12"]], [v["g12"], 0]], _nz("k1", "g12"))
_quad_entry("quad-2d-J2-k1", "2d-J2", ("k1", "g12"), lambda v: (v["k1"], -2 * v["k1"]),
            lambda v: [[-v["g12"] / v["k1"], v["g12"]], [v["g12"], 0]], _nz("k1", "g12"))
_quad_entry("quad-2d-J3-k0", "2d-J3", ("g11", "g12"), lambda v: (0, 0),
            lambda v: [[v["g11"], v["g12"]], [v["g12"], v["g12"]]],
            _nz("g12") + (("g11 != g12", lambda v: v["g11"] != v["g12"]),))


def _q3_J12_k1(v, top):
    k1, k3, g = v["k1"], v["k3"], v["g13"]
    off = -2 * k3 * g / (3 * k1)
    return [[top, off, g], [off, g, 0], [g, 0, 0]]


def _q3_J34_k1(v, top_num):
    k1, k3, g = v["k1"], v["k3"], v["g13"]
    off = -(2 * k3 + 4) * g / (3 * k1)
    top = top_num(k1, k3) * g / (3 * k1 * k1)
    return [[top, off, g], [off, g, 0], [g, 0, 0]]


_half = Fraction(1, 2)
_no3 = _char_not(2, 3)

_quad_entry("quad-3d-J1-k0", "3d-J1", ("g11", "g12", "g13"), lambda v: (0, 0, 0),
            lambda v: [[v["g11"], v["g12"], v["g13"]], [v["g12"], v["g13"], 0], [v["g13"], 0, 0]], _nz("g13"))
_quad_entry("quad-3d-J1-k1", "3d-J1", ("k1", "k3", "g13"), lambda v: (v["k1"], -v["k1"] * _half, v["k3"]),
            lambda v: _q3_J12_k1(v, 0), _nz("k1", "g13"), _no3)
_quad_entry("quad-3d-J2-k1", "3d-J2", ("k1", "k3", "g13"), lambda v: (v["k1"], -v["k1"] * _half, v["k3"]),
            lambda v: _q3_J12_k1(v, -v["g13"] / v["k1"]), _nz("k1", "g13"), _no3)
_quad_entry("quad-3d-J3-k0", "3d-J3", ("g11", "g13"), lambda v: (0, 0, -2),
            lambda v: [[v["g11"], -v["g13"], v["g13"]], [-v["g13"], v["g13"], 0], [v["g13"], 0, 0]], _nz("g13"))
_quad_entry("quad-3d-J3-k1", "3d-J3", ("k1", "k3", "g13"), lambda v: (v["k1"], -v["k1"] * _half, v["k3"]),
            lambda v: _q3_J34_k1(v, lambda k1, k3: -3 * k1 + 2 * k3 + 4), _nz("k1", "g13"), _no3)
_quad_entry("quad-3d-J4-k0", "3d-J4", ("g11", "g13"), lambda v: (0, 0, -2),
            lambda v: [[v["g11"], 0, v["g13"]], [0, v["g13"], 0], [v["g13"], 0, 0]], _nz("g13"))
_quad_entry("quad-3d-J4-k1", "3d-J4", ("k1", "k3", "g13"), lambda v: (v["k1"], -v["k1"] * _half, v["k3"]),
            lambda v: _q3_J34_k1(v, lambda k1, k3: 2 * k3 + 4), _nz("k1", "g13"), _no3)
_quad_entry("quad-3d-J5-k1", "3d-J5", ("k1", "g12", "g13"), lambda v: (v["k1"], -v["k1"], -2 * v["k1"]),
            lambda v: [[v["g12"] - v["g13"] / v["k1"], v["g12"], v["g13"]], [v["g12"], v["g12"], 0],
                       [v["g13"], 0, 0]], _nz("k1", "g12", "g13"))
_quad_entry("quad-3d-J6-k0", "3d-J6", ("g11", "g12", "g13"), lambda v: (0, 0, 0),
            lambda v: [[v["g11"], v["g12"], v["g13"]], [v["g12"], v["g12"], 0], [v["g13"], 0, 0]],
            _nz("g12", "g13"))
_quad_entry("quad-3d-J6-k1", "3d-J6", ("k1", "g12", "g13"), lambda v: (v["k1"], -v["k1"], -2 * v["k1"]),
            lambda v: [[v["g12"], v["g12"], v["g13"]], [v["g12"], v["g12"], 0], [v["g13"], 0, 0]],
            _nz("k1", "g12", "g13"))
_quad_entry("quad-3d-J7-k0", "3d-J7", ("g11", "g12", "g13"), lambda v: (0, 0, 0),
            lambda v: [[v["g11"], v["g12"], v["g13"]], [v["g12"], v["g12"], 0], [v["g13"], 0, v["g13"]]],
            _nz("g12", "g13") + (("g11 != g12 + g13", lambda v: v["g11"] != v["g12"] + v["g13"]),))


# public interface

def list_entries() -> list[CatalogEntry]:
    return list(REGISTRY.values())


def get_entry(name: str) -> CatalogEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise InputError(f"unknown catalog entry {name!r}") from None


def emit(name: str, values: Mapping[str, Any] | None = None, field: Field = QQ) -> CatalogInstance:
    """Instantiate a catalog family; scalar values may be strings, ints or Fractions."""
    entry = get_entry(name)
    values = dict(values or {})
    if "p" in values:  # the characteristic may be given as a parameter
        p = int(values.pop("p"))
        if field.is_finite and field.p != p:
            raise FieldMismatch(f"{name}: p={p} conflicts with field {field}")
        field = Field(p)
    expected = set(entry.params) | set(entry.int_params)
    unknown = set(values) - expected
    if unknown:
        raise InputError(f"{name}: unknown parameter(s) {sorted(unknown)}; expected {sorted(expected)}")
    missing = expected - set(values)
    if missing:
        raise InputError(f"{name}: missing parameter(s) {sorted(missing)}")
    if entry.field_requirement and not entry.field_requirement[1](field):
        raise CharacteristicError(f"{name} requires {entry.field_requirement[0]}, got {field}")
    v: dict[str, Any] = {}
    for k in entry.int_params:
        try:
            v[k] = int(values[k])
        except (TypeError, ValueError):
            raise InputError(f"{name}: parameter {k} must be an integer") from None
    for k in entry.params:
        v[k] = field(values[k] if not isinstance(values[k], str) else field.parse(values[k]))
    for desc, pred in entry.constraints:
        if not pred(v):
            raise ConstraintViolation(f"{name}: constraint {desc} violated")
    return entry.build(field, v)


# sampling plans and verification

K_SAMPLES = (-1, 0, 1, 2)
G_SAMPLES = (-1, 1, 2)


def default_assignments(entry: CatalogEntry, field: Field = QQ) -> list[dict]:
    """All combinations of small sample values that satisfy the entry's constraints."""
    if entry.name == "char3-simple":
        pool = {k: list(range(3)) for k in entry.params}
    elif entry.name == "charp-simple":
        return [{"n": 1, "a": a, "b": b} for a, b in product((0, 1), repeat=2)]
    elif entry.name == "poly-euler":
        return [{"N": N} for N in (1, 2, 3, 4)]
    else:
        pool = {k: list(G_SAMPLES if k.startswith("g") else K_SAMPLES) for k in entry.params}
    out = []
    for combo in product(*(pool[k] for k in entry.params)):
        v = dict(zip(entry.params, combo))
        fv = {k: field(x) for k, x in v.items()}
        if all(pred(fv) for _, pred in entry.constraints):
            out.append(v)
    return out


def default_field(entry: CatalogEntry) -> Field:
    if entry.name == "char3-simple":
        return Field(3)
    if entry.field_requirement and not entry.field_requirement[1](QQ):
        return Field(5)
    return QQ


def check_instance(entry: CatalogEntry, inst: CatalogInstance) -> list:
    """Run every checker the entry's table asserts; returns the list of verdicts."""
    from .frobenius import _nondegenerate, check_quadratic, check_right_quadratic
    from .laws import _run, passing
    from .laws import check_derivation, check_dnp, check_jnp, check_simple_novikov, check_unital_comm_assoc
    alg = inst.algebra
    law = entry.law
    if law == "jnp":
        return [check_jnp(alg)]
    if law == "jnp+simple":
        return [check_jnp(alg), check_simple_novikov(alg)]
    if law == "dnp":
        return [check_jnp(alg), check_dnp(alg)]
    if law == "unital-comm-assoc":
        return [check_unital_comm_assoc(alg)]
    if law == "quadratic":
        return [check_quadratic(alg, inst.form)]
    if law == "differential-frobenius":
        v = _run("dot-frobenius", alg, ("form-symmetric", "form-dot-invariant"), G=inst.form)
        nd = _nondegenerate("dot-frobenius", inst.form)
        nd = passing("form-nondegenerate") if nd is None else nd
        return [check_unital_comm_assoc(alg), check_derivation(alg, "dot", inst.maps["P"]), v, nd]
    if law == "frobenius-jacobi":
        return [check_quadratic(alg, inst.form), check_right_quadratic(inst.partner, inst.partner_form)]
    raise InputError(f"no checker for law {law!r}")


@dataclass
class CatalogReport:
    rows: list = dc_field(default_factory=list)  # (entry, field, assignment, verdicts)

    @property
    def failures(self) -> list:
        return [r for r in self.rows if not all(v.passed for v in r[3])]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        fails = []
        for name, F, assign, verdicts in self.failures:
            bad = [v.to_dict(F) for v in verdicts if not v.passed]
            fails.append({"entry": name, "field": F.to_json(), "assignment": {k: str(x) for k, x in assign.items()},
                          "verdicts": bad})
        return {"instances": len(self.rows), "failures": fails, "pass": self.ok}


def verify_catalog(plan: Mapping[str, Any] | None = None, names: Sequence[str] | None = None) -> CatalogReport:
    """Emit and check every entry on a sampling plan.

    ``plan`` maps entry names to ``{"field": Field, "assignments": [...]}``;
    entries not mentioned use :func:`default_field` and :func:`default_assignments`.
    """
    plan = dict(plan or {})
    report = CatalogReport()
    for entry in list_entries():
        if names is not None and entry.name not in names:
            continue
        spec = plan.get(entry.name, {})
        F = spec.get("field") or default_field(entry)
        assigns = spec.get("assignments")
        if assigns is None:
            assigns = default_assignments(entry, F)
        for a in (assigns or [{}]):
            inst = emit(entry.name, a, F)
            report.rows.append((entry.name, F, a, check_instance(entry, inst)))
    return report


# corpus used by property tests and the acceptance suite

def corpus(field: Field = QQ) -> list[tuple[str, Algebra]]:
    """A fixed, varied list of JNP algebras over QQ (2- to 4-dimensional)."""
    out: list[tuple[str, Algebra]] = []

    def add(name, values=None):
        label = name + ("" if not values else "(" + ",".join(f"{k}={x}" for k, x in values.items()) + ")")
        out.append((label, emit(name, values or {}, field).algebra))

    for t in ("J1", "J2", "J3"):
        add(f"2d-{t}", {"k1": 1, "k2": -2})
        add(f"2d-{t}", {"k1": 0, "k2": 0})
    add("2d-J1", {"k1": 1, "k2": 0})
    add("2d-J3", {"k1": 2, "k2": -1})
    for t in range(1, 24):
        add(f"3d-J{t}", {"k1": 1, "k2": 2, "k3": -1})
    add("3d-J1", {"k1": 2, "k2": -1, "k3": 3})
    add("3d-J5", {"k1": 1, "k2": -1, "k3": -2})
    add("3d-J7", {"k1": 0, "k2": 0, "k3": 0})
    add("kantor-example")
    add("poly-euler", {"N": 3})
    add("4d-diff-frobenius-table")
    out.append(("final-A", emit("final-frobenius-pair", {}, field).algebra))
    return out


def as_right(alg: Algebra) -> Algebra:
    """Right JNP algebra whose opposite product is the given JNP algebra."""
    return alg.with_(circ=alg.tensor("circ").transpose(), orientation=RIGHT)


def corpus_pairs(field: Field = QQ) -> list[tuple[str, Algebra, Algebra]]:
    """(JNP, right JNP) pairs: each corpus algebra with three fixed right partners."""
    final = emit("final-frobenius-pair", {}, field)
    partners = [("final-B", final.partner),
                ("opp-2d-J1(1,-2)", as_right(emit("2d-J1", {"k1": 1, "k2": -2}, field).algebra)),
                ("opp-2d-J3(1,1)", as_right(emit("2d-J3", {"k1": 1, "k2": 1}, field).algebra))]
    return [(f"{la} x {lb}", a, b) for la, a in corpus(field) for lb, b in partners]


# computable isomorphism invariants

def _dim_kernel(F, rows: list, n: int) -> int:
    if not rows:
        return n
    return len(kernel_basis(Matrix(F, rows, n)))


def _span_dim(F, n: int, vecs: list) -> int:
    return rank(Matrix.from_columns(F, vecs, n)) if vecs else 0


def _trace_form(alg: Algebra, ops: list) -> Matrix:
    def tr(M):
        return sum((M[i, i] for i in range(M.nrows)), alg.field.zero)
    return Matrix(alg.field, [[tr(X @ Y) for Y in ops] for X in ops], len(ops))


def _minpoly_degree(M: Matrix) -> int:
    """Dimension of ``span{I, M, M², ...}``."""
    F, n = M.field, M.nrows
    powers, P = [], Matrix.identity(F, n)
    while True:
        powers.append(sum(P.rows, ()))
        if _span_dim(F, n * n, powers) < len(powers):
            return len(powers) - 1
        P = P @ M


def invariants(alg: Algebra) -> dict:
    """Discrete isomorphism invariants, used to witness that two families differ."""
    from .algebra import left_mult_operator, right_mult_operator
    from .constructions import derivation_space
    from .frobenius import integral_space
    F, n = alg.field, alg.dim
    circ = alg.tensor("circ")
    E = [alg.e(i) for i in range(n)]
    Ld = [left_mult_operator(alg, "dot", x) for x in E]
    Lc = [left_mult_operator(alg, "circ", x) for x in E]
    Rc = [right_mult_operator(alg, "circ", x) for x in E]
    ann_dot = _dim_kernel(F, [list(r) for j in range(n) for r in right_mult_operator(alg, "dot", E[j]).rows], n)
    ann_circ = _dim_kernel(F, [list(r) for j in range(n) for M in (Rc[j], Lc[j]) for r in M.rows], n)
    sym = [tuple(x + y for x, y in zip(circ.t[i][j], circ.t[j][i])) for i in range(n) for j in range(n)]
    anti = [tuple(x - y for x, y in zip(circ.t[i][j], circ.t[j][i])) for i in range(n) for j in range(n)]
    # radical of the trace form of the commutative product (the nilradical in characteristic 0)
    rad = kernel_basis(_trace_form(alg, Ld))
    rad_vecs = [tuple(c for c in v) for v in rad]
    lin = lambda fam, v: sum((M.scale(c) for c, M in zip(v, fam) if c), Matrix.zeros(F, n))  # noqa: E731
    return {
        "dot-annihilator": ann_dot,
        "circ-annihilator": ann_circ,
        "symmetrized-rank": _span_dim(F, n, sym),
        "integral-space": len(integral_space(alg)),
        "commutator-rank": _span_dim(F, n, anti),
        "commutator-center": _dim_kernel(F, [list(r) for x in E for r in
                                             (left_mult_operator(alg, "circ", x) - right_mult_operator(alg, "circ", x)).rows], n),
        "circ-image": _span_dim(F, n, [circ.t[i][j] for i in range(n) for j in range(n)]),
        "derivations": len(derivation_space(alg, ("dot", "circ"))),
        "unit-left-rank": rank(left_mult_operator(alg, "circ", alg.unit)),
        "unit-right-rank": rank(right_mult_operator(alg, "circ", alg.unit)),
        "unit-left-minpoly": _minpoly_degree(left_mult_operator(alg, "circ", alg.unit)),
        "unit-right-minpoly": _minpoly_degree(right_mult_operator(alg, "circ", alg.unit)),
        "dot-trace-radical": len(rad),
        "dot-radical-square": _span_dim(F, n, [alg.d(x, y) for x in rad_vecs for y in rad_vecs]),
        "circ-left-trace-rank": rank(_trace_form(alg, Lc)),
        "circ-right-trace-rank": rank(_trace_form(alg, Rc)),
        "radical-circ-all": _span_dim(F, n, [alg.c(x, y) for x in rad_vecs for y in E]),
        "all-circ-radical": _span_dim(F, n, [alg.c(y, x) for x in rad_vecs for y in E]),
        "radical-circ-radical": _span_dim(F, n, [alg.c(x, y) for x in rad_vecs for y in rad_vecs]),
        "radical-left-minpoly": max((_minpoly_degree(lin(Lc, v)) for v in rad_vecs), default=0),
    }


GENERIC_VALUES = {"k1": 2, "k2": 3, "k3": 5}


def distinctness_witnesses(names: Sequence[str], values: Mapping[str, Any] | None = None,
                           field: Field = QQ) -> dict:
    """For each pair of families, the first invariant on which they differ (``None`` if none does)."""
    vals = dict(values or GENERIC_VALUES)
    inv = {}
    for nm in names:
        entry = get_entry(nm)
        inv[nm] = invariants(emit(nm, {k: vals[k] for k in entry.params}, field).algebra)
    out = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            out[a, b] = next((k for k in inv[a] if inv[a][k] != inv[b][k]), None)
    return out
