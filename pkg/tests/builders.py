"""Small algebras shared by several test modules."""
from fractions import Fraction

from jnpa.algebra import LEFT, RIGHT, Algebra, StructureTensor, make_algebra
from jnpa.catalog import emit
from jnpa.field import QQ
from jnpa.linalg import Matrix

A1_DOT = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]
A2_DOT = A1_DOT + [(1, 1, 1, 1)]


def cat(name, field=QQ, **values):
    return emit(name, values, field).algebra


def j1(k1=1, k2=0, field=QQ):
    return cat("2d-J1", field, k1=k1, k2=k2)


def a1(field=QQ, circ=None, **kw):
    return make_algebra(field, 2, A1_DOT, (1, 0), circ, **kw)


def non_novikov(field=QQ):
    """e1∘e1 = e2, e2∘e1 = e1 on the dot of type A1."""
    return a1(field, [(0, 0, 1, 1), (1, 0, 0, 1)])


def zero_circ(alg):
    return alg.with_(circ=StructureTensor.zero(alg.field, alg.dim), orientation=LEFT)


def transpose(alg):
    return alg.with_(circ=alg.tensor("circ").transpose(), orientation=RIGHT)


def truncated_poly(N, field=QQ):
    """k[x]/(x^N) with basis 1, x, ..., x^(N-1)."""
    return make_algebra(field, N, [(i, j, i + j, 1) for i in range(N) for j in range(N) if i + j < N],
                        [1] + [0] * (N - 1))


def euler_derivation(N, field=QQ):
    return Matrix(field, [[i if i == j else 0 for j in range(N)] for i in range(N)])


def d_dx(N, field):
    return Matrix(field, [[j if i == j - 1 else 0 for j in range(N)] for i in range(N)])


def one_dim(field=QQ, lam=None):
    circ = None if lam is None else [(0, 0, 0, lam)]
    return make_algebra(field, 1, [(0, 0, 0, 1)], (1,), circ)


def with_bracket(alg, entries):
    return alg.with_(bracket=StructureTensor.from_entries(alg.field, alg.dim, entries))


HALF = Fraction(1, 2)
__all__ = ["Algebra", "HALF"]
