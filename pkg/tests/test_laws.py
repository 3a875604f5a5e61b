import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from builders import (
    a1, cat, d_dx, euler_derivation, j1, non_novikov, one_dim, transpose, truncated_poly, with_bracket, zero_circ,
)
from jnpa.algebra import make_algebra
from jnpa.catalog import corpus, emit
from jnpa.constructions import commutator_jacobi, from_derivation
from jnpa.errors import BudgetExceeded, CharacteristicError, InputError, MissingProduct, OrientationError
from jnpa.field import GF, QQ
from jnpa.laws import (
    LAW_CHECKERS, check_admissible_pair, check_derivation, check_dnp, check_jacobi, check_jnp, check_novikov,
    check_right_jnp, check_right_novikov, check_simple_novikov, check_transposed_poisson, check_unital_comm_assoc,
    reevaluate,
)
from jnpa.linalg import Matrix


# unital commutative associative

def test_a1_is_unital_comm_assoc():
    assert check_unital_comm_assoc(a1()).passed


def test_one_dim_unital():
    assert check_unital_comm_assoc(one_dim()).passed


def test_broken_unit_reports_witness():
    alg = make_algebra(QQ, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 1, 0, 1), (1, 0, 0, 1)], (1, 0))
    from jnpa.laws import first_failure
    assert not check_unital_comm_assoc(alg).passed
    cx = first_failure(alg, "dot-left-unit")
    assert cx.indices == (1,)
    assert cx.lhs == (1, 1) and cx.rhs == (0, 1)


# Novikov

def test_zero_circ_is_novikov():
    assert check_novikov(zero_circ(a1())).passed


@pytest.mark.parametrize("k1,k2", [(1, 5), (0, 0), (-2, 3)])
def test_j1_is_novikov(k1, k2):
    assert check_novikov(j1(k1, k2)).passed


def test_non_novikov_example():
    v = check_novikov(non_novikov())
    assert not v.passed
    # left-symmetry is scanned first; it already fails at (e1, e2, e1)
    assert v.counterexample.identity == "novikov-left-symmetric"
    assert v.counterexample.indices == (0, 1, 0)


def test_non_novikov_is_right_commutative():
    # all products (x∘y)∘z vanish except when they are symmetric in y, z
    from jnpa.laws import first_failure
    assert first_failure(non_novikov(), "novikov-right-commutative") is None


def test_orientation_mismatch():
    with pytest.raises(OrientationError):
        check_novikov(transpose(j1()))
    with pytest.raises(OrientationError):
        check_right_novikov(j1())
    with pytest.raises(OrientationError):
        check_jnp(transpose(j1()))


def test_right_novikov_examples():
    assert check_right_novikov(transpose(zero_circ(a1()))).passed
    assert check_right_novikov(transpose(j1(1, 0))).passed
    v = check_right_novikov(transpose(non_novikov()))
    assert not v.passed and v.counterexample.opposite


# DNP

def test_dnp_euler_derivation():
    alg = truncated_poly(3)
    out = from_derivation(alg, euler_derivation(3)).algebra
    assert check_dnp(out).passed


def test_dnp_derivative_prime_field():
    F = GF(5)
    alg = truncated_poly(5, F)
    assert check_derivation(alg, "dot", d_dx(5, F)).passed
    assert check_dnp(from_derivation(alg, d_dx(5, F)).algebra).passed


def test_d_dx_not_a_derivation_of_truncated_rationals():
    # x * x^2 = 0 but d/dx would need 3x^2 = 0
    v = check_derivation(truncated_poly(3), "dot", d_dx(3, QQ))
    assert not v.passed


def test_dnp_zero_circ():
    assert check_dnp(zero_circ(a1())).passed


def test_j3_fails_dnp():
    v = check_dnp(cat("2d-J3", k1=1, k2=0))
    assert not v.passed
    assert v.counterexample.identity == "circ-derivation-of-dot"
    assert v.counterexample.indices == (0, 0, 0)


# JNP

def test_jnp_examples():
    assert check_jnp(j1(1, 0)).passed
    assert check_jnp(zero_circ(cat("3d-D1"))).passed
    assert check_jnp(cat("3d-J5", k1=1, k2=2, k3=3)).passed


def test_jnp_needs_circ():
    with pytest.raises(MissingProduct):
        check_jnp(a1())


def test_right_jnp_examples():
    assert check_right_jnp(transpose(j1(1, 0))).passed
    assert check_right_jnp(transpose(zero_circ(a1()))).passed
    assert check_right_jnp(emit("final-frobenius-pair").partner).passed


# Jacobi, Lie, transposed Poisson

def test_jacobi_zero_bracket():
    assert check_jacobi(with_bracket(a1(), [])).passed


def test_jacobi_commutator():
    assert check_jacobi(commutator_jacobi(j1(1, 0)).algebra).passed


def test_jacobi_needs_bracket():
    with pytest.raises(MissingProduct):
        check_jacobi(a1())


def test_transposed_poisson():
    assert check_transposed_poisson(with_bracket(a1(), [])).passed
    assert check_transposed_poisson(commutator_jacobi(j1(1, 0)).algebra).passed
    alg = with_bracket(a1(), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
    v = check_transposed_poisson(alg)
    assert not v.passed and v.counterexample.identity.startswith("bracket-")


def test_transposed_poisson_rejects_char_2():
    with pytest.raises(CharacteristicError):
        check_transposed_poisson(with_bracket(a1(GF(2)), []))


# derivations and admissible pairs

def test_derivation_examples():
    alg = a1()
    assert check_derivation(alg, "dot", Matrix.zeros(QQ, 2)).passed
    assert check_derivation(alg, "dot", Matrix(QQ, [[0, 0], [0, 1]])).passed
    v = check_derivation(alg, "dot", Matrix.identity(QQ, 2))
    assert not v.passed and v.counterexample.indices == (0, 0)
    assert v.counterexample.lhs == (1, 0) and v.counterexample.rhs == (2, 0)


def test_admissible_pair_examples():
    Z = Matrix.zeros(QQ, 2)
    assert check_admissible_pair(a1(), Z, Z).passed
    inst = emit("4d-diff-frobenius")
    assert check_admissible_pair(inst.algebra, inst.maps["P"], inst.maps["Phat"]).passed
    Q = Matrix(QQ, [[1, 1], [0, 0]])  # Q(e1) = e1, Q(e2) = e1
    v = check_admissible_pair(a1(), Z, Q)
    assert not v.passed


# simplicity

def test_simple_char3():
    alg = cat("char3-simple", GF(3), k1=1, k2=0, k3=0, a=0, b=0)
    assert check_simple_novikov(alg).passed


def test_simple_zero_circ_fails():
    assert not check_simple_novikov(zero_circ(a1(GF(3)))).passed


def test_simple_j1_has_ideal():
    v = check_simple_novikov(j1(1, 0, GF(5)))
    assert not v.passed
    assert v.counterexample.lhs == (0, 1)  # span{e2}


def test_simple_rejects_rationals_and_budget():
    with pytest.raises(InputError):
        check_simple_novikov(j1())
    with pytest.raises(BudgetExceeded):
        check_simple_novikov(j1(1, 0, GF(5)), budget=3)


# cross-law properties

def test_registry_has_every_law():
    for name in ("jnp", "right-jnp", "novikov", "right-novikov", "dnp", "jacobi", "lie", "unital-comm-assoc",
                 "transposed-poisson", "simple-novikov"):
        assert name in LAW_CHECKERS


def test_jnp_implies_sublaws_and_reduction():
    for _, alg in corpus():
        assert check_jnp(alg).passed
        assert check_novikov(alg).passed and check_unital_comm_assoc(alg).passed
        for i in range(alg.dim):
            for j in range(alg.dim):
                a, b = alg.e(i), alg.e(j)
                assert alg.c(a, b) == alg.d(a, alg.c(alg.unit, b))


def test_unital_dnp_is_jnp():
    for _, alg in corpus():
        if check_dnp(alg).passed:
            assert all(not any(alg.c(alg.e(i), alg.unit)) for i in range(alg.dim))


def _random_tensor_alg(rng, n=2):
    entries = [(i, j, k, rng.randint(-1, 1)) for i in range(n) for j in range(n) for k in range(n)]
    return a1(QQ, entries)


@given(st.integers(0, 10_000))
def test_counterexamples_reevaluate(seed):
    rng = random.Random(seed)
    alg = _random_tensor_alg(rng)
    for chk in (check_jnp, check_novikov, check_dnp):
        v = chk(alg)
        if not v.passed:
            lhs, rhs = reevaluate(alg, v.counterexample)
            assert lhs != rhs
            assert tuple(lhs) == v.counterexample.lhs


@given(st.integers(0, 10_000))
def test_basis_check_implies_random_vectors(seed):
    rng = random.Random(seed)
    name, alg = rng.choice(corpus())
    a, b, c = ([Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(alg.dim)] for _ in range(3))
    ab = alg.d(a, b)
    # JNPA1 and NA2 on arbitrary vectors
    assert alg.c(ab, c) == alg.d(a, alg.c(b, c))
    assert alg.c(alg.c(a, b), c) == alg.c(alg.c(a, c), b)


def test_verdict_json_shape():
    v = check_novikov(non_novikov())
    d = v.to_dict(QQ)
    assert d["law"] == "novikov" and d["pass"] is False
    assert set(d["counterexample"]) >= {"indices", "lhs", "rhs"}
    assert check_jnp(j1()).to_dict(QQ) == {"law": "jacobi-novikov-poisson", "pass": True}
