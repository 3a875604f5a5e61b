from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from builders import a1, cat, j1, one_dim, transpose, zero_circ
from jnpa.catalog import corpus, emit
from jnpa.errors import InputError, LawFailure, SingularMatrixError
from jnpa.field import GF, QQ
from jnpa.frobenius import (
    adjoint_operator, check_frobenius_jacobi, check_quadratic, check_right_quadratic,
    differential_frobenius_construct, form_to_integral, frobenius_jacobi_tensor, frobenius_pair,
    gram_of_functional, integral_space, integral_to_form, invariant_form_space, is_frobenius, is_integral,
    is_invariant_form, nondegenerate_integral, pair_conditions, tensor_form,
)
from jnpa.laws import check_jacobi
from jnpa.linalg import Matrix, rank

SWAP = Matrix(QQ, [[0, 1], [1, 0]])


def test_quadratic_2d_j1_with_swap_form():
    assert check_quadratic(j1(1, -2), SWAP).passed


def test_identity_form_is_not_invariant():
    v = check_quadratic(j1(1, -2), Matrix.identity(QQ, 2))
    assert not v.passed
    assert v.counterexample.identity == "form-dot-invariant"


def test_zero_form_is_degenerate():
    v = check_quadratic(j1(1, -2), Matrix.zeros(QQ, 2))
    assert not v.passed
    assert v.counterexample.identity == "form-nondegenerate"


def test_asymmetric_form_reported():
    v = check_quadratic(j1(1, -2), Matrix(QQ, [[0, 1], [0, 0]]))
    assert v.counterexample.identity == "form-symmetric"


def test_form_shape_checked():
    with pytest.raises(InputError):
        check_quadratic(j1(1, -2), Matrix.identity(QQ, 3))


def test_right_quadratic_through_opposite():
    B = emit("final-frobenius-pair", {}).partner
    assert check_right_quadratic(B, SWAP).passed
    assert not check_right_quadratic(B, Matrix.identity(QQ, 2)).passed


@pytest.mark.parametrize("k1,k2,size", [(1, -2, 1), (0, 0, 2), (1, 0, 0)])
def test_invariant_form_space_dimension(k1, k2, size):
    assert len(invariant_form_space(j1(k1, k2))) == size


def test_integral_space_zero_circ_is_everything():
    assert len(integral_space(zero_circ(a1()))) == 2


def test_integral_space_j1_kills_first_coordinate():
    ints = integral_space(j1(1, -2))
    assert len(ints) == 1
    assert ints[0][0] == 0 and ints[0][1] != 0


def test_integral_space_j3_at_origin():
    assert len(integral_space(cat("2d-J3", k1=0, k2=0))) == 2


def test_integral_to_form_and_back():
    alg = j1(1, -2)
    G = integral_to_form(alg, (0, 1))
    assert G == SWAP
    assert form_to_integral(alg, G) == (0, 1)


def test_integral_to_form_rejects_non_integral():
    with pytest.raises(InputError):
        integral_to_form(j1(1, -2), (1, 1))


def test_form_to_integral_rejects_non_invariant():
    with pytest.raises(InputError):
        form_to_integral(j1(1, -2), Matrix.identity(QQ, 2))


def test_is_frobenius_answers():
    yes = is_frobenius(j1(1, -2))
    assert yes and rank(yes.form) == 2 and is_integral(j1(1, -2), yes.integral)
    assert not is_frobenius(j1(1, 0))
    assert is_frobenius(zero_circ(a1()))


def test_nondegenerate_integral_agrees_with_is_frobenius():
    for _, alg in corpus()[:12]:
        assert (nondegenerate_integral(alg) is None) == (not is_frobenius(alg))


def test_frobenius_pair_j1():
    pair = frobenius_pair(j1(1, -2), (0, 1))
    assert pair.E == SWAP
    assert pair.omega == (0, 2)
    assert pair_conditions(j1(1, -2), pair).passed


def test_frobenius_pair_one_dimensional():
    alg = one_dim(QQ, 0)
    pair = frobenius_pair(alg, (3,))
    assert pair.E == Matrix(QQ, [[Fraction(1, 3)]])
    assert pair.omega == (Fraction(1, 3),)
    assert pair_conditions(alg, pair).passed


def test_frobenius_pair_degenerate_raises():
    with pytest.raises(SingularMatrixError):
        frobenius_pair(j1(1, -2), (1, 0), require_integral=False)


def test_frobenius_pair_requires_integral():
    with pytest.raises(InputError):
        frobenius_pair(j1(1, -2), (1, 1))
    assert pair_conditions(j1(1, -2), frobenius_pair(j1(1, -2), (1, 1), require_integral=False)).passed


def test_pair_serialises():
    d = frobenius_pair(j1(1, -2), (0, 1)).to_dict(QQ)
    assert d == {"v": ["0", "1"], "E": [["0", "1"], ["1", "0"]], "omega": ["0", "2"]}


def _df():
    return emit("4d-diff-frobenius", {})


def test_adjoint_operator_of_four_dimensional_example():
    inst = _df()
    Phat = adjoint_operator(inst.algebra, inst.maps["P"], inst.form)
    assert Phat == inst.maps["Phat"]
    assert Phat.col(0) == (1, 1, 1, 0)
    assert Phat.col(1) == (0, Fraction(2, 3), Fraction(1, 2), 0)
    assert Phat.col(2) == (0, 0, Fraction(1, 3), 0)
    assert Phat.col(3) == (0, 0, 0, 0)


def test_adjoint_of_zero_is_zero():
    inst = _df()
    assert adjoint_operator(inst.algebra, Matrix.zeros(QQ, 4), inst.form) == Matrix.zeros(QQ, 4)


def test_adjoint_of_self_adjoint_operator():
    inst = _df()
    G = inst.form
    S = Matrix(QQ, [[1, 2, 0, 0], [0, 3, 0, 0], [0, 0, 3, 2], [0, 0, 0, 1]])
    assert S.T @ G == G @ S
    assert adjoint_operator(inst.algebra, S, G) == S


def test_adjoint_rejects_non_invariant_form():
    inst = _df()
    with pytest.raises(LawFailure):
        adjoint_operator(inst.algebra, inst.maps["P"], Matrix.identity(QQ, 4))


@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_adjoint_pairing_property(xs):
    inst = _df()
    P = Matrix(QQ, [xs[4 * i:4 * i + 4] for i in range(4)])
    Phat = adjoint_operator(inst.algebra, P, inst.form)
    G = inst.form
    assert P.T @ G == G @ Phat


def test_differential_construction_at_minus_half():
    inst = _df()
    out, v = differential_frobenius_construct(inst.algebra, inst.maps["P"], inst.form, Fraction(-1, 2))
    assert v.passed
    assert out.tensor("circ") == emit("4d-diff-frobenius-table", {}).algebra.tensor("circ")
    assert "adjoint operator is not a derivation" in v.notes


def test_differential_construction_at_zero_fails():
    inst = _df()
    _, v = differential_frobenius_construct(inst.algebra, inst.maps["P"], inst.form, 0)
    assert not v.passed


def test_differential_construction_with_zero_derivation():
    inst = _df()
    out, v = differential_frobenius_construct(inst.algebra, Matrix.zeros(QQ, 4), inst.form, 5)
    assert v.passed
    assert out.tensor("circ").is_zero()


def test_differential_construction_needs_derivation():
    inst = _df()
    with pytest.raises(LawFailure):
        differential_frobenius_construct(inst.algebra, Matrix.identity(QQ, 4), inst.form, 0)


def test_tensor_form_is_kronecker():
    G = tensor_form(SWAP, SWAP)
    assert G[0, 3] == G[3, 0] == G[1, 2] == G[2, 1] == 1
    assert sum(1 for i in range(4) for j in range(4) if G[i, j]) == 4


def test_frobenius_jacobi_closing_example():
    inst = emit("final-frobenius-pair", {})
    J, GJ, v = frobenius_jacobi_tensor(inst.algebra, inst.form, inst.partner, inst.partner_form)
    assert v.passed
    assert check_jacobi(J).passed
    assert GJ[0, 3] == GJ[1, 2] == 1 and GJ[0, 0] == 0


def test_frobenius_jacobi_one_dimensional():
    A = one_dim(QQ, 0)
    G = Matrix(QQ, [[2]])
    J, GJ, v = frobenius_jacobi_tensor(A, G, transpose(A), Matrix(QQ, [[3]]))
    assert v.passed and GJ == Matrix(QQ, [[6]])


def test_frobenius_jacobi_rejects_non_quadratic_input():
    inst = emit("final-frobenius-pair", {})
    with pytest.raises(LawFailure):
        frobenius_jacobi_tensor(inst.algebra, Matrix.identity(QQ, 2), inst.partner, inst.partner_form)


def test_degenerate_jacobi_form_fails():
    inst = emit("final-frobenius-pair", {})
    J, _, _ = frobenius_jacobi_tensor(inst.algebra, inst.form, inst.partner, inst.partner_form)
    assert check_frobenius_jacobi(J, Matrix.zeros(QQ, 4)).counterexample.identity == "form-nondegenerate"


def test_quadratic_over_prime_field():
    F = GF(7)
    G = Matrix(F, [[0, 1], [1, 0]])
    assert check_quadratic(j1(1, -2, F), G).passed


def test_gram_of_functional_symmetric_on_corpus():
    for _, alg in corpus()[:10]:
        v = tuple(range(1, alg.dim + 1))
        G = gram_of_functional(alg, v)
        assert G == G.T


def test_invariant_forms_are_invariant():
    for _, alg in corpus()[:10]:
        for G in invariant_form_space(alg):
            assert is_invariant_form(alg, G)
