import pytest
from hypothesis import given, strategies as st

from builders import a1, cat, j1, non_novikov, zero_circ
from jnpa.affine import LaurentElement, laurent_bracket, laurent_dot, parse_grid, verify_affinization
from jnpa.catalog import corpus
from jnpa.errors import CharacteristicError, DimensionMismatch, InputError
from jnpa.field import GF, QQ
from jnpa.laws import check_jnp

E1, E2 = (1, 0), (0, 1)


def mono(a, m):
    return LaurentElement.monomial(a, m)


def test_dot_multiplies_degrees():
    assert laurent_dot(a1(), mono(E1, 2), mono(E2, -1)) == mono(E2, 1)


def test_bracket_j1_example():
    assert laurent_bracket(j1(1, 0), mono(E1, 1), mono(E2, 1)) == mono((0, -1), 1)


def test_bracket_of_degree_zero_elements_vanishes():
    alg = j1(1, -2)
    assert laurent_bracket(alg, mono(E1, 0), mono(E2, 0)).is_zero()


def test_zero_coefficients_are_dropped():
    x = LaurentElement(2, {0: (0, 0), 3: (1, 0)})
    assert x.degrees() == [3]
    assert (x - x).is_zero()


def test_length_mismatch_rejected():
    with pytest.raises(DimensionMismatch):
        LaurentElement(2, {0: (1, 0, 0)})
    with pytest.raises(DimensionMismatch):
        laurent_dot(a1(), LaurentElement(3, {0: (1, 0, 0)}), mono(E1, 0))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 1), st.integers(0, 1))
def test_degree_support(m, n, i, j):
    alg = j1(1, -2)
    a, b = alg.e(i), alg.e(j)
    d = laurent_dot(alg, mono(a, m), mono(b, n))
    assert set(d.degrees()) <= {m + n}
    br = laurent_bracket(alg, mono(a, m), mono(b, n))
    assert set(br.degrees()) <= {m + n - 1}


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_bracket_antisymmetric_on_monomials(m, n):
    alg = j1(2, 3)
    x, y = mono(E1, m), mono(E2, n)
    assert laurent_bracket(alg, x, y) == laurent_bracket(alg, y, x).scale(-1)


def test_parse_grid():
    assert parse_grid("-2..2") == [-2, -1, 0, 1, 2]
    for bad in ("2..1", "a..b", "3"):
        with pytest.raises(InputError):
            parse_grid(bad)


def test_grid_too_small():
    with pytest.raises(InputError):
        verify_affinization(j1(1, -2), [0, 1])
    with pytest.raises(InputError):
        verify_affinization(j1(1, -2), [1, 1, 1])


def test_prime_field_needs_override():
    alg = j1(1, -2, GF(5))
    with pytest.raises(CharacteristicError):
        verify_affinization(alg)
    v = verify_affinization(alg, allow_prime_field=True)
    assert v.passed
    assert any("GF(5)" in n or "characteristic 0" in n for n in v.notes)


def test_j3_affinization_passes():
    assert verify_affinization(cat("2d-J3", k1=1, k2=0)).passed


def test_zero_circ_affinization_passes():
    assert verify_affinization(zero_circ(a1())).passed


def test_non_jnp_fails_with_degree_witness():
    v = verify_affinization(non_novikov())
    assert not v.passed
    ce = v.counterexample
    assert ce.degrees is not None and len(ce.degrees) == len(ce.indices)


def test_three_point_grid_suffices():
    assert verify_affinization(j1(1, -2), [5, 7, 11]).passed
    assert not verify_affinization(non_novikov(), [5, 7, 11]).passed


@pytest.mark.parametrize("name,alg", corpus()[:20], ids=[n for n, _ in corpus()[:20]])
def test_affinization_iff_jnp_on_corpus(name, alg):
    assert verify_affinization(alg, range(-1, 2)).passed == check_jnp(alg).passed


def test_affinization_needs_second_product():
    from jnpa.algebra import make_algebra
    from builders import A1_DOT
    with pytest.raises(InputError):
        verify_affinization(make_algebra(QQ, 2, A1_DOT, (1, 0)))
