from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jnpa.errors import InputError
from jnpa.field import GF, QQ, Field, Mod


def test_rational_canonical_form():
    assert QQ("6/4") == Fraction(3, 2)
    assert QQ.fmt(QQ("-6/4")) == "-3/2"
    assert QQ.fmt(QQ(5)) == "5"


def test_prime_residues():
    F = GF(5)
    assert F(7) == Mod(2, 5)
    assert F("-1") == Mod(4, 5)
    assert F.fmt(F("1/2")) == "3"


def test_fraction_without_residue():
    with pytest.raises(InputError):
        GF(5)("1/5")
    with pytest.raises(ZeroDivisionError):
        GF(5)(1) / GF(5)(0)


def test_nonprime_rejected():
    with pytest.raises(InputError):
        Field(6)


@pytest.mark.parametrize("bad", ["", "1.5", "a", "1/0", "1/-2"])
def test_parse_rejects(bad):
    with pytest.raises((InputError, ZeroDivisionError)):
        QQ.parse(bad)


def test_json_roundtrip():
    for F in (QQ, GF(3)):
        assert Field.from_json(F.to_json()) == F


def test_elements_and_vectors():
    F = GF(3)
    assert [int(x) for x in F.elements()] == [0, 1, 2]
    assert len(list(F.vectors(2))) == 9


@given(st.integers(-50, 50), st.integers(-50, 50), st.sampled_from([2, 3, 5, 7, 11]))
def test_mod_field_axioms(a, b, p):
    F = GF(p)
    x, y = F(a), F(b)
    assert x + y == F(a + b)
    assert x * y == F(a * b)
    if y:
        assert (x / y) * y == x
        assert y ** -1 * y == F.one


@given(st.fractions(max_denominator=50))
def test_rational_string_roundtrip(q):
    assert QQ.parse(QQ.fmt(q)) == q
