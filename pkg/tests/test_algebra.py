from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oideal.algebra import Field, PolyRing, RingMismatchError, grevlex_compare, grevlex_key, monomials_of_degree

from strategies import F5, FP3, QQ3, homogeneous, monomials3, polynomials

R2 = PolyRing(["x", "y"])
x, y = R2.gens()


def test_additive_inverse_and_order():
    assert x + (-x) == R2.zero()
    f = x * x + x * y
    assert [m for m, _ in f.terms()] == [(2, 0), (1, 1)]
    assert str(f) == "x^2 + x*y"


def test_characteristic_two():
    assert (x + y) + (x - y) == 2 * x
    G = PolyRing(["x", "y"], Field(2))
    u, v = G.gens()
    assert (u + v) + (u - v) == G.zero()
    assert (u + v) ** 2 == u * u + v * v


def test_products():
    assert (x + y) * (x - y) == x * x - y * y
    assert x * 0 == R2.zero()


def test_grevlex_examples():
    assert grevlex_compare((2, 0), (1, 1)) == 1
    assert grevlex_compare((1, 1), (0, 2)) == 1
    assert grevlex_compare((1, 0), (1, 0)) == 0
    # degree 2 in three variables, grevlex descending
    got = sorted(monomials_of_degree(3, 2), key=grevlex_key, reverse=True)
    assert got == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


def test_is_homogeneous():
    R = PolyRing(["x", "y", "z"])
    a, b, c = R.gens()
    assert (a * a + b * c).is_homogeneous() == (True, 2)
    assert (a + b * b).is_homogeneous()[0] is False
    ok, deg = R.zero().is_homogeneous()
    assert ok and deg is None


def test_field_validation_and_coercion():
    with pytest.raises(ValueError):
        Field(4)
    F7 = Field(7)
    assert F7.coerce(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        F7.coerce(Fraction(1, 7))
    assert str(F7) == "Fp 7" and str(Field(0)) == "QQ"


def test_ring_mismatch():
    S = PolyRing(["x", "y"], Field(3))
    with pytest.raises(RingMismatchError):
        _ = x + S.var(0)


@given(polynomials(QQ3), polynomials(QQ3), polynomials(QQ3))
def test_ring_axioms_qq(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f and f + g == g + f


@given(polynomials(FP3), polynomials(FP3), polynomials(FP3))
def test_ring_axioms_fp(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polynomials(F5, max_degree=1), polynomials(F5, max_degree=1))
def test_frobenius(f, g):
    assert (f + g) ** 5 == f ** 5 + g ** 5


@given(monomials3, monomials3, monomials3)
def test_grevlex_total_and_multiplicative(a, b, c):
    ab = grevlex_compare(a, b)
    assert ab == -grevlex_compare(b, a)
    assert (ab == 0) == (a == b)
    ac = tuple(i + j for i, j in zip(a, c))
    bc = tuple(i + j for i, j in zip(b, c))
    assert grevlex_compare(ac, bc) == ab


@given(monomials3, monomials3, monomials3)
def test_grevlex_transitive(a, b, c):
    if grevlex_compare(a, b) > 0 and grevlex_compare(b, c) > 0:
        assert grevlex_compare(a, c) > 0


@given(homogeneous(QQ3), homogeneous(QQ3))
def test_homogeneous_product_degree(f, g):
    ok, d = (f * g).is_homogeneous()
    assert ok and d == f.degree() + g.degree()


@given(st.integers(0, 5), st.integers(1, 4))
def test_monomial_count(d, n):
    from math import comb

    assert len(monomials_of_degree(n, d)) == comb(n + d - 1, d)
