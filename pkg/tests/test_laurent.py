import pytest
from hypothesis import given, strategies as st

from legtheta import LaurentPolynomial

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({2: 0, -1: 3})
    assert p.terms == {-1: 3}
    assert LaurentPolynomial({0: 0}).is_zero()


def test_str():
    assert str(LaurentPolynomial({-4: 1, 0: 2, 4: 1})) == "A^-4 +2 +A^4"
    assert str(LaurentPolynomial({1: -1}, "s")) == "-s"
    assert str(LaurentPolynomial()) == "0"


def test_substitute():
    p = LaurentPolynomial({-4: 1, 8: -2})
    assert p.substitute((-1, 2), "s").terms == {2: 1, -4: -2}
    with pytest.raises(ValueError):
        LaurentPolynomial({1: 1}).substitute((1, 2), "s")


def test_json():
    assert LaurentPolynomial({-2: 1, 3: -1}).to_json() == {"-2": 1, "3": -1}


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(polys, nonzero)
def test_divide_exact(p, q):
    assert (p * q).divide_exact(q) == p


def test_divide_inexact():
    with pytest.raises(ValueError):
        LaurentPolynomial({0: 1}).divide_exact(LaurentPolynomial({0: 1, 1: 1}))


@given(polys, polys)
def test_reflect_is_multiplicative(p, q):
    assert (p * q).reflect() == p.reflect() * q.reflect()
    assert p.reflect().reflect() == p
