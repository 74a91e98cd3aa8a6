from fractions import Fraction

from hypothesis import given, strategies as st

from rootpoly.polynomial import Polynomial

coeffs = st.lists(st.fractions(max_denominator=7).filter(lambda x: abs(x) < 10**6), max_size=6)
big = st.lists(st.integers(-10**30, 10**30), max_size=6)


@given(coeffs)
def test_json_roundtrip(c):
    p = Polynomial(c)
    assert Polynomial.from_json(p.to_json()) == p


@given(big)
def test_json_integer_strings(c):
    p = Polynomial(c)
    assert all(s.lstrip("-").isdigit() for s in p.to_json())
    assert Polynomial.from_json(p.to_json()) == p


@given(st.lists(st.integers(-5, 5), max_size=5), st.integers(0, 6))
def test_reflect_involution(c, extra):
    p = Polynomial(c)
    k = max(p.degree, 0) + extra
    assert p.reflect(k).reflect(k) == p


@given(coeffs, coeffs, st.fractions(max_denominator=5))
def test_ring_operations_evaluate(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert p.shift(1)(x) == p(x + 1)


def test_format():
    assert Polynomial([0, 0, 1, 1]).format() == "t^3 + t^2"
    assert Polynomial([0, 1]).format() == "t"
    assert Polynomial([1, Fraction(5, 2), Fraction(3, 2)]).format() == "3/2*t^2 + 5/2*t + 1"
    assert Polynomial([-1, 0, -2]).format() == "-2t^2 - 1"
    assert Polynomial().format() == "0"


def test_histogram():
    assert Polynomial.from_histogram([3, 4, 3]) == Polynomial([0, 0, 0, 2, 1])
    assert Polynomial.from_histogram([]) == Polynomial()
