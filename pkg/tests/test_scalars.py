from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagram_algebras.scalars import ONE, X, ZERO, Poly, evaluate, parse_rational, poly_arith

polys = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=5).map(Poly)
rationals = st.fractions(max_denominator=12).filter(lambda q: abs(q) < 50)


def test_examples():
    assert poly_arith(X + 1, X - 1, "add") == 2 * X
    assert poly_arith(X, X, "mul") == Poly({2: 1})
    p = 3 * X**2 - 4
    assert poly_arith(p, p, "sub") == ZERO
    with pytest.raises(ValueError):
        poly_arith(p, p, "div")


def test_evaluate_examples():
    assert evaluate(X**2, 3) == 9
    assert evaluate(ZERO, Fraction(7, 3)) == 0
    assert evaluate(2 * X + 1, Fraction(5, 2)) == 6
    assert evaluate(X**5 + 1, 2) == 33


def test_normalisation():
    assert Poly({3: 0, 1: 2}).terms == ((1, 2),)
    assert Poly([(1, 1), (1, -1)]).is_zero()
    assert ZERO.degree == -1
    with pytest.raises(ValueError):
        Poly({-1: 1})


def test_text_form():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-X) == "-x"
    assert str(2 * X**3 - X + 5) == "2*x^3 - x + 5"
    assert str(-3 * X**2 - 1) == "-3*x^2 - 1"


def test_json_form():
    assert (2 * X**3 - 1).to_json() == {"poly": [[3, 2], [0, -1]]}
    assert Poly.from_json({"poly": [[0, 4], [2, 1]]}) == X**2 + 4


def test_parse_rational():
    assert parse_rational("7/3") == Fraction(7, 3)
    assert parse_rational("-2") == -2
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("abc")


@given(polys)
def test_text_round_trip(p):
    assert Poly.parse(str(p)) == p
    assert Poly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, rationals)
def test_evaluation_is_homomorphism(a, b, q):
    assert evaluate(a * b, q) == evaluate(a, q) * evaluate(b, q)
    assert evaluate(a + b, q) == evaluate(a, q) + evaluate(b, q)


@given(polys, rationals)
def test_horner_matches_naive(p, q):
    assert p.evaluate(q) == sum((c * q**e for e, c in p.terms), Fraction(0))
