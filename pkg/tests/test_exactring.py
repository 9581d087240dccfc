from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flagpuzzle.exactring import EvaluationError, LaurentElem, RatFunc, parse

VARS = ("u1", "u2", "u3")


@st.composite
def laurents(draw):
    terms = draw(st.lists(st.tuples(st.integers(-3, 3), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
                          max_size=4))
    out = LaurentElem.zero()
    for c, *exps in terms:
        out = out + LaurentElem.monomial(dict(zip(VARS, exps)), c)
    return out


def test_parse_and_print():
    a = parse("1 - u3/u2")
    assert str(a) == "1 - u3/u2"
    assert parse(str(a)) == a
    assert parse("u1^2*u2^-1") == LaurentElem.monomial({"u1": 2, "u2": -1})


def test_evaluate():
    assert parse("1 - u3/u2").evaluate({"u2": 2, "u3": 6}) == -2
    with pytest.raises(EvaluationError):
        parse("1/u2").evaluate({"u2": 0})


def test_json_roundtrip():
    a = parse("3 - u1^2*u3/u2^2")
    assert LaurentElem.from_json(a.to_json()) == a


@given(laurents(), laurents(), laurents())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentElem.zero()


@given(laurents(), laurents())
@settings(max_examples=60, deadline=None)
def test_exact_division(a, b):
    if b:
        assert (a * b).divide_exact(b) == a


@given(laurents(), laurents())
@settings(max_examples=40, deadline=None)
def test_evaluation_is_a_homomorphism(a, b):
    pt = {"u1": Fraction(2), "u2": Fraction(-3), "u3": Fraction(5, 7)}
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


def test_ratfunc():
    q = parse("q")
    f = RatFunc(q, 1 + q) + RatFunc(parse("1"), 1 + q)
    assert f.evaluate({"q": 5}) == 1
