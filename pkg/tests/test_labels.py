import pytest
from hypothesis import given, strategies as st

from flagpuzzle.labels import (FlagShape, ParseError, as_string, bruhat_leq, card, content, inversions, maxdigit,
                               parse_multinumber, permutation_of, print_multinumber, refine, shapes)


@pytest.mark.parametrize("text", ["0", "10", "2(10)", "(21)0", "((32)1)0", "3(((32)1)0)", "(3(21))(10)"])
def test_multinumber_roundtrip(text):
    assert print_multinumber(parse_multinumber(text)) == text


def test_multinumber_stats():
    m = parse_multinumber("(32)((21)0)")
    assert card(m) == 5 and maxdigit(m) == 3


@pytest.mark.parametrize("bad", ["", "(10", "1)0", "4", "1a"])
def test_multinumber_errors(bad):
    with pytest.raises(ParseError):
        parse_multinumber(bad, d=3)


def test_strings():
    assert as_string("0102") == (0, 1, 0, 2)
    assert inversions("0210") == 3
    assert content("0102", 2) == (2, 1, 1)
    assert permutation_of("0201") == (1, 3, 4, 2)


def test_flagshape():
    sh = FlagShape((2, 1, 1))
    assert sh.n == 4 and sh.d == 2 and sh.dim == 5
    assert len(sh.strings) == 12
    assert sh.strings[0] == sh.omega and sh.strings[-1] == sh.top
    assert "0102" in sh and "0112" not in sh
    assert FlagShape.parse("2,1,1") == sh


def test_shapes():
    got = shapes(1, 3)
    assert {s.p for s in got} == {(1, 1), (1, 2), (2, 1)}


def test_bruhat():
    assert bruhat_leq("0012", "2100")
    assert not bruhat_leq("2100", "0012")


def test_refine_keeps_inversions():
    s = refine("0110", {1: [(1, 1), (2, 1)]})
    assert s == (0, 1, 2, 0) and inversions(s) == inversions("0110") + 0


@given(st.lists(st.integers(0, 3), min_size=1, max_size=7))
def test_bruhat_bounds(xs):
    sh = FlagShape.of(xs, 3)
    assert bruhat_leq(sh.omega, xs) and bruhat_leq(xs, sh.top)
    assert 0 <= inversions(xs) <= sh.dim
