import pytest
from hypothesis import given, settings, strategies as st

from flagpuzzle import oracle, puzzle
from flagpuzzle.exactring import LaurentElem
from flagpuzzle.labels import FlagShape, inversions, string_str


def test_d1_h_product():
    # sigma_1 * sigma_1 in Gr(1, 3)
    table = puzzle.expand_product("H", "010", "010", d=1)
    assert {string_str(nu): c for nu, c in table.items()} == {"100": LaurentElem.one()}


def test_k_piece_sign():
    fills = puzzle.enumerate_puzzles("K", "01", "01", d=1)
    assert sorted(str(f.fugacity) for f in fills) == ["1"]
    # O_1^2 = O_2 + O_11 - O_21 in K(Gr(2, 4))
    table = puzzle.expand_product("K", "0101", "0101", d=1)
    assert {string_str(nu): str(c) for nu, c in table.items()} == {"0110": "1", "1001": "1", "1010": "-1"}


def test_render():
    f = puzzle.enumerate_puzzles("KT", "0201", "0102", "0210", d=2)[0]
    pic = puzzle.render(f)
    lines = pic.splitlines()
    assert lines[0].startswith("lambda=0201 mu=0102 nu=0210")
    assert len(lines) == 1 + f.n


def test_structure_constant_matches_expand():
    table = puzzle.expand_product("KT", "0102", "0201", d=2)
    for nu, c in table.items():
        assert puzzle.structure_constant("KT", "0102", "0201", nu, d=2) == c


SHAPE = FlagShape((2, 1, 1))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SHAPE.strings), st.sampled_from(SHAPE.strings), st.sampled_from(["H", "K", "HT", "KT"]))
def test_puzzles_match_oracle(lam, mu, theory):
    assert puzzle.expand_product(theory, lam, mu, 2) == oracle.oracle_product(SHAPE, theory, lam, mu)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SHAPE.strings), st.sampled_from(SHAPE.strings))
def test_grading(lam, mu):
    for f in puzzle.enumerate_puzzles("K", lam, mu, d=2):
        assert f.inversion_sum == inversions(f.nu) - inversions(lam) - inversions(mu)


def test_h_commutative():
    for lam in SHAPE.strings[:6]:
        for mu in SHAPE.strings[-6:]:
            assert puzzle.expand_product("H", lam, mu, 2) == puzzle.expand_product("H", mu, lam, 2)


def test_mismatched_boundaries():
    # different content: no puzzles, zero product
    assert puzzle.expand_product("H", "0101", "0111", d=1) == {}
    with pytest.raises(ValueError):
        puzzle.expand_product("H", "0101", "011", d=1)


@pytest.mark.parametrize("p", [(1, 1, 1), (2, 1, 1), (2, 2)])
def test_dual_rule_matches_pairing_dual(p):
    sh = FlagShape(p)
    for lam in sh.strings:
        for mu in sh.strings:
            assert puzzle.dual_expand_product(lam, mu, sh.d) == oracle.pairing_dual_constants(sh, lam, mu)
