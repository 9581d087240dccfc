import pytest

from flagpuzzle import pieces
from flagpuzzle.discovery import DiscoveryError, _Search, default_corpus, discover_pieces


def test_d1_finds_the_single_k_piece():
    res = discover_pieces(1, threads=1)
    assert [str(p) for p in res.pieces] == ["∆10/10/10"]
    assert res.report["unique"] and res.report["search_complete"]


def test_d2_small_corpus_misses_one_piece():
    # at n <= 4 the all-(21)0 down piece is never needed
    res = discover_pieces(2, corpus=default_corpus(2, 4), threads=1)
    missing = set(pieces.k_pieces(2)) - set(res.pieces)
    assert set(res.pieces) <= set(pieces.k_pieces(2))
    assert [str(p) for p in missing] == ["∇(21)0/(21)0/(21)0"]
    assert res.report["minimal_sets"] == 2


def test_only_k_theory():
    with pytest.raises(ValueError):
        discover_pieces(1, theory="KT")


def test_search_toy():
    # x0 + x1 - x0x1 = 1 with sign conventions: masks over two variables
    cons = [(("a",), ((0b01, 1), (0b10, 1), (0b11, -1)), 1)]
    s = _Search(2, cons, 100)
    got = s.minimal_sets(10)
    assert sorted(got) == [0b01, 0b10]


def test_search_infeasible():
    cons = [(("a",), ((0b1, 1),), 5)]
    with pytest.raises(DiscoveryError):
        _Search(1, cons, 100).minimal_sets(1)


def test_search_budget():
    cons = [((i,), ((1 << i, 1),), 1) for i in range(12)]
    with pytest.raises(DiscoveryError):
        _Search(12, cons, 5).minimal_sets(1)
