import copy

import pytest

from flagpuzzle import d4verify
from flagpuzzle.exactring import LaurentElem, RatFunc


@pytest.fixture(scope="module")
def tables():
    return d4verify.load_tables()


def test_table_sizes(tables):
    R, UD, runi = tables
    assert len(R.entries) == 160 and len(UD.U) == 32 and len(UD.D) == 32
    assert len(runi) == 9


def test_weights(tables):
    assert d4verify.verify_weight_conservation(tables).ok


def test_ud_convention_is_rederived(tables):
    rep = d4verify.verify_ud_factorization(d4verify.random_points(3, seed=5), tables)
    assert rep.ok
    assert rep.details["conventions"] == [list(d4verify.UD_CONVENTION)]


def test_runi(tables):
    pts = d4verify.random_points(3, seed=7, names=("q", "u1", "u2", "u3"))
    assert d4verify.verify_runi(pts, tables).ok


def test_limits(tables):
    rep = d4verify.q_limit_checks(tables)
    assert rep.ok, rep.failures[:3]
    assert rep.details["k_pieces_from_table"] == 13


def test_corrupted_weight_entry_is_caught(tables):
    R, UD, runi = tables
    bad = copy.copy(R)
    bad.entries = dict(R.entries)
    bad.entries[("0", "0", "1", "1")] = RatFunc(LaurentElem.one(), LaurentElem.one())
    rep = d4verify.verify_weight_conservation((bad, UD, runi))
    assert not rep.ok and len(rep.failures) == 1


def test_corrupted_value_breaks_factorization(tables):
    R, UD, runi = tables
    bad = copy.copy(R)
    bad.entries = dict(R.entries)
    key = next(iter(bad.entries))
    bad.entries[key] = RatFunc(bad.entries[key].num + bad.entries[key].den, bad.entries[key].den)
    rep = d4verify.verify_ud_factorization(d4verify.random_points(2, seed=5), (bad, UD, runi))
    assert not rep.ok
    assert rep.details["conventions"] == []
