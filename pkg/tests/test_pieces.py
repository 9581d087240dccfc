import pytest

from flagpuzzle import d4verify, pieces
from flagpuzzle.exactring import LaurentElem, parse
from flagpuzzle.pieces import CatalogError


@pytest.mark.parametrize("d", [1, 2, 3])
def test_h_triangles_have_no_inversions(d):
    cat = pieces.catalog(d, "H")
    assert all(p.inversion == 0 and not p.k_piece for p in cat.triangles)


def test_d3_h_catalog_is_every_flat_conserving_triangle():
    flat = [p for p in pieces.conserving_triangles(3) if p.inversion == 0]
    assert set(pieces.catalog(3, "H").triangles) == set(flat)


@pytest.mark.parametrize("d,count", [(1, 1), (2, 13)])
def test_k_pieces(d, count):
    ks = pieces.k_pieces(d)
    assert len(ks) == count
    assert all(p.k_piece and p.inversion >= 1 for p in ks)


def test_k_pieces_match_table_limit():
    ups, downs = d4verify.admissible_triangles()
    table = {("up", k) for k in ups} | {("down", k) for k in downs}
    got = {(p.kind, p.labels) for p in pieces.k_pieces(2)}
    assert got <= table


def test_equivariant_pairs():
    assert len(pieces.EQUIVARIANT_PAIRS[1]) == 1
    assert len(pieces.EQUIVARIANT_PAIRS[2]) == 8


def test_fugacities():
    k = pieces.k_pieces(1)[0]
    assert str(k) == "∆10/10/10"
    assert pieces.fugacity(k) == LaurentElem.const(-1)
    eq = pieces.equivariant_rhombus("1", "0", 1)
    assert pieces.fugacity(eq, (2, 3), "KT") == parse("1 - u3/u2")
    assert pieces.fugacity(eq, (2, 3), "HT") == parse("y2 - y3")
    with pytest.raises(CatalogError):
        pieces.fugacity(eq, (2, 3), "K")
    with pytest.raises(CatalogError):
        pieces.fugacity(k, None, "H")


def test_rotation_invariant_rhombus_has_no_monomial():
    for a in ("0", "1", "10"):
        assert not pieces.monomial_applies(a, a, a, a)


def test_monomial_override():
    for key, val in pieces.MONOMIAL_OVERRIDES.items():
        assert pieces.size_max_rule(*key) != val
        assert pieces.monomial_applies(*key) == val


def test_catalog_theories():
    sizes = {th: len(pieces.catalog(2, th)) for th in pieces.THEORIES}
    assert sizes["H"] < sizes["K"]
    assert sizes["H"] < sizes["HT"]
    with pytest.raises(CatalogError):
        pieces.catalog(3, "K")


def test_rotations():
    rots = pieces.rotations_up("1", "10", "0")
    assert len(rots) == 3 and ("1", "10", "0") in rots
