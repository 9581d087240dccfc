import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from flagpuzzle import lattice, pieces
from flagpuzzle.labels import print_multinumber


@pytest.mark.parametrize("d,count", [(1, 3), (2, 8), (3, 27)])
def test_valid_label_counts(d, count):
    assert len(lattice.enumerate_valid_labels(d)) == count


def test_labels_have_norm_two():
    for d in (1, 2, 3):
        for m in lattice.enumerate_valid_labels(d):
            for a in (Fraction(3), Fraction(7, 2)):
                assert lattice.norm2(lattice.weight_of(m, d), d, a) == 2, print_multinumber(m)


def test_tau_has_order_three():
    v = lattice.weight_of("2(10)", 2)
    assert lattice.tau(v, 3) == v
    assert lattice.add(v, lattice.tau(v), lattice.tau(v, 2)) == (0,) * len(v)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_h_triangles_conserve_weight(d):
    ups, downs = pieces.h_triangles(d)
    for p in ups:
        assert lattice.is_conserving_up(*p.labels, d)
    for p in downs:
        assert lattice.is_conserving_down(*p.labels, d)


@pytest.mark.parametrize("d", [1, 2])
def test_k_pieces_conserve_weight(d):
    for p in pieces.k_pieces(d):
        assert pieces.conserves(p, d)


def test_b_form_antisymmetric():
    n = lattice.dim(2)
    vecs = st.lists(st.integers(-2, 2), min_size=n, max_size=n)

    @given(vecs, vecs)
    def check(v, w):
        assert lattice.b_form(v, w) == -lattice.b_form(w, v)
    check()


def test_dynkin_and_e8():
    for d in range(1, 5):
        assert lattice.dynkin_adjacency(d) == lattice.expected_dynkin(d)
    assert lattice.count_norm2_vectors(4, 1) == 240
