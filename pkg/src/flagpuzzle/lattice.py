"""The weight lattice Lambda^{1+d} with its rotation tau, Gram form and B-form.

Coordinates are integers in the ordered basis (f_0, tau f_0, f_1, tau f_1, ...).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .labels import Leaf, Multinumber, Node, card, leaves, maxdigit, parse_multinumber, print_multinumber

Vec = tuple  # tuple of ints

A_D = {1: Fraction(3), 2: Fraction(2), 3: Fraction(3, 2), 4: Fraction(1)}


def dim(d: int) -> int:
    return 2 * (d + 1)


def basis(d: int, i: int, r: int = 0) -> Vec:
    """tau^r f_i."""
    v = [0] * dim(d)
    v[2 * i] = 1
    return tau(tuple(v), r)


def tau(v: Sequence[int], times: int = 1) -> Vec:
    """Rotation by 120 degrees: f -> tau f, tau f -> -f - tau f, on each copy of A2."""
    out = list(v)
    for _ in range(times % 3):
        new = [0] * len(out)
        for i in range(0, len(out), 2):
            a, b = out[i], out[i + 1]
            new[i] = -b
            new[i + 1] = a - b
        out = new
    return tuple(out)


def add(*vs: Sequence[int]) -> Vec:
    return tuple(sum(x) for x in zip(*vs))


def neg(v: Sequence[int]) -> Vec:
    return tuple(-x for x in v)


def scale(c, v):
    return tuple(c * x for x in v)


def weight_of(m: Multinumber | str, d: int) -> Vec:
    """f_X, with f_{YX} = -tau f_X - tau^2 f_Y."""
    if isinstance(m, str):
        m = parse_multinumber(m)
    return _weight(m, d)


@lru_cache(maxsize=None)
def _weight(m: Multinumber, d: int) -> Vec:
    if isinstance(m, Leaf):
        if m.digit > d:
            raise ValueError(f"digit {m.digit} > d={d}")
        return basis(d, m.digit)
    fy = _weight(m.left, d)
    fx = _weight(m.right, d)
    return neg(add(tau(fx, 1), tau(fy, 2)))


# Gram form ------------------------------------------------------------------------

def gram(d: int, a) -> list[list]:
    """G_d(a): A2 Cartan blocks on the diagonal, [[2-a,-1],[a-1,2-a]] above it."""
    n = dim(d)
    G = [[0] * n for _ in range(n)]
    for i in range(d + 1):
        for j in range(d + 1):
            if i == j:
                blk = [[2, -1], [-1, 2]]
            elif i < j:
                blk = [[2 - a, -1], [a - 1, 2 - a]]
            else:
                blk = [[2 - a, a - 1], [-1, 2 - a]]
            for r in range(2):
                for c in range(2):
                    G[2 * i + r][2 * j + c] = blk[r][c]
    return G


def inner(v: Sequence, w: Sequence, G) -> Fraction:
    return sum(v[i] * G[i][j] * w[j] for i in range(len(v)) if v[i] for j in range(len(w)) if w[j])


def norm2(v: Sequence, d: int, a) -> Fraction:
    return inner(v, v, gram(d, a))


def _det(M) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n, det = len(A), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                for k in range(c, n):
                    A[r][k] -= f * A[c][k]
    return det


def gram_det_check(d: int):
    """a^{-2d} det G_d(a) as a factored sympy expression.

    det G_d is a polynomial of degree at most 2(d+1) in a; it is interpolated
    exactly from its values at 2d+3 integer points.
    """
    import sympy

    a = sympy.Symbol("a")
    pts = [(k, _det(gram(d, Fraction(k)))) for k in range(1, 2 * d + 4)]
    poly = sympy.interpolate([(x, sympy.Rational(y.numerator, y.denominator)) for x, y in pts], a)
    q, r = sympy.div(sympy.expand(poly), a ** (2 * d), a)
    if r != 0:
        raise ArithmeticError("det G_d is not divisible by a^(2d)")
    return sympy.factor(q)


# B-form -----------------------------------------------------------------------------

def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def b_basis(i: int, r: int, j: int, s: int) -> int:
    """B(tau^r f_i, tau^s f_j)."""
    sg = _sign(i - j)
    if sg == 0:
        return 0
    if (s - r) % 3 == 0:
        c = 1
    elif (s - r - sg) % 3 == 0:
        c = -1
    else:
        c = 0
    return sg * c


@lru_cache(maxsize=None)
def b_matrix(d: int) -> tuple:
    n = dim(d)
    return tuple(tuple(b_basis(p // 2, p % 2, q // 2, q % 2) for q in range(n)) for p in range(n))


def b_form(v: Sequence[int], w: Sequence[int]) -> int:
    d = len(v) // 2 - 1
    B = b_matrix(d)
    return sum(v[p] * B[p][q] * w[q] for p in range(len(v)) if v[p] for q in range(len(w)) if w[q])


def path_inversion(vectors: Sequence[Sequence[int]]) -> Fraction:
    """(1/2) sum_{i<j} B(gamma_i, gamma_j) for co-oriented edge vectors gamma."""
    tot = 0
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            tot += b_form(vectors[i], vectors[j])
    return Fraction(tot, 2)


# Edges of the triangular lattice carry f (horizontal), tau f ("\\" edges) or tau^2 f ("/" edges).
HORIZONTAL, BACKSLASH, SLASH = 0, 1, 2


def edge_vector(label: Multinumber | str, direction: int, d: int) -> Vec:
    return tau(weight_of(label, d), direction)


def south_path(nu: Sequence[int], d: int) -> list[Vec]:
    return [edge_vector(Leaf(c), HORIZONTAL, d) for c in nu]


def nw_ne_path(lam: Sequence[int], mu: Sequence[int], d: int) -> list[Vec]:
    return [edge_vector(Leaf(c), SLASH, d) for c in lam] + [edge_vector(Leaf(c), BACKSLASH, d) for c in mu]


# The global co-orientation sign: chosen so that the up triangle 10/10/10 has inversion +1.
INVERSION_SIGN = -1


def triangle_inversion(nw_or_se: Multinumber | str, ne_or_sw: Multinumber | str, d: int) -> Fraction:
    """Inversion of a triangle from its "/" label and its "\\" label.

    For an up triangle these are NW and NE; for a down triangle SE and SW.
    The third edge is fixed by weight conservation and drops out.
    """
    return INVERSION_SIGN * Fraction(
        b_form(edge_vector(nw_or_se, SLASH, d), edge_vector(ne_or_sw, BACKSLASH, d)), 2)


def rhombus_inversion(sw, se, ne, nw, d: int) -> Fraction:
    """Inversion of a vertical rhombus: its up half (NW, NE) plus its down half (SE, SW)."""
    return triangle_inversion(nw, ne, d) + triangle_inversion(se, sw, d)


def is_conserving_up(nw, s, ne, d: int) -> bool:
    return add(weight_of(s, d), tau(weight_of(ne, d), 1), tau(weight_of(nw, d), 2)) == (0,) * dim(d)


def is_conserving_down(sw, n, se, d: int) -> bool:
    return add(weight_of(n, d), tau(weight_of(sw, d), 1), tau(weight_of(se, d), 2)) == (0,) * dim(d)


# valid labels ------------------------------------------------------------------------------

def _definite_a(d: int) -> list[Fraction]:
    top = A_D.get(d, Fraction(1))
    return [top / 3, top * 2 / 3]


def _canonical_key(m: Multinumber):
    lv = leaves(m)
    return (card(m), 0 if lv == sorted(lv, reverse=True) else 1, print_multinumber(m))


@lru_cache(maxsize=None)
def enumerate_valid_labels(d: int) -> tuple[Multinumber, ...]:
    """All multinumbers X over 0..d with |f_X|^2 = 2 identically in a, one tree per weight.

    |f_X|^2 is affine in a, so checking two values of a is exact.  Trees are
    grown by cardinality from pairs of already valid labels.  Several trees
    can share a weight (e.g. (21)0 and (20)(10)); the representative has
    minimal |X| and, among those, weakly decreasing digits.
    """
    avals = _definite_a(d) if d <= 4 else [Fraction(1, 3), Fraction(2, 3)]
    Gs = [gram(d, a) for a in avals]
    best: dict[Vec, Multinumber] = {basis(d, i): Leaf(i) for i in range(d + 1)}
    k = 1
    max_card = 1
    while k <= 2 * max_card:
        k += 1
        reps = list(best.values())
        for Y in reps:
            for X in reps:
                if card(Y) + card(X) != k:
                    continue
                m = Node(Y, X)
                v = weight_of(m, d)
                old = best.get(v)
                if old is not None and _canonical_key(old) <= _canonical_key(m):
                    continue
                if all(inner(v, v, G) == 2 for G in Gs):
                    best[v] = m
                    max_card = max(max_card, k)
    return tuple(sorted(best.values(), key=lambda m: (card(m), -maxdigit(m), print_multinumber(m))))


def label_by_weight(d: int) -> dict[Vec, Multinumber]:
    return {weight_of(m, d): m for m in enumerate_valid_labels(d)}


def _cholesky(G) -> list[list[float]]:
    n = len(G)
    L = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = float(G[i][j]) - sum(L[i][k] * L[j][k] for k in range(j))
            if i == j:
                if s <= 1e-12:
                    raise ValueError("form is not positive definite")
                L[i][i] = math.sqrt(s)
            else:
                L[i][j] = s / L[j][j]
    return L


def short_vectors(G, bound: Fraction = Fraction(2)) -> list[Vec]:
    """All nonzero integer v with v.G.v == bound (Fincke-Pohst; exact final check)."""
    n = len(G)
    # q-form: v G v = sum_i q_ii (v_i + sum_{j>i} q_ij v_j)^2
    Q = [[Fraction(G[i][j]) for j in range(n)] for i in range(n)]
    q = [[Fraction(0)] * n for _ in range(n)]
    A = [row[:] for row in Q]
    for i in range(n):
        if A[i][i] <= 0:
            raise ValueError("form is not positive definite")
        q[i][i] = A[i][i]
        for j in range(i + 1, n):
            q[i][j] = A[i][j] / A[i][i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                A[j][k] -= A[i][j] * A[i][k] / A[i][i]
    out: list[Vec] = []
    v = [0] * n

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if remaining == 0 and any(v):
                out.append(tuple(v))
            return
        c = -sum(q[i][j] * v[j] for j in range(i + 1, n))
        r = remaining / q[i][i]
        w = math.isqrt(int(r.numerator * 4 // r.denominator) + 4) // 2 + 1
        lo, hi = math.floor(c) - w, math.ceil(c) + w
        for x in range(lo, hi + 1):
            t = q[i][i] * (x - c) ** 2
            if t <= remaining:
                v[i] = x
                rec(i - 1, remaining - t)
        v[i] = 0
    rec(n - 1, Fraction(bound))
    return out


def count_norm2_vectors(d: int, a=None) -> int:
    """Number of integer vectors of norm 2.

    With a given, the count is at that value (at d=4, a=1 in the quotient by
    the radical).  With a=None, vectors of norm 2 identically in a are counted:
    the intersection of the sets at two generic definite values.  Special
    values such as a=1 at d=1 admit extra vectors.
    """
    if a is None:
        top = A_D.get(d, Fraction(1))
        sets = [set(short_vectors(gram(d, top * Fraction(k, 12)))) for k in (5, 7)]
        return len(sets[0] & sets[1])
    a = Fraction(a)
    G = gram(d, a)
    if d == 4 and a == 1:
        # the radical is spanned by nu and tau nu, whose (f_0, tau f_0) parts are e_1, e_2
        G = [row[2:] for row in G[2:]]
    return len(short_vectors(G))


# simple systems, Dynkin diagram, radical ----------------------------------------------------

SIMPLE_NAMES = ("a", "a'", "b", "b'", "c", "c'", "d", "d'")
SIMPLE_TABLE = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0),
    (-1, 0, -1, -1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0),
    (0, 1, -1, 0, -1, -1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 1, -1, 1, -2, 0, -2, -1),
)
DYNKIN_EDGES = {("c'", "a'"), ("a'", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "d'"), ("b'", "a")}


def simple_system(d: int) -> list[tuple[int, ...]]:
    if not 1 <= d <= 4:
        raise ValueError("simple systems are tabulated for 1 <= d <= 4")
    return [row[: 2 * d] for row in SIMPLE_TABLE[: 2 * d]]


def alpha_basis(d: int) -> list[Vec]:
    """(alpha_1, tau alpha_1, ..., alpha_d, tau alpha_d) with alpha_i = f_{i-1} - f_i."""
    out = []
    for i in range(1, d + 1):
        al = add(basis(d, i - 1), neg(basis(d, i)))
        out += [al, tau(al)]
    return out


def root_vector(d: int, row: Sequence[int]) -> Vec:
    """Coordinates in the f-basis of a root given in the alpha-basis."""
    al = alpha_basis(d)
    out = (0,) * dim(d)
    for c, v in zip(row, al):
        if c:
            out = add(out, scale(c, v))
    return out


def dynkin_adjacency(d: int) -> set[tuple[str, str]]:
    """Edges of 2 - S G S^T where G is the Gram form on K_d, normalised by a."""
    S = [root_vector(d, r) for r in simple_system(d)]
    G1 = gram(d, 1)
    G2 = gram(d, 2)
    names = SIMPLE_NAMES[: 2 * d]
    edges = set()
    for i in range(len(S)):
        for j in range(len(S)):
            g1 = inner(S[i], S[j], G1)
            if inner(S[i], S[j], G2) != 2 * g1:
                raise AssertionError("Gram form on K_d is not proportional to a")
            adj = (2 if i == j else 0) - g1
            if i == j and adj != 0:
                raise AssertionError(f"root {names[i]} does not have norm 2a")
            if adj not in (0, 1):
                raise AssertionError(f"unexpected adjacency {adj}")
            if adj and i < j:
                edges.add(frozenset((names[i], names[j])))
    return edges


def expected_dynkin(d: int) -> set:
    names = set(SIMPLE_NAMES[: 2 * d])
    return {frozenset(e) for e in DYNKIN_EDGES if set(e) <= names}


def radical_a1() -> tuple[Vec, Vec]:
    """nu = sum_{i=0}^4 (-tau^2)^i f_i and tau nu (d=4)."""
    nu = (0,) * dim(4)
    for i in range(5):
        v = basis(4, i)
        for _ in range(i):
            v = neg(tau(v, 2))
        nu = add(nu, v)
    return nu, tau(nu)


CRYSTAL_EDGES = (
    ("3", "c", "2"), ("2", "b", "1"), ("1", "a", "0"),
    ("0", "a'", "10"), ("0", "b'", "21"),
    ("10", "c'", "32"), ("10", "b'", "2(10)"),
    ("32", "b'", "3(2(10))"),
    ("21", "a'", "2(10)"),
    ("2(10)", "c'", "3(2(10))"), ("2(10)", "a", "20"),
    ("3(2(10))", "a", "3(21)"),
    ("20", "c'", "3(21)"), ("20", "b", "(21)0"),
    ("3(21)", "a'", "3(20)"), ("3(21)", "b", "31"),
    ("3(20)", "b", "3(10)"),
    ("(21)0", "c'", "31"), ("(21)0", "c", "((32)1)0"),
    ("31", "a'", "3(10)"), ("31", "c", "(32)1"),
    ("3(10)", "a", "30"), ("3(10)", "c", "(32)(10)"),
    ("30", "b'", "3((21)0)"), ("30", "c", "(32)0"),
    ("3((21)0)", "c", "(32)((21)0)"),
    ("((32)1)0", "c'", "(32)1"),
    ("(32)1", "a'", "(32)(10)"),
    ("(32)(10)", "a", "(32)0"),
    ("(32)0", "b'", "(32)((21)0)"), ("(32)0", "b", "(31)0"),
    ("(32)((21)0)", "b", "(3(21))(10)"),
    ("(31)0", "b'", "(3(21))(10)"),
    ("(3(21))(10)", "a", "(3(21))0"),
    ("(3(21))0", "a'", "(3(2(10)))0"),
    ("(3(2(10)))0", "c'", "3(((32)1)0)"),
)

CRYSTAL_NODES = (
    "3", "2", "1", "0", "10", "32", "3(2(10))", "2(10)", "21", "20", "3(21)", "3(20)", "3(10)",
    "31", "(21)0", "((32)1)0", "(32)1", "(32)(10)", "(32)0", "30", "3((21)0)", "(32)((21)0)",
    "(3(21))(10)", "(31)0", "(3(21))0", "(3(2(10)))0", "3(((32)1)0)",
)


def verify_crystal(sign: int | None = None) -> tuple[bool, list[str], int]:
    """Check f_X - f_Y (or its negative) equals the simple root on every edge X -> Y, modulo Rad G_3(3/2).

    Returns (ok, offending edges, the sign that was used).
    """
    d = 3
    G = gram(d, A_D[3])
    roots = dict(zip(SIMPLE_NAMES, (root_vector(d, r) for r in simple_system(d))))

    def in_radical(v):
        return all(inner(row_vec, v, G) == 0 for row_vec in _unit_vectors(dim(d)))

    signs = (sign,) if sign else (1, -1)
    best = None
    for sg in signs:
        bad = []
        for x, lab, y in CRYSTAL_EDGES:
            diff = add(weight_of(x, d), neg(weight_of(y, d)))
            if not in_radical(add(diff, neg(scale(sg, roots[lab])))):
                bad.append(f"{x} -{lab}-> {y}")
        if not bad:
            return True, [], sg
        if best is None or len(bad) < len(best[1]):
            best = (False, bad, sg)
    return best


def _unit_vectors(n: int):
    for i in range(n):
        yield tuple(1 if j == i else 0 for j in range(n))
