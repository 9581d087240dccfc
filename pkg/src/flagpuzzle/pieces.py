"""Puzzle pieces: triangles, equivariant rhombi, catalogs and fugacities.

Reading conventions for labels:

* up triangle   (NW, S, NE)
* down triangle (SW, N, SE)
* rhombus       (SW, SE, NE, NW)

The usual argument order of a drawn up triangle is NW/S/NE; a drawn down
triangle lists SE/N/SW, which is the 180 degree rotation of the up triangle
with the same arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import lattice
from .exactring import LaurentElem
from .labels import card, maxdigit, parse_multinumber, print_multinumber

THEORIES = ("H", "HT", "K", "Kdual", "KT")


class CatalogError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Piece:
    kind: str  # "up", "down" or "rhombus"
    labels: tuple
    inversion: int = 0
    k_piece: bool = False
    rotatable: bool = True

    def __str__(self):
        sym = {"up": "∆", "down": "∇", "rhombus": "◊"}[self.kind]
        return sym + "/".join(self.labels)

    @property
    def name(self) -> str:
        tag = {"up": "up", "down": "down", "rhombus": "rh"}[self.kind]
        return tag + " " + "/".join(self.labels)


def up(nw: str, s: str, ne: str, d: int, k_piece: bool = False, rotatable: bool = True) -> Piece:
    return Piece("up", (nw, s, ne), int(lattice.triangle_inversion(nw, ne, d)), k_piece, rotatable)


def down(sw: str, n: str, se: str, d: int, k_piece: bool = False, rotatable: bool = True) -> Piece:
    return Piece("down", (sw, n, se), int(lattice.triangle_inversion(se, sw, d)), k_piece, rotatable)


def rhombus(sw: str, se: str, ne: str, nw: str, d: int, rotatable: bool = False) -> Piece:
    """A vertical rhombus; rotatable=True marks a pair of ordinary triangles."""
    inv = lattice.rhombus_inversion(sw, se, ne, nw, d)
    return Piece("rhombus", (sw, se, ne, nw), int(inv), False, rotatable)


def drawn_down(a: str, b: str, c: str, d: int, k_piece: bool = False) -> Piece:
    """A down triangle given in drawn order SE/N/SW."""
    return down(c, b, a, d, k_piece, rotatable=False)


def rotations_up(nw: str, s: str, ne: str) -> list[tuple]:
    """The three rotations of an up triangle; 120 degrees sends (A,B,C) to (C,A,B)."""
    t = (nw, s, ne)
    return [t, (t[2], t[0], t[1]), (t[1], t[2], t[0])]


def rotate180_up(p: Piece, d: int) -> Piece:
    nw, s, ne = p.labels
    return down(ne, s, nw, d, p.k_piece, p.rotatable)


def rotate180_down(p: Piece, d: int) -> Piece:
    sw, n, se = p.labels
    return up(se, n, sw, d, p.k_piece, p.rotatable)


def conserves(p: Piece, d: int) -> bool:
    if p.kind == "up":
        return lattice.is_conserving_up(*p.labels, d)
    if p.kind == "down":
        return lattice.is_conserving_down(*p.labels, d)
    sw, se, ne, nw = p.labels
    # the halves share their middle edge, so NE - SW and NW - SE must balance
    v = lattice.add(lattice.edge_vector(ne, lattice.BACKSLASH, d), lattice.neg(lattice.edge_vector(sw, lattice.BACKSLASH, d)),
                    lattice.edge_vector(nw, lattice.SLASH, d), lattice.neg(lattice.edge_vector(se, lattice.SLASH, d)))
    return v == (0,) * lattice.dim(d)


# base triangles -----------------------------------------------------------------------------

def _h_base(d: int) -> list[tuple[str, str, str]]:
    if d == 1:
        return [("0", "0", "0"), ("1", "1", "1"), ("1", "10", "0")]
    if d == 2:
        return [("0", "0", "0"), ("1", "1", "1"), ("2", "2", "2"),
                ("1", "10", "0"), ("2", "20", "0"), ("2", "21", "1"),
                ("21", "(21)0", "0"), ("2", "2(10)", "10")]
    if d == 3:
        out = [(str(i),) * 3 for i in range(4)]
        out += [(str(j), f"{j}{i}", str(i)) for i, j in combinations(range(4), 2)]
        for i, j, k in combinations(range(4), 3):
            out.append((f"{k}{j}", f"({k}{j}){i}", str(i)))
            out.append((str(k), f"{k}({j}{i})", f"{j}{i}"))
        out += [("32", "(32)(10)", "10"),
                ("3(2(10))", "(3(2(10)))0", "0"),
                ("3(21)", "(3(21))(10)", "10"),
                ("32", "(32)((21)0)", "(21)0"),
                ("3", "3(((32)1)0)", "((32)1)0")]
        # the kj/(kj)i/i and k/k(ji)/ji families with a compound kj or ji
        out += [("3(21)", "(3(21))0", "0"), ("(32)1", "((32)1)0", "0"),
                ("3", "3((21)0)", "(21)0"), ("3", "3(2(10))", "2(10)")]
        return out
    raise CatalogError(f"no cohomology pieces for d={d}")


def k_pieces(d: int) -> list[Piece]:
    """K-pieces in their only allowed orientations."""
    if d == 1:
        return [up("10", "10", "10", 1, True, False)]
    if d == 2:
        U = lambda a, b, c: up(a, b, c, 2, True, False)
        D = lambda a, b, c: drawn_down(a, b, c, 2, True)
        return [
            U("10", "10", "10"), U("20", "20", "20"), U("21", "21", "21"),
            U("2(10)", "20", "21"), U("21", "2(10)", "20"), U("20", "21", "2(10)"),
            U("(21)0", "10", "20"), D("20", "(21)0", "10"), U("10", "20", "(21)0"),
            D("1", "2(10)", "(21)0"), U("(21)0", "1", "2(10)"), D("2(10)", "(21)0", "1"),
            D("(21)0", "(21)0", "(21)0"),
        ]
    raise CatalogError(f"K-pieces for d={d} are not tabulated; see discover_pieces")


EQUIVARIANT_PAIRS = {
    1: [("1", "0")],
    2: [("1", "0"), ("2", "0"), ("2", "1"), ("21", "0"), ("2", "10"), ("21", "10"),
        ("2(10)", "0"), ("2", "(21)0")],
}


def equivariant_rhombus(a: str, b: str, d: int) -> Piece:
    """The non-rotatable rhombus with SW = NE = a and SE = NW = b."""
    return rhombus(a, b, a, b, d)


@dataclass(frozen=True)
class PieceCatalog:
    d: int
    theory: str
    up: frozenset
    down: frozenset
    rhombi: frozenset = frozenset()
    monomial_rule: bool = False
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def triangles(self) -> list[Piece]:
        return sorted(self.up) + sorted(self.down)

    @property
    def k_only(self) -> list[Piece]:
        return [p for p in self.triangles if p.k_piece]

    def __len__(self):
        return len(self.up) + len(self.down) + len(self.rhombi)

    def all_pieces(self) -> list[Piece]:
        return self.triangles + sorted(self.rhombi)


def h_triangles(d: int) -> tuple[frozenset, frozenset]:
    ups = set()
    for base in _h_base(d):
        for t in rotations_up(*base):
            ups.add(up(*t, d))
    downs = {rotate180_up(p, d) for p in ups}
    return frozenset(ups), frozenset(downs)


@lru_cache(maxsize=None)
def catalog(d: int, theory: str) -> PieceCatalog:
    """The piece set for a cohomology theory on d-step flags."""
    if theory not in THEORIES:
        raise CatalogError(f"unknown theory {theory!r}")
    if d == 3 and theory != "H":
        raise CatalogError("d=3 catalogs beyond H come from discover_pieces")
    if d not in (1, 2, 3):
        raise CatalogError(f"unsupported d={d}")
    ups, downs = h_triangles(d)
    ups, downs = set(ups), set(downs)
    rh = set()
    if theory in ("K", "KT"):
        for p in k_pieces(d):
            (ups if p.kind == "up" else downs).add(p)
    if theory == "Kdual":
        for p in k_pieces(d):
            if p.kind == "up":
                downs.add(rotate180_up(p, d))
            else:
                ups.add(rotate180_down(p, d))
    if theory in ("HT", "KT"):
        rh = {equivariant_rhombus(a, b, d) for a, b in EQUIVARIANT_PAIRS[d]}
    return PieceCatalog(d, theory, frozenset(ups), frozenset(downs), frozenset(rh),
                        monomial_rule=theory == "KT")


def custom_catalog(d: int, theory: str, extra_triangles: Iterable[Piece]) -> PieceCatalog:
    """H triangles plus the given extra triangles (used by the discovery search)."""
    ups, downs = h_triangles(d)
    ups, downs = set(ups), set(downs)
    for p in extra_triangles:
        (ups if p.kind == "up" else downs).add(p)
    return PieceCatalog(d, theory, frozenset(ups), frozenset(downs))


# fugacities -----------------------------------------------------------------------------------

# Rhombi where the size/max comparison disagrees with the q -> 0 leading term
# of the tabulated d=2 R-matrix.  The table wins; d4verify re-derives this set.
MONOMIAL_OVERRIDES = {("20", "0", "21", "1"): False}


def size_max_rule(sw: str, se: str, ne: str, nw: str) -> bool:
    """The bare comparison: |W|+|Z| > |X|+|Y|, ties broken by max(Z) > max(Y)."""
    X, Y, Z, W = (parse_multinumber(s) for s in (sw, se, ne, nw))
    top, bottom = card(W) + card(Z), card(X) + card(Y)
    return top > bottom or (top == bottom and maxdigit(Z) > maxdigit(Y))


def monomial_applies(sw: str, se: str, ne: str, nw: str) -> bool:
    """Whether a two-triangle vertical rhombus (X,Y,Z,W) = (SW,SE,NE,NW) picks up u_j/u_i.

    Rhombi invariant under the 180 degree rotation (X = Z and Y = W) never do.
    Otherwise the size comparison decides, except for the R-matrix overrides.
    """
    if sw == ne and se == nw:
        return False
    hit = MONOMIAL_OVERRIDES.get((sw, se, ne, nw))
    if hit is not None:
        return hit
    return size_max_rule(sw, se, ne, nw)


@lru_cache(maxsize=None)
def _monomial(i: int, j: int) -> LaurentElem:
    return LaurentElem.monomial({f"u{j}": 1, f"u{i}": -1})


@lru_cache(maxsize=None)
def _equiv_weight(i: int, j: int, theory: str) -> LaurentElem:
    if theory == "HT":
        return LaurentElem.var(f"y{i}") - LaurentElem.var(f"y{j}")
    return LaurentElem.one() - _monomial(i, j)


def fugacity(piece: Piece, position: tuple[int, int] | None = None, theory: str = "K") -> LaurentElem:
    """Local weight of a piece.

    Triangles carry (-1)^inversion if they are K-pieces and 1 otherwise.  An
    equivariant rhombus at bottom positions (i, j) carries y_i - y_j (HT) or
    1 - u_j/u_i (KT).  A two-triangle vertical rhombus in KT, passed as a
    rhombus piece with a position, carries u_j/u_i or 1 by the monomial rule.
    """
    if piece.kind in ("up", "down"):
        if piece.k_piece:
            if theory not in ("K", "Kdual", "KT"):
                raise CatalogError(f"K-piece {piece} used in theory {theory}")
            return LaurentElem.const((-1) ** piece.inversion)
        return LaurentElem.one()
    if position is None:
        raise ValueError("rhombus fugacity needs its bottom positions (i, j)")
    i, j = position
    if not i < j:
        raise ValueError("positions must satisfy i < j")
    if not piece.rotatable:
        if theory not in ("HT", "KT"):
            raise CatalogError(f"equivariant rhombus used in theory {theory}")
        return _equiv_weight(i, j, theory)
    if theory == "KT" and monomial_applies(*piece.labels):
        return _monomial(i, j)
    return LaurentElem.one()


def vertical_pair(upper: Piece, lower: Piece, d: int) -> Piece:
    """The rotatable rhombus formed by up(r, k) over down(r+1, k)."""
    nw, _, ne = upper.labels
    sw, _, se = lower.labels
    return rhombus(sw, se, ne, nw, d, rotatable=True)


def vertical_rhombus_position(n: int, r: int, k: int) -> tuple[int, int]:
    """Bottom positions (i, j) of the rays from the vertical rhombus whose top half is up(r, k)."""
    return k + 1, n - r + k


# candidates for discovery ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def conserving_triangles(d: int) -> tuple[Piece, ...]:
    """All weight-conserving up and down triangles over the valid labels of d."""
    labels = lattice.enumerate_valid_labels(d)
    by_w = lattice.label_by_weight(d)
    out = []
    for X in labels:
        for Z in labels:
            nw, ne = print_multinumber(X), print_multinumber(Z)
            # up: f(S) = -tau f(NE) - tau^2 f(NW)
            ws = lattice.neg(lattice.add(lattice.tau(lattice.weight_of(X, d), 2),
                                         lattice.tau(lattice.weight_of(Z, d), 1)))
            if ws in by_w:
                out.append(up(nw, print_multinumber(by_w[ws]), ne, d))
            # down with SE = X, SW = Z: f(N) = -tau f(SW) - tau^2 f(SE)
            if ws in by_w:
                out.append(down(ne, print_multinumber(by_w[ws]), nw, d))
    return tuple(sorted(set(out)))


def k_candidates(d: int) -> list[Piece]:
    """Weight-conserving triangles with positive inversion, as fixed-orientation K-piece candidates."""
    out = []
    for p in conserving_triangles(d):
        if p.inversion >= 1:
            out.append(Piece(p.kind, p.labels, p.inversion, True, False))
    return out
