"""Puzzle enumeration and structure constants.

Geometry of a size-n puzzle: row r (0 at the top) holds up triangles up(r, k),
k = 0..r, and down triangles down(r, k), k = 0..r-1, with

    down(r, k).N  = up(r-1, k).S
    down(r, k).SW = up(r, k).NE
    down(r, k).SE = up(r, k+1).NW

The NW side carries lambda read from the bottom-left corner upward, the NE
side carries mu read from the top down, the S side carries nu read left to
right.  Rows are processed top to bottom; the state between rows is the tuple
of South labels of the upper row.  An equivariant rhombus occupies
up(r, k) and down(r+1, k) and leaves a token in the state.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .exactring import LaurentElem
from .labels import FlagShape, as_string, content, inversions, string_str
from .pieces import (Piece, PieceCatalog, catalog, fugacity, monomial_applies, rhombus,
                     vertical_rhombus_position)

ONE = LaurentElem.one()


@dataclass(frozen=True)
class Token:
    """Middle of an equivariant rhombus whose top half is in the row above."""
    piece: Piece


@dataclass
class PuzzleFilling:
    n: int
    lam: tuple
    mu: tuple
    nu: tuple
    cells: dict  # ("up"|"down", r, k) -> Piece; rhombi sit at both of their halves
    fugacity: LaurentElem
    inversion_sum: int
    theory: str = ""
    monomials: dict = field(default_factory=dict)  # (r, k) of the lower half -> factor

    def sort_key(self):
        return tuple(str(self.cells[c]) for c in sorted(self.cells))


class _Tables:
    def __init__(self, cat: PieceCatalog):
        self.cat = cat
        self.up_by_nw: dict[str, list[Piece]] = defaultdict(list)
        for p in sorted(cat.up):
            self.up_by_nw[p.labels[0]].append(p)
        self.down_by_n_sw: dict[tuple, Piece] = {}
        for p in sorted(cat.down):
            self.down_by_n_sw[(p.labels[1], p.labels[0])] = p
        self.rh_by_nw: dict[str, list[Piece]] = defaultdict(list)
        for p in sorted(cat.rhombi):
            self.rh_by_nw[p.labels[3]].append(p)
        self.kt = cat.monomial_rule


class PuzzleSolver:
    """Transfer-matrix enumeration of puzzles for one catalog and size."""

    def __init__(self, cat: PieceCatalog, n: int):
        self.cat = cat
        self.n = n
        self.t = _Tables(cat)
        self.theory = cat.theory
        self._cache: dict = {}

    # one row ---------------------------------------------------------------------------
    def transitions(self, r: int, state: tuple, left: str, right: str) -> list:
        """All fillings of row r below `state`: (new state, pieces, weight, inversion)."""
        key = (r, state, left, right)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out: list = []
        n, t = self.n, self.t
        last = r == n - 1

        def place_up(k: int, nw: str, acc: list, w: LaurentElem, inv: int, south: list):
            options = []
            for p in t.up_by_nw.get(nw, ()):
                s = p.labels[1]
                if last and len(s) != 1:
                    continue
                fug = fugacity(p, None, self.theory) if p.k_piece else ONE
                entry = (s, p.labels[0], p.labels[2]) if t.kt else s
                options.append((p, p.labels[2], entry, fug, p.inversion))
            if not last:
                for p in t.rh_by_nw.get(nw, ()):
                    i, j = vertical_rhombus_position(n, r, k)
                    options.append((p, p.labels[2], Token(p), fugacity(p, (i, j), self.theory), p.inversion))
            for p, ne, entry, fug, pinv in options:
                w2 = w if fug is ONE else w * fug
                if k == r:
                    if ne == right:
                        out.append((tuple(south + [entry]), tuple(acc + [p]), w2, inv + pinv))
                    continue
                place_down(k, ne, acc + [p], w2, inv + pinv, south + [entry])

        def place_down(k: int, sw: str, acc: list, w: LaurentElem, inv: int, south: list):
            above = state[k]
            if isinstance(above, Token):
                rp = above.piece
                if rp.labels[0] != sw:
                    return
                place_up(k + 1, rp.labels[1], acc + [rp], w, inv, south)
                return
            n_label = above[0] if t.kt else above
            p = t.down_by_n_sw.get((n_label, sw))
            if p is None:
                return
            fug = fugacity(p, None, self.theory) if p.k_piece else ONE
            if t.kt:
                _, unw, une = above
                se = p.labels[2]
                if monomial_applies(sw, se, une, unw):
                    i, j = vertical_rhombus_position(n, r - 1, k)
                    m = fugacity(rhombus(sw, se, une, unw, self.cat.d, rotatable=True), (i, j), "KT")
                    fug = m if fug is ONE else fug * m
            w2 = w if fug is ONE else w * fug
            place_up(k + 1, p.labels[2], acc + [p], w2, inv + p.inversion, south)

        place_up(0, left, [], ONE, 0, [])
        self._cache[key] = out
        return out

    # whole puzzle ----------------------------------------------------------------------
    def _boundary(self, lam, mu):
        n = self.n
        lefts = [str(lam[n - 1 - r]) for r in range(n)]
        rights = [str(mu[r]) for r in range(n)]
        return lefts, rights

    def layers(self, lam: Sequence[int], mu: Sequence[int]) -> list[dict]:
        """Forward pass: per row, state -> {inversion: weight}."""
        lefts, rights = self._boundary(lam, mu)
        cur: dict = {(): {0: ONE}}
        out = []
        for r in range(self.n):
            nxt: dict = defaultdict(dict)
            for state, by_inv in cur.items():
                for new, _, w, inv in self.transitions(r, state, lefts[r], rights[r]):
                    slot = nxt[new]
                    for i0, w0 in by_inv.items():
                        key = i0 + inv
                        val = w0 if w is ONE else w0 * w
                        slot[key] = slot[key] + val if key in slot else val
            cur = dict(nxt)
            out.append(cur)
        return out

    def expand(self, lam: Sequence[int], mu: Sequence[int]) -> dict:
        """nu -> {inversion sum: total fugacity}."""
        if self.n == 0:
            return {(): {0: ONE}}
        final = self.layers(lam, mu)[-1]
        res: dict = defaultdict(dict)
        for state, by_inv in final.items():
            nu = tuple(int(x[0] if self.t.kt else x) for x in state)
            slot = res[nu]
            for i, w in by_inv.items():
                slot[i] = slot[i] + w if i in slot else w
        out = {}
        for nu, by_inv in res.items():
            by_inv = {i: w for i, w in by_inv.items() if w}
            if by_inv:
                out[nu] = by_inv
        return out

    def fillings(self, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int] | None = None) -> list[PuzzleFilling]:
        n = self.n
        if n == 0:
            return [PuzzleFilling(0, (), (), (), {}, ONE, 0, self.theory)]
        lefts, rights = self._boundary(lam, mu)
        # forward reachability, then a backward pass keeping states that reach an admissible bottom
        reach = [{()}]
        for r in range(n):
            nxt = set()
            for s in reach[-1]:
                for new, *_ in self.transitions(r, s, lefts[r], rights[r]):
                    nxt.add(new)
            reach.append(nxt)

        def bottom_ok(s):
            got = tuple(int(x[0] if self.t.kt else x) for x in s)
            return nu is None or got == tuple(nu)
        good = [set() for _ in range(n + 1)]
        good[n] = {s for s in reach[n] if bottom_ok(s)}
        for r in range(n - 1, -1, -1):
            for s in reach[r]:
                if any(new in good[r + 1] for new, *_ in self.transitions(r, s, lefts[r], rights[r])):
                    good[r].add(s)
        out: list[PuzzleFilling] = []

        def rec(r, s, rows, w, inv):
            if r == n:
                out.append(self._assemble(lam, mu, s, rows, w, inv))
                return
            for new, pcs, w2, inv2 in self.transitions(r, s, lefts[r], rights[r]):
                if new in good[r + 1]:
                    rec(r + 1, new, rows + [pcs], w if w2 is ONE else w * w2, inv + inv2)
        if () in good[0]:
            rec(0, (), [], ONE, 0)
        out.sort(key=PuzzleFilling.sort_key)
        return out

    def _assemble(self, lam, mu, state, rows, w, inv) -> PuzzleFilling:
        cells = {}
        for r, pcs in enumerate(rows):
            it = iter(pcs)
            for k in range(r + 1):
                cells[("up", r, k)] = next(it)
                if k < r:
                    cells[("down", r, k)] = next(it)
        nu = tuple(int(x[0] if self.t.kt else x) for x in state)
        return PuzzleFilling(self.n, tuple(lam), tuple(mu), nu, cells, w, inv, self.theory)


# public API ---------------------------------------------------------------------------------

_solvers: dict = {}


def solver(d: int, theory: str, n: int, cat: PieceCatalog | None = None) -> PuzzleSolver:
    if cat is not None:
        return PuzzleSolver(cat, n)
    key = (d, theory, n)
    if key not in _solvers:
        _solvers[key] = PuzzleSolver(catalog(d, theory), n)
    return _solvers[key]


def _prepare(lam, mu, nu=None, d: int | None = None, shape: FlagShape | None = None):
    lam, mu = as_string(lam), as_string(mu)
    nu = None if nu is None else as_string(nu)
    if len(lam) != len(mu) or (nu is not None and len(nu) != len(lam)):
        raise ValueError("boundary strings must have equal length")
    strings = [lam, mu] + ([nu] if nu is not None else [])
    if d is None:
        d = shape.d if shape is not None else max(max(s, default=0) for s in strings)
        d = max(d, 1)
    if shape is not None and any(s not in shape for s in strings):
        raise ValueError(f"boundary strings do not have content {shape}")
    same = all(content(s, d) == content(lam, d) for s in strings)
    return lam, mu, nu, d, same


def enumerate_puzzles(theory: str, lam, mu, nu=None, d: int | None = None, shape: FlagShape | None = None,
                      cat: PieceCatalog | None = None) -> list[PuzzleFilling]:
    """All puzzles with NW = lam, NE = mu and (if given) S = nu."""
    lam, mu, nu, d, same = _prepare(lam, mu, nu, d, shape)
    if not same:
        return []
    return solver(d, theory, len(lam), cat).fillings(lam, mu, nu)


def expand_product(theory: str, lam, mu, d: int | None = None, shape: FlagShape | None = None,
                   cat: PieceCatalog | None = None, with_grading: bool = False) -> dict:
    """nu -> c^{lam,mu}_nu (nonzero terms only)."""
    lam, mu, _, d, same = _prepare(lam, mu, None, d, shape)
    if not same:
        return {}
    graded = solver(d, theory, len(lam), cat).expand(lam, mu)
    if with_grading:
        return graded
    out = {}
    for nu, by_inv in graded.items():
        tot = sum(by_inv.values(), LaurentElem.zero())
        if tot:
            out[nu] = tot
    return dict(sorted(out.items(), key=lambda kv: (inversions(kv[0]), kv[0])))


def structure_constant(theory: str, lam, mu, nu, d: int | None = None, shape: FlagShape | None = None,
                       cat: PieceCatalog | None = None) -> LaurentElem:
    lam, mu, nu, d, same = _prepare(lam, mu, nu, d, shape)
    if not same:
        return LaurentElem.zero()
    return expand_product(theory, lam, mu, d, cat=cat).get(tuple(nu), LaurentElem.zero())


def dual_structure_constant(theory: str, lam, mu, nu, d: int | None = None, shape: FlagShape | None = None) -> LaurentElem:
    """Constant of the dual basis from puzzles shaped like a down triangle.

    Turning such a puzzle by 180 degrees gives an ordinary puzzle built from the
    rotated pieces (the Kdual catalog) whose boundaries read right to left.
    """
    if theory not in ("K", "Kdual"):
        raise ValueError("the dual rule is implemented for nonequivariant K-theory")
    lam, mu, nu, d, same = _prepare(lam, mu, nu, d, shape)
    if not same:
        return LaurentElem.zero()
    return structure_constant("Kdual", lam[::-1], mu[::-1], nu[::-1], d)


def dual_expand_product(lam, mu, d: int | None = None) -> dict:
    lam, mu, _, d, same = _prepare(lam, mu, None, d)
    if not same:
        return {}
    raw = expand_product("Kdual", lam[::-1], mu[::-1], d)
    return {nu[::-1]: c for nu, c in raw.items()}


# rendering ----------------------------------------------------------------------------------

def render(f: PuzzleFilling) -> str:
    """ASCII picture: one line per row listing its pieces left to right."""
    if f.n == 0:
        return ""
    lines = [f"lambda={string_str(f.lam)} mu={string_str(f.mu)} nu={string_str(f.nu)} "
             f"fugacity={f.fugacity} inversions={f.inversion_sum}"]
    width = 0
    rows = []
    for r in range(f.n):
        cells = []
        for k in range(r + 1):
            cells.append(_cell_text(f.cells[("up", r, k)], "up"))
            if k < r:
                cells.append(_cell_text(f.cells[("down", r, k)], "down"))
        row = "  ".join(cells)
        rows.append(row)
        width = max(width, len(row))
    for row in rows:
        lines.append(row.center(width).rstrip())
    return "\n".join(lines)


def _cell_text(p: Piece, half: str) -> str:
    if p.kind == "rhombus":
        txt = "<>" + "/".join(p.labels) if half == "up" else "<>"
    else:
        txt = str(p)
    if p.inversion and (p.kind != "rhombus" or half == "up"):
        txt += f"[{p.inversion}]"
    return txt
