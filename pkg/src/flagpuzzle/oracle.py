"""Structure constants without puzzles.

Schubert classes come from a square lattice model whose crossings are the
nilHecke R-matrix.  Rows y = 1..n (top to bottom) carry t_y and enter from
the left with the weakly increasing string omega; columns x = 1..n carry u_x
and enter from the bottom with the label d; right ends must read d and the top
edge reads lambda.  A vertex with left label i and bottom label j either keeps
the labels (top i, right j; weight 1 if i <= j, t_y/u_x if i > j) or, when
i < j, swaps them (top j, right i; weight 1 - t_y/u_x).

Restricting to the fixed point sigma sets t_y = u_{sigma(y)}; structure
constants then follow from a triangular solve along the Bruhat order.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Mapping, Sequence

from .exactring import LaurentElem
from .labels import FlagShape, as_string, inversions, permutation_of

ZERO = LaurentElem.zero()
ONE = LaurentElem.one()


# nilHecke R-matrix ----------------------------------------------------------------------------

def nilhecke(i: int, j: int, k: int, l: int) -> LaurentElem:
    """Entry (i, j) -> (k, l) of the nilHecke R-matrix in u1, u2."""
    ratio = LaurentElem.monomial({"u1": 1, "u2": -1})
    if (k, l) == (i, j):
        return ONE if i <= j else ratio
    if (k, l) == (j, i) and i < j:
        return ONE - ratio
    return ZERO


def nilhecke_table(d: int) -> dict:
    out = {}
    for i, j, k, l in product(range(d + 1), repeat=4):
        v = nilhecke(i, j, k, l)
        if v:
            out[(i, j, k, l)] = v
    return out


# the lattice model ---------------------------------------------------------------------------

def _transfer(n: int, d: int, omega: Sequence[int], elbow_w: Callable, cross_w: Callable,
              mul: Callable, add: Callable, one, track_crosses: bool = False) -> dict:
    """Sum over grid configurations, keyed by the top labels (and the cross count if tracked).

    elbow_w(y, x) weighs an i > j pass-through, cross_w(y, x) a swap; either may
    return None to forbid the vertex.
    """
    state: dict = {(tuple([d] * n), 0): one}
    for y in range(n, 0, -1):
        left = omega[y - 1]
        nxt: dict = defaultdict(lambda: None)
        for (below, nc), w in state.items():
            # sweep the row left to right
            partial = [((), left, w, nc)]
            for x in range(1, n + 1):
                j = below[x - 1]
                grown = []
                for tops, i, pw, c in partial:
                    if i <= j:
                        grown.append((tops + (i,), j, pw, c))
                    else:
                        ew = elbow_w(y, x)
                        if ew is not None:
                            grown.append((tops + (i,), j, mul(pw, ew), c))
                    if i < j:
                        cw = cross_w(y, x)
                        if cw is not None:
                            grown.append((tops + (j,), i, mul(pw, cw), c + 1))
                partial = grown
            for tops, h, pw, c in partial:
                if h != d:
                    continue
                key = (tops, c if track_crosses else 0)
                prev = nxt[key]
                nxt[key] = pw if prev is None else add(prev, pw)
        state = {k: v for k, v in nxt.items() if v is not None}
    return state


def _mono(num: str, den: str) -> LaurentElem:
    return ONE if num == den else LaurentElem.monomial({num: 1, den: -1})


def _laurent_ops():
    return (lambda a, b: a if b is ONE else a * b), (lambda a, b: a + b)


@lru_cache(maxsize=None)
def _omega(p: tuple) -> tuple:
    return FlagShape(p).omega


@lru_cache(maxsize=64)
def all_statesums(shape: FlagShape) -> dict:
    """lambda -> double Grothendieck polynomial in t's and u's, for every lambda of the shape."""
    n, d = shape.n, shape.d
    mul, add = _laurent_ops()
    elbow = lambda y, x: _mono(f"t{y}", f"u{x}")
    cross = lambda y, x: ONE - _mono(f"t{y}", f"u{x}")
    raw = _transfer(n, d, _omega(shape.p), elbow, cross, mul, add, ONE)
    return {tops: w for (tops, _), w in raw.items() if w}


def grothendieck_statesum(lam: Sequence[int], d: int | None = None) -> LaurentElem:
    lam = as_string(lam)
    shape = FlagShape.of(lam, d)
    return all_statesums(shape).get(lam, ZERO)


# pipe dreams ----------------------------------------------------------------------------------

def pipe_dreams(n: int):
    """Yield (crosses, absorbable, connectivity) for every n x n pipe dream.

    Crosses live in cells (i, j) with i + j <= n (rows from the top, columns
    from the left, 1-indexed).  Connectivity is traced with absorbable
    crossings treated as elbows.
    """
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n]
    for mask in range(1 << len(cells)):
        crosses = {cells[b] for b in range(len(cells)) if mask >> b & 1}
        absorbable, pi = _trace(n, crosses)
        if pi is not None:
            yield crosses, absorbable, pi


def _trace(n: int, crosses: set):
    # pipe ids: ("L", i) enters row i from the left, ("B", j) enters column j from the bottom
    horiz = {}
    vert = {j: ("B", j) for j in range(1, n + 1)}
    met: set = set()
    absorbable = set()
    for i in range(n, 0, -1):
        h = ("L", i)
        for j in range(1, n + 1):
            v = vert[j]
            if (i, j) in crosses:
                pair = frozenset((h, v))
                if pair in met:
                    absorbable.add((i, j))
                    h, vert[j] = v, h  # behaves as an elbow: left goes up, bottom goes right
                else:
                    met.add(pair)
                    vert[j] = v  # straight through
            else:
                h, vert[j] = v, h
        horiz[i] = h
    pi = [None] * n
    for j in range(1, n + 1):
        p = vert[j]
        if p[0] != "L":
            return absorbable, None
        pi[p[1] - 1] = j
    return absorbable, tuple(pi)


def pipe_dream_sum(lam: Sequence[int]) -> LaurentElem:
    """Sum over pipe dreams of connectivity pi(lambda) of (-1)^#absorbable prod (1 - t_i/u_j)."""
    lam = as_string(lam)
    return _dream_sum(permutation_of(lam))


@lru_cache(maxsize=None)
def _dreams_by_connectivity(n: int) -> dict:
    out = defaultdict(list)
    for crosses, absorbable, conn in pipe_dreams(n):
        out[conn].append((tuple(sorted(crosses)), len(absorbable)))
    return dict(out)


@lru_cache(maxsize=None)
def _dream_sum(pi: tuple) -> LaurentElem:
    total = ZERO
    for crosses, n_abs in _dreams_by_connectivity(len(pi)).get(pi, ()):
        w = LaurentElem.const((-1) ** n_abs)
        for (i, j) in crosses:
            w = w * (ONE - _mono(f"t{i}", f"u{j}"))
        total = total + w
    return total


# restrictions ---------------------------------------------------------------------------------

def restrict(lam: Sequence[int], sigma, d: int | None = None) -> LaurentElem:
    """S^lambda at the fixed point sigma (a string of the same content or a permutation)."""
    lam = as_string(lam)
    perm = _as_perm(sigma)
    return grothendieck_statesum(lam, d).substitute({f"t{y}": LaurentElem.var(f"u{perm[y - 1]}") for y in range(1, len(lam) + 1)})


def _as_perm(sigma) -> tuple:
    if isinstance(sigma, str):
        return permutation_of(sigma)
    sigma = tuple(sigma)
    if sorted(sigma) == list(range(1, len(sigma) + 1)) and 0 not in sigma:
        return sigma
    return permutation_of(sigma)


@lru_cache(maxsize=None)
def restriction_table(p: tuple) -> dict:
    """sigma -> {lambda: S^lambda|_sigma} (nonzero entries) for every fixed point of the shape."""
    shape = FlagShape(p)
    n, d = shape.n, shape.d
    mul, add = _laurent_ops()
    table = {}
    for s in shape.strings:
        perm = permutation_of(s)
        tv = [f"u{perm[y - 1]}" for y in range(1, n + 1)]
        elbow = lambda y, x: _mono(tv[y - 1], f"u{x}")
        cross = lambda y, x: None if tv[y - 1] == f"u{x}" else ONE - _mono(tv[y - 1], f"u{x}")
        raw = _transfer(n, d, shape.omega, elbow, cross, mul, add, ONE)
        table[s] = {tops: w for (tops, _), w in raw.items() if w}
    return table


def _solve(strings, table, lam, mu, mul, sub, div, nonzero) -> dict:
    c: dict = {}
    for s in strings:
        row = table[s]
        a, b = row.get(lam), row.get(mu)
        if a is None or b is None:
            continue
        acc = mul(a, b)
        for nu, cv in c.items():
            r = row.get(nu)
            if r is not None:
                acc = sub(acc, mul(cv, r))
        if nonzero(acc):
            diag = row.get(s)
            if diag is None:
                raise ArithmeticError(f"vanishing diagonal restriction at {s}")
            c[s] = div(acc, diag)
    return c


def oracle_constants(shape: FlagShape, lam, mu) -> dict:
    """nu -> equivariant K-theory structure constant c^{lam,mu}_nu."""
    lam, mu = as_string(lam), as_string(mu)
    if lam not in shape or mu not in shape:
        raise ValueError("strings do not match the shape")
    table = restriction_table(shape.p)
    return _solve(shape.strings, table, lam, mu, lambda a, b: a * b, lambda a, b: a - b,
                  lambda a, b: a.divide_exact(b), bool)


# specializations ------------------------------------------------------------------------------

def grade(lam, mu, nu) -> int:
    return inversions(lam) + inversions(mu) - inversions(nu)


def specialize_one(c: LaurentElem, mode: str, k: int) -> LaurentElem:
    """One K_T constant of grade k in the theory `mode` (KT, K, HT or H)."""
    if mode == "KT":
        return c
    if mode == "K":
        return LaurentElem.const(c.evaluate({v: 1 for v in c.variables}))
    if mode == "HT":
        return c.exp_truncate(k) if k >= 0 else ZERO
    if mode == "H":
        if k != 0:
            return ZERO
        return LaurentElem.const(c.evaluate({v: 1 for v in c.variables}))
    raise ValueError(f"unknown mode {mode!r}")


def specialize(table: Mapping, mode: str, lam, mu) -> dict:
    lam, mu = as_string(lam), as_string(mu)
    out = {}
    for nu, c in table.items():
        v = specialize_one(c, mode, grade(lam, mu, nu))
        if v:
            out[nu] = v
    return out


def oracle_product(shape: FlagShape, theory: str, lam, mu) -> dict:
    """The oracle's nu-expansion of S^lam S^mu in theory H, HT, K or KT."""
    if theory == "H" and shape.d >= 3:
        return {nu: LaurentElem.const(v) for nu, v in oracle_h_constants(shape, lam, mu).items()}
    return specialize(oracle_constants(shape, lam, mu), theory, lam, mu)


# cohomology by evaluation -----------------------------------------------------------------------

DEFAULT_POINTS = (Fraction(3), Fraction(-7), Fraction(11), Fraction(2), Fraction(-5), Fraction(13),
                  Fraction(17), Fraction(-1), Fraction(23))


@lru_cache(maxsize=None)
def h_restriction_table(p: tuple, points: tuple = DEFAULT_POINTS) -> dict:
    """sigma -> {lambda: H_T restriction at y = points}, via minimal-cross configurations.

    At first order 1 - t/u becomes y_x - y_{sigma(row)} and t/u becomes 1; the
    cohomology class is the part with exactly l(lambda) crossings.
    """
    shape = FlagShape(p)
    n, d = shape.n, shape.d
    ys = points[:n]
    mul = lambda a, b: a * b
    add = lambda a, b: a + b
    table = {}
    for s in shape.strings:
        perm = permutation_of(s)
        elbow = lambda y, x: Fraction(1)
        cross = lambda y, x: None if perm[y - 1] == x else ys[x - 1] - ys[perm[y - 1] - 1]
        raw = _transfer(n, d, shape.omega, elbow, cross, mul, add, Fraction(1), track_crosses=True)
        row = {}
        for (tops, c), w in raw.items():
            if c == inversions(tops) and w:
                row[tops] = w
        table[s] = row
    return table


def oracle_h_constants(shape: FlagShape, lam, mu, points: tuple = DEFAULT_POINTS) -> dict:
    """Ordinary cohomology constants: the grade-0 part of the H_T solve at a numeric point."""
    lam, mu = as_string(lam), as_string(mu)
    table = h_restriction_table(shape.p, points)
    c = _solve(shape.strings, table, lam, mu, lambda a, b: a * b, lambda a, b: a - b,
               lambda a, b: a / b, bool)
    out = {}
    for nu, v in c.items():
        if grade(lam, mu, nu) == 0:
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral cohomology constant {v} at {nu}")
            out[nu] = int(v)
    return out


# dual basis via the pairing ----------------------------------------------------------------------

def _inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise ArithmeticError("pairing matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        f = A[c][c]
        A[c] = [x / f for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                g = A[r][c]
                A[r] = [x - g * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


@lru_cache(maxsize=None)
def k_table(p: tuple) -> dict:
    """(lam, mu) -> {nu: int}: all nonequivariant K constants of the shape."""
    shape = FlagShape(p)
    out = {}
    for lam in shape.strings:
        for mu in shape.strings:
            if (mu, lam) in out:
                out[(lam, mu)] = out[(mu, lam)]
                continue
            kt = oracle_constants(shape, lam, mu)
            out[(lam, mu)] = {nu: int(c.evaluate({v: 1 for v in c.variables})) for nu, c in kt.items()}
            out[(lam, mu)] = {nu: v for nu, v in out[(lam, mu)].items() if v}
    return out


def pairing_matrix(shape: FlagShape) -> list[list[int]]:
    """P[lam][kappa] = <S^lam S^kappa> = sum_nu c^nu_{lam kappa}."""
    kt = k_table(shape.p)
    S = shape.strings
    return [[sum(kt[(a, b)].values()) for b in S] for a in S]


def pairing_dual_constants(shape: FlagShape, lam, mu) -> dict:
    """nu -> d^nu_{lam mu} with S_lam S_mu = sum d^nu S_nu, S_mu the dual basis under the pairing."""
    lam, mu = as_string(lam), as_string(mu)
    S = shape.strings
    idx = {s: i for i, s in enumerate(S)}
    P = pairing_matrix(shape)
    Q = _inverse(P)
    kt = k_table(shape.p)
    # S_lam = sum_kappa Q[kappa][lam] S^kappa, and S^rho = sum_nu P[rho][nu] S_nu
    out = defaultdict(Fraction)
    il, im = idx[lam], idx[mu]
    for a in S:
        qa = Q[idx[a]][il]
        if not qa:
            continue
        for b in S:
            qb = Q[idx[b]][im]
            if not qb:
                continue
            for rho, c in kt[(a, b)].items():
                row = P[idx[rho]]
                for nu in S:
                    if row[idx[nu]]:
                        out[nu] += qa * qb * c * row[idx[nu]]
    res = {}
    for nu, v in out.items():
        if v:
            if v.denominator != 1:
                raise ArithmeticError("non-integral dual constant")
            res[nu] = int(v)
    return res
