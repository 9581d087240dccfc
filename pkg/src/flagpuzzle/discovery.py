"""Search for K-theory piece sets that reproduce the oracle.

Every puzzle of the corpus is enumerated once against H plus *all* candidate
triangles.  A candidate subset S then contributes exactly the puzzles whose
K-pieces lie in S, so the search itself never touches a puzzle again: each
(lam, mu, nu) becomes a constraint sum_{P : used(P) <= S} sign(P) = c_K.

The subset search is a depth-first walk that tries "exclude" before "include".
Candidates are visited from high to low inversion, so the first consistent set
found is minimal under inclusion and keeps low-inversion pieces where there
is a choice.
"""
from __future__ import annotations

import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .labels import FlagShape, shapes
from .pieces import Piece, PieceCatalog, custom_catalog, k_candidates

DEFAULT_BUDGET = 2_000_000


class DiscoveryError(RuntimeError):
    pass


@dataclass
class DiscoveryResult:
    d: int
    pieces: tuple
    catalog: PieceCatalog
    report: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.pieces)


def default_corpus(d: int, n_max: int | None = None) -> list[tuple[FlagShape, tuple, tuple]]:
    """All (shape, lam, mu) with n <= n_max on shapes with at least two nonzero parts.

    Shapes with a zero part matter: the K-pieces whose three labels agree only
    show up once some digit is absent from the boundary.
    """
    if n_max is None:
        n_max = {1: 5, 2: 5}.get(d, 4)
    out = []
    for sh in shapes(d, n_max, allow_zero=True):
        if sum(1 for x in sh.p if x) < 2:
            continue
        for lam in sh.strings:
            for mu in sh.strings:
                out.append((sh, lam, mu))
    return out


def _case_terms(args):
    d, cands, sh, lam, mu = args
    from . import oracle
    index = {p: i for i, p in enumerate(cands)}
    solver = _solver_cache(d, cands, sh.n)
    by_nu: dict = defaultdict(Counter)
    for f in solver.fillings(lam, mu):
        mask = 0
        sign = 1
        for p in f.cells.values():
            i = index.get(p)
            if i is not None:
                mask |= 1 << i
                if p.inversion % 2:
                    sign = -sign
        by_nu[f.nu][mask] += sign
    target = {nu: int(c.constant_term()) for nu, c in oracle.oracle_product(sh, "K", lam, mu).items()}
    rows = []
    for nu in set(by_nu) | set(target):
        terms = [(m, c) for m, c in by_nu.get(nu, {}).items() if c]
        rows.append(((lam, mu, nu), tuple(terms), target.get(nu, 0)))
    return rows


_SOLVERS: dict = {}


def _solver_cache(d, cands, n):
    from .puzzle import PuzzleSolver
    key = (d, n, len(cands))
    if key not in _SOLVERS:
        _SOLVERS[key] = PuzzleSolver(custom_catalog(d, "K", cands), n)
    return _SOLVERS[key]


def build_constraints(d: int, cands: Sequence[Piece], corpus: Iterable, threads: int = 1) -> list:
    jobs = [(d, tuple(cands), sh, tuple(lam), tuple(mu)) for sh, lam, mu in corpus]
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            chunks = list(ex.map(_case_terms, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        chunks = [_case_terms(j) for j in jobs]
    return [row for chunk in chunks for row in chunk]


class _Search:
    def __init__(self, m: int, constraints: list, budget: int):
        self.m = m
        self.budget = budget
        self.nodes = 0
        self.cons = []
        self.watch = defaultdict(list)  # variable -> constraints mentioning it
        self.exhausted = False
        for key, terms, target in constraints:
            k = len(self.cons)
            self.cons.append((key, terms, target))
            seen = 0
            for mask, _ in terms:
                seen |= mask
            for i in range(m):
                if seen >> i & 1:
                    self.watch[i].append(k)

    @staticmethod
    def feasible(terms, target, inc: int, exc: int) -> bool:
        lo = hi = 0
        for mask, c in terms:
            if mask & exc:
                continue
            if mask & ~inc == 0:
                lo += c
                hi += c
            elif c < 0:
                lo += c
            else:
                hi += c
        return lo <= target <= hi

    def initial_ok(self) -> list:
        return [key for key, terms, target in self.cons if not self.feasible(terms, target, 0, 0)]

    def minimal_sets(self, limit: int) -> list[int]:
        """Up to `limit` inclusion-minimal consistent subsets, as bitmasks, in search order."""
        bad = self.initial_ok()
        if bad:
            raise DiscoveryError(f"{len(bad)} corpus constants are out of reach of any candidate subset, e.g. {bad[0]}")
        found: list[int] = []
        # a candidate no corpus puzzle uses can only be dropped by a minimal set
        free = 0
        for i in range(self.m):
            if not self.watch[i]:
                free |= 1 << i
        try:
            self._dfs(0, 0, free, found, limit)
        except DiscoveryError:
            if not found:
                raise
            self.exhausted = True
        return found

    def _dfs(self, pos, inc, exc, found, limit):
        self.nodes += 1
        if self.nodes > self.budget:
            raise DiscoveryError(f"search budget of {self.budget} nodes exhausted")
        # any completion would contain an earlier solution
        if any(f & inc == f for f in found):
            return
        if pos == self.m:
            found.append(inc)
            return
        if exc >> pos & 1:
            self._dfs(pos + 1, inc, exc, found, limit)
            return
        for choose in (False, True):
            inc2 = inc | (1 << pos) if choose else inc
            exc2 = exc if choose else exc | (1 << pos)
            if all(self.feasible(self.cons[k][1], self.cons[k][2], inc2, exc2) for k in self.watch[pos]):
                self._dfs(pos + 1, inc2, exc2, found, limit)
                if len(found) >= limit:
                    return


def _threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("PUZZLE_THREADS", "1") or 1)
    return max(1, threads)


def _reorder(cands: list, rows: list) -> tuple[list, list]:
    """Visit candidates in the order small puzzles first need them, so constraints close early."""
    rows = sorted(rows, key=lambda r: len(r[0][0]))
    first = [len(rows)] * len(cands)
    for k, (_, terms, _) in enumerate(rows):
        for mask, _ in terms:
            i = 0
            while mask:
                if mask & 1 and first[i] > k:
                    first[i] = k
                mask >>= 1
                i += 1
    order = sorted(range(len(cands)), key=lambda i: (first[i], -cands[i].inversion, cands[i].kind, cands[i].labels))
    new_bit = {old: 1 << new for new, old in enumerate(order)}

    def remap(mask):
        out = 0
        for old, bit in new_bit.items():
            if mask >> old & 1:
                out |= bit
        return out
    rows = [(key, tuple((remap(m), c) for m, c in terms), target) for key, terms, target in rows]
    return [cands[i] for i in order], rows


def table_preferred(d: int) -> set | None:
    """Triangles admissible in the q -> 0 limit of a tabulated R-matrix, if there is one."""
    if d != 2:
        return None
    from .d4verify import admissible_triangles
    ups, downs = admissible_triangles()
    return {("up", k) for k in ups} | {("down", k) for k in downs}


def discover_pieces(d: int, theory: str = "K", corpus: Iterable | None = None, budget: int = DEFAULT_BUDGET,
                    threads: int | None = None, candidates: Sequence[Piece] | None = None,
                    max_solutions: int = 64, prefer: set | None = None) -> DiscoveryResult:
    """A minimal set of K-pieces, on top of the H triangles, that matches the oracle on `corpus`.

    Ties between minimal sets go to the lower total inversion, then to the set
    with more triangles in `prefer` (default: the admissible triangles of the
    tabulated R-matrix, d=2 only), then to search order.
    """
    if theory != "K":
        raise ValueError("discovery searches nonequivariant K-pieces only")
    corpus = default_corpus(d) if corpus is None else list(corpus)
    cands = list(k_candidates(d) if candidates is None else candidates)
    cands.sort(key=lambda p: (-p.inversion, p.kind, p.labels))
    if prefer is None:
        prefer = table_preferred(d) or set()
    rows = build_constraints(d, cands, corpus, _threads(threads))
    cands, rows = _reorder(cands, rows)
    search = _Search(len(cands), rows, budget)
    sols = search.minimal_sets(max_solutions)
    if not sols:
        raise DiscoveryError("no candidate subset matches the corpus")
    as_sets = [tuple(sorted(p for i, p in enumerate(cands) if mask >> i & 1)) for mask in sols]

    def rank(k):
        ps = as_sets[k]
        return (sum(p.inversion for p in ps), -sum((p.kind, p.labels) in prefer for p in ps), k)
    best = min(range(len(sols)), key=rank)
    chosen = as_sets[best]
    touched = 0
    for _, terms, _ in rows:
        for mask, _ in terms:
            touched |= mask
    report = {
        "corpus_cases": len(corpus),
        "constraints": len(rows),
        "nonzero_constants": sum(1 for r in rows if r[2]),
        "candidates": len(cands),
        "candidates_seen": bin(touched).count("1"),
        "nodes": search.nodes,
        "max_n": max((sh.n for sh, _, _ in corpus), default=0),
        "minimal_sets": len(sols),
        "unique": len(sols) == 1,
        "search_complete": len(sols) < max_solutions and not search.exhausted,
        "alternatives": [[str(p) for p in ps] for k, ps in enumerate(as_sets) if k != best],
    }
    return DiscoveryResult(d, chosen, custom_catalog(d, "K", chosen), report)
