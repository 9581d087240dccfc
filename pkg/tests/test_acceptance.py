"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import itertools
import random
import time

import pytest
import sympy

from flagpuzzle import d4verify, lattice, oracle, pieces, puzzle
from flagpuzzle.discovery import discover_pieces
from flagpuzzle.exactring import LaurentElem, parse
from flagpuzzle.labels import FlagShape, inversions, print_multinumber, shapes, string_str

THEORIES = ("H", "HT", "K", "KT")

# label lists as printed with the pieces (d = 1, 2) and in the crystal figure (d = 3)
PAPER_LABELS = {
    1: {"0", "1", "10"},
    2: {"0", "1", "2", "10", "20", "21", "(21)0", "2(10)"},
    3: set(lattice.CRYSTAL_NODES),
}


def _grading_ok(f) -> bool:
    return f.inversion_sum == inversions(f.nu) - inversions(f.lam) - inversions(f.mu)


def _sign_ok(theory, lam, mu, table) -> bool:
    if theory != "K":
        return True
    for nu, c in table.items():
        k = inversions(nu) - inversions(lam) - inversions(mu)
        if c.constant_term() * (-1) ** k < 0:
            return False
    return True


# 1 ---------------------------------------------------------------------------------------------

def test_criterion_1_worked_example(verdict):
    t0 = time.perf_counter()
    u3u2 = parse("u3/u2")
    a = puzzle.structure_constant("KT", "0102", "0201", "0210", d=2)
    fills = puzzle.enumerate_puzzles("KT", "0201", "0102", "0210", d=2)
    b = sum((f.fugacity for f in fills), LaurentElem.zero())
    fugs = sorted(str(f.fugacity) for f in fills)
    want = sorted([str(LaurentElem.one()), str(-(LaurentElem.one() - u3u2))])
    elapsed = time.perf_counter() - t0
    ok = a == u3u2 and b == u3u2 and fugs == want and elapsed < 1.0
    assert verdict("1 worked d=2 KT example", ok, f"{a}; {b} from {fugs}; {elapsed:.2f}s")


# 2 ---------------------------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_2_oracle_equals_puzzle(verdict):
    t0 = time.perf_counter()
    total = bad = 0
    first = None
    for d in (1, 2):
        for sh in shapes(d, 5):
            for lam in sh.strings:
                for mu in sh.strings:
                    for th in THEORIES:
                        total += 1
                        got = puzzle.expand_product(th, lam, mu, d)
                        want = oracle.oracle_product(sh, th, lam, mu)
                        if got != want:
                            bad += 1
                            first = first or (th, string_str(lam), string_str(mu))
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed <= 600
    assert verdict("2 oracle == puzzle (d<=2, n<=5, H/HT/K/KT)", ok,
                   f"{total} products, {bad} mismatches{' e.g. ' + str(first) if first else ''}, {elapsed:.0f}s")


# 3 ---------------------------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_3_d3_cohomology(verdict):
    sh = FlagShape.of("103213", 3)
    rng = random.Random(3)
    S = list(sh.strings)
    pairs = [(rng.choice(S), rng.choice(S)) for _ in range(200)]
    bad = sum(puzzle.expand_product("H", lam, mu, 3) != oracle.oracle_product(sh, "H", lam, mu) for lam, mu in pairs)
    sub = sub_bad = 0
    for s in shapes(3, 5, allow_zero=True):
        if sum(1 for x in s.p if x) < 2:
            continue
        for lam in s.strings:
            for mu in s.strings:
                sub += 1
                sub_bad += puzzle.expand_product("H", lam, mu, 3) != oracle.oracle_product(s, "H", lam, mu)
    ok = bad == 0 and sub_bad == 0
    assert verdict("3 d=3 cohomology", ok,
                   f"content {sh}: {len(pairs)} random pairs, {bad} bad; subshapes n<=5: {sub} products, {sub_bad} bad")


# 4 ---------------------------------------------------------------------------------------------

GRAM = {1: "(a-3)**2", 2: "3*(a-2)**2", 3: "(2*a-3)**2", 4: "3*(a-1)**2", 5: "a**2", 6: "3*a**2"}


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5,
                               pytest.param(6, marks=pytest.mark.xfail(
                                   strict=True, reason="exact determinant is 3, not 3a^2; see the decisions ledger"))])
def test_criterion_4_gram_table(verdict, d):
    a = sympy.Symbol("a")
    got = lattice.gram_det_check(d)
    want = sympy.sympify(GRAM[d], locals={"a": a})
    ok = sympy.expand(got - want) == 0
    assert verdict(f"4 gram determinant d={d}", ok, f"a^-2d det G = {got}, table {want}")


# 5 ---------------------------------------------------------------------------------------------

def test_criterion_5_labels(verdict):
    parts = []
    ok = True
    for d, want in PAPER_LABELS.items():
        got = {print_multinumber(x) for x in lattice.enumerate_valid_labels(d)}
        same = got == want and len(got) == {1: 3, 2: 8, 3: 27}[d]
        # norm 2 identically in a: exactly the +-tau^k f_X
        n2 = lattice.count_norm2_vectors(d)
        ok &= same and n2 == 6 * len(want)
        parts.append(f"d={d}: {len(got)} labels, {n2} norm-2 vectors")
    e8 = lattice.count_norm2_vectors(4, 1)
    ok &= e8 == 240
    assert verdict("5 label classification", ok, "; ".join(parts) + f"; d=4 a=1: {e8}")


# 6 ---------------------------------------------------------------------------------------------

def test_criterion_6_appendix_a(verdict):
    reps = d4verify.run_appendix_a()
    limits = [r for r in reps if r.name.startswith("q")][0]
    det = limits.details
    ok = all(r.ok for r in reps)
    ok &= det["k_pieces_from_table"] == 13 and det["cases"]["equivariant"] == 8
    info = ", ".join(f"{r.name} {r.checked}" for r in reps)
    assert verdict("6 appendix A suites", ok, info + f"; K-pieces {det['k_pieces_from_table']}, "
                   f"equivariant {det['cases']['equivariant']}")


# 7 ---------------------------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_7_grading(verdict):
    n_puz = bad = bad_sign = 0
    cases = [("KT", "0102", "0201", 2), ("KT", "0201", "0102", 2)]
    for d in (1, 2):
        for sh in shapes(d, 5):
            for lam in sh.strings:
                for mu in sh.strings:
                    for th in THEORIES:
                        cases.append((th, lam, mu, d))
    sh3 = FlagShape.of("103213", 3)
    rng = random.Random(3)
    S = list(sh3.strings)
    cases += [("H", rng.choice(S), rng.choice(S), 3) for _ in range(200)]
    for th, lam, mu, d in cases:
        fills = puzzle.enumerate_puzzles(th, lam, mu, d=d)
        n_puz += len(fills)
        bad += sum(not _grading_ok(f) for f in fills)
        table = puzzle.expand_product(th, lam, mu, d)
        bad_sign += not _sign_ok(th, tuple(map(int, lam)), tuple(map(int, mu)), table)
    ok = bad == 0 and bad_sign == 0
    assert verdict("7 grading invariant", ok, f"{n_puz} puzzles, {bad} off-grade; {bad_sign} mixed-sign K tables")


# 8 ---------------------------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_8_pipe_dreams(verdict):
    total = bad = 0
    for n in range(1, 6):
        for s in itertools.product(range(4), repeat=n):
            total += 1
            bad += oracle.pipe_dream_sum(s) != oracle.grothendieck_statesum(s, 3)
    assert verdict("8 pipe dreams = state sums", bad == 0, f"{total} strings, {bad} bad")


# 9 ---------------------------------------------------------------------------------------------

def test_criterion_9_crystal(verdict):
    ok, bad, _ = lattice.verify_crystal()
    dyn = all(lattice.dynkin_adjacency(d) == lattice.expected_dynkin(d) for d in range(1, 5))
    ok = ok and dyn and len(lattice.CRYSTAL_EDGES) == 36
    assert verdict("9 crystal edges and Dynkin diagrams", ok, f"{len(lattice.CRYSTAL_EDGES)} edges, {len(bad)} bad")


# 10 --------------------------------------------------------------------------------------------

def test_criterion_10_discovery(verdict):
    r1 = discover_pieces(1, threads=1)
    r2 = discover_pieces(2, threads=1)
    ok = set(r1.pieces) == set(pieces.k_pieces(1)) and set(r2.pieces) == set(pieces.k_pieces(2))
    assert verdict("10 discovery regression", ok,
                   f"d=1 {[str(p) for p in r1.pieces]}; d=2 {len(r2)} pieces, "
                   f"{r2.report['minimal_sets']} minimal sets on n<={r2.report['max_n']}")


# 11 --------------------------------------------------------------------------------------------

@pytest.mark.slow
@pytest.mark.xfail(strict=False, reason="stretch goal; see the decisions ledger")
def test_criterion_11_d3_k_catalog(verdict):
    from flagpuzzle.discovery import DiscoveryError, default_corpus
    try:
        res = discover_pieces(3, corpus=default_corpus(3, 5), budget=3_000_000, threads=1, max_solutions=1)
    except DiscoveryError as e:
        verdict("11 d=3 K catalog (stretch)", False, str(e))
        raise
    c = puzzle.structure_constant("K", "103213", "103213", "323011", d=3, cat=res.catalog)
    ok = len(res) == 151 and c == LaurentElem.const(4)
    assert verdict("11 d=3 K catalog (stretch)", ok,
                   f"{len(res)} pieces (want 151) from {res.report['candidates_seen']}/{res.report['candidates']} "
                   f"candidates seen on n<={res.report['max_n']}; c = {c} (want 4)")
