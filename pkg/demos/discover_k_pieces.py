"""Recover the K-theory pieces from the oracle alone.

Start from the cohomology triangles, allow every weight-conserving triangle
with positive inversion, and ask which minimal subsets reproduce the oracle's
K-theory constants on all small puzzles.

Run:  python3 demos/discover_k_pieces.py
"""
from flagpuzzle import pieces
from flagpuzzle.discovery import discover_pieces

for d in (1, 2):
    res = discover_pieces(d, threads=1)
    r = res.report
    print(f"d={d}: {r['candidates']} candidates, {r['constraints']} constraints up to n={r['max_n']}")
    print(f"  {len(res)} pieces, {r['minimal_sets']} minimal set(s), search complete: {r['search_complete']}")
    for p in res.pieces:
        print("   ", p)
    print("  same as the printed pieces:", set(res.pieces) == set(pieces.k_pieces(d)))
    for alt in r["alternatives"]:
        print("  runner-up:", " ".join(alt))
