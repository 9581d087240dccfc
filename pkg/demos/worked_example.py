"""Multiply two Schubert classes on a 2-step flag manifold (n = 4) with puzzles, then check against the oracle.

Run:  python3 demos/worked_example.py
"""
from flagpuzzle import oracle, puzzle
from flagpuzzle.labels import FlagShape, string_str

lam, mu = "0201", "0102"
shape = FlagShape.of(lam, 2)
print(f"shape {shape}, {len(shape.strings)} Schubert classes")

# every KT puzzle with this boundary, grouped by its south side
for f in puzzle.enumerate_puzzles("KT", lam, mu, d=2):
    print(puzzle.render(f))
    print()

print("puzzle expansion vs. localization oracle:")
for theory in ("H", "HT", "K", "KT"):
    got = puzzle.expand_product(theory, lam, mu, 2)
    want = oracle.oracle_product(shape, theory, lam, mu)
    terms = ", ".join(f"[{string_str(nu)}] {c}" for nu, c in got.items())
    print(f"  {theory:2}  {'ok ' if got == want else 'BAD'}  {terms}")
