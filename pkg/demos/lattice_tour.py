"""Edge labels as short vectors of a lattice, and where the d=4 case lands.

Run:  python3 demos/lattice_tour.py
"""
from flagpuzzle import lattice
from flagpuzzle.labels import print_multinumber

for d in (1, 2, 3):
    labels = [print_multinumber(m) for m in lattice.enumerate_valid_labels(d)]
    print(f"d={d}: {len(labels)} labels  {' '.join(labels)}")
    print(f"      norm-2 vectors (all a): {lattice.count_norm2_vectors(d)}")

print()
for d in range(1, 7):
    print(f"a^-2d det G_{d} = {lattice.gram_det_check(d)}")

print()
print("d=4 at a=1, modulo the radical:", lattice.count_norm2_vectors(4, 1), "roots")
ok, bad, n = lattice.verify_crystal()
print(f"d=3 crystal: {len(lattice.CRYSTAL_EDGES)} edges, {'consistent' if ok else bad}")
