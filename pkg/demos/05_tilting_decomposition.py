"""
Decomposing H_{lam,w} into tilting modules.

The multiplicities come from a unitriangular solve against values of KL
polynomials at 1, and agree with the closed alternating sum.  With
all-reflection edges the rows are non-negative and the characters match on
a box; with simple-reflection edges negative entries appear already in S_3.
"""

from relquasimap.exceptions import VerificationError
from relquasimap.repn import (
    check_decomposition, tilting_multiplicities, tilting_multiplicities_triangular,
)
from relquasimap.weyl import permutations, permutations_by_length

lam = (2, 1, 0)
order = permutations_by_length(3)
print("columns:", " ".join(str(y) for y in order))
for w in permutations(3):
    row = tilting_multiplicities(w, lam)
    entries = [row.entries[y] for y in order]
    print(f"  w={w}: {entries}  decomposition on (4,4): {check_decomposition(w, lam, (4, 4))}")

print("\nsimple-reflection edges:")
for w in permutations(3):
    row = tilting_multiplicities_triangular(w, "simple")
    print(f"  w={w}: {[row[y] for y in order]}")
try:
    tilting_multiplicities(permutations(3)[1], lam, mode="simple")
except VerificationError as exc:
    print("  rejected:", exc, exc.counterexample)
