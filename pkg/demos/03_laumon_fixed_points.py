"""
Torus-fixed points of Laumon quasimap spaces.

Fixed points in degree d are triangular arrays with prescribed row sums and
weakly decreasing columns.  Their number is the Kostant partition function,
and the tangent character at each point has 2|d| weights.
"""

from relquasimap.laumon import (
    count_v, enumerate_fixed_points, kostant_partition, tangent_character,
)
from relquasimap.weyl import identity

d = (2, 1)
print(f"fixed points for n=3, d={d}:")
for point in enumerate_fixed_points(3, identity(3), d):
    print("  rows", point.rows)
    for term in tangent_character(point).to_list():
        print("     ", term)

print("\ncount vs Kostant, n=4")
for d in [(1, 1, 1), (2, 2, 2), (3, 1, 2)]:
    print(f"  d={d}: {count_v(4, d)} == {kostant_partition(4, d)}")
