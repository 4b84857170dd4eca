"""
Counting increasing paths in the Bruhat graph of S_3 and S_4.

The two edge conventions differ sharply: with every reflection allowed there
are 5 paths from the identity to the longest element of S_3; with simple
reflections only there are 2, one per reduced word.
"""

from relquasimap.weyl import identity, longest_element, path_count, permutations_by_length

for n in (3, 4):
    e, w0 = identity(n), longest_element(n)
    print(f"S_{n}: paths e -> w0 with all reflections: {path_count(e, w0)}, "
          f"simple only: {path_count(e, w0, 'simple')}")

print("\nrow b_{e,u} in S_3, ordered by length")
for u in permutations_by_length(3):
    print(f"  {u}  len={u.length()}  all={path_count(identity(3), u)}  "
          f"simple={path_count(identity(3), u, 'simple')}")
