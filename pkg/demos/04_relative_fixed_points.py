"""
Fixed points of the component M_0 of relative quasimaps.

Each fixed point is a chain of bubbles following a Bruhat path, followed by
a Laumon fixed point carrying the remaining degree.  Counting them degree by
degree reproduces sum_u b_{w,u} v_{d - d(u-w)}.
"""

from relquasimap.qmrel import (
    enumerate_rel_fixed_points, graded_dim_direct, graded_dim_formula, node_weights,
)
from relquasimap.weyl import identity

lam = (3, 1)
print("n=2, lambda=(3,1): dimensions by degree")
for k in range(6):
    print(f"  d={k}: {graded_dim_direct(identity(2), lam, (k,))}")

lam = (2, 1, 0)
print("\nn=3, lambda=(2,1,0), d=(2,2):",
      graded_dim_direct(identity(3), lam, (2, 2)), "direct,",
      graded_dim_formula(identity(3), lam, (2, 2)), "formula")

print("\nnode smoothing weights vanish after specialization:")
bubbled = [p for p in enumerate_rel_fixed_points(identity(3), lam, (2, 2)) if p.chain.edges]
for p in bubbled[:5]:
    weights = node_weights(p.chain)
    print(f"  chain {p.chain.to_list()}")
    print(f"    weights {[str(w) for w in weights]} -> {[str(w.specialize(lam)) for w in weights]}")
