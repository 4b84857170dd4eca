"""
Kazhdan-Lusztig polynomials of S_4 by two independent routes.

Everything is trivial except below the two singular Schubert varieties,
indexed by 3412 and 4231, where P = 1 + q.  The inversion formula is then
checked exhaustively.
"""

import itertools

from relquasimap.kl import kl_polynomial, kl_polynomial_from_r, verify_inverse_kl
from relquasimap.weyl import permutations

group = permutations(4)
for u, w in itertools.product(group, repeat=2):
    p = kl_polynomial(u, w)
    assert p == kl_polynomial_from_r(u, w)
    if p.degree > 0:
        print(f"P_{{{u}; {w}}} = {p}")

print("inversion formula on S_4:", verify_inverse_kl(4))
