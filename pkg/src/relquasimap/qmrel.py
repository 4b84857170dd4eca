"""
Fixed points of the distinguished component M_0 of relative quasimaps.

After specializing a_i -> lam_i * eps, a torus-fixed relative quasimap lies in
M_0 exactly when every bubble covers an invariant curve and has weight eps.
Along the edge x -> t_ab * x the covering degree is then forced to be
lam_a - lam_b, and the bubble eats `m` copies of the root e_p - e_q with
p = x^{-1}(a) < q = x^{-1}(b).  A fixed point is therefore a Bruhat path
from w (the evaluation at infinity) to some u, followed by a Laumon fixed
point over u carrying the remaining degree.

>>> from relquasimap.weyl import identity, Permutation
>>> lam = WeightParameter((3, 1))
>>> [graded_dim_direct(identity(2), lam, (k,)) for k in range(5)]
[1, 1, 2, 2, 2]
>>> degree_offset(Permutation((3, 2, 1)), identity(3), WeightParameter((2, 1, 0)))
(2, 2)
"""

from __future__ import annotations

__all__ = [
    "WeightParameter", "BubbleChain", "RelFixedPoint",
    "edge_data", "degree_offset", "enumerate_chains", "enumerate_all_chains",
    "enumerate_rel_fixed_points", "graded_dim_direct", "graded_dim_formula",
    "node_weights", "rel_f_weight",
]

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exceptions import InputError
from .laumon import LaumonPoint, Weight, count_v, enumerate_fixed_points, f_weight
from .weyl import (
    BruhatEdge, EdgeMode, Permutation, bruhat_edges, bruhat_leq, length,
    path_count, permutations, transposition,
)


@dataclass(frozen=True)
class WeightParameter:
    """
    A regular integral weight lam_1 > ... > lam_n.  `epsilon0` is only a tag
    for the nonzero value eps is sent to; it never enters a computation.
    """
    lam: tuple[int, ...]
    epsilon0: str = "eps0"

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        if any(a <= b for a, b in zip(lam, lam[1:])):
            raise InputError(f"lambda must be strictly decreasing, got {lam}")
        object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        return len(self.lam)

    def __getitem__(self, i: int) -> int:
        """lam_i, 1-based."""
        return self.lam[i - 1]


def _as_param(lam) -> WeightParameter:
    return lam if isinstance(lam, WeightParameter) else WeightParameter(tuple(lam))


@dataclass(frozen=True, order=True)
class BubbleChain:
    """Bubbles from the infinity end (`start`) to the first node."""
    start: Permutation
    edges: tuple[BruhatEdge, ...] = ()
    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.edges) != len(self.multiplicities):
            raise InputError("one multiplicity per edge is required")
        current = self.start
        for edge in self.edges:
            if edge.source != current:
                raise InputError(f"edge {edge.transposition} does not start at {current}")
            current = edge.target
        if any(m <= 0 for m in self.multiplicities):
            raise InputError(f"covering degrees must be positive: {self.multiplicities}")

    @property
    def end(self) -> Permutation:
        return self.edges[-1].target if self.edges else self.start

    def degree(self) -> tuple[int, ...]:
        total = [0] * (self.start.n - 1)
        for edge, m in zip(self.edges, self.multiplicities):
            a, b = edge.transposition
            inv = edge.source.inverse()
            for k in range(inv(a), inv(b)):
                total[k - 1] += m
        return tuple(total)

    def to_list(self) -> list[dict]:
        return [{"transposition": list(edge.transposition), "mult": m}
                for edge, m in zip(self.edges, self.multiplicities)]

    @classmethod
    def from_list(cls, start: Permutation, records: Sequence[Mapping]) -> BubbleChain:
        edges, mults, current = [], [], start
        for rec in records:
            a, b = rec["transposition"]
            target = transposition(start.n, a, b) * current
            edges.append(BruhatEdge(current, (a, b), target))
            mults.append(int(rec["mult"]))
            current = target
        return cls(start, tuple(edges), tuple(mults))


@dataclass(frozen=True, order=True)
class RelFixedPoint:
    chain: BubbleChain
    parametrized_part: LaumonPoint

    def __post_init__(self):
        if self.parametrized_part.w != self.chain.end:
            raise InputError("Laumon part must sit over the end of the chain")

    @property
    def w(self) -> Permutation:
        return self.chain.start

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(self.chain.degree(), self.parametrized_part.degree))

    def to_dict(self) -> dict:
        return {"w": str(self.w), "chain": self.chain.to_list(),
                "laumon": self.parametrized_part.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping) -> RelFixedPoint:
        chain = BubbleChain.from_list(Permutation.parse(data["w"]), data["chain"])
        return cls(chain, LaumonPoint.from_dict(data["laumon"]))


def edge_data(x: Permutation, t: tuple[int, int], lam) -> tuple[int, tuple[int, ...]]:
    """Covering degree and degree vector of the bubble along x -> t_ab * x."""
    lam = _as_param(lam)
    a, b = t
    if not 1 <= a < b <= x.n:
        raise InputError(f"transposition must satisfy 1 <= a < b <= {x.n}: {t}")
    if lam.n != x.n:
        raise InputError(f"lambda has {lam.n} entries, permutation acts on {x.n}")
    inv = x.inverse()
    if inv(a) > inv(b):
        raise InputError(f"edge {t} from {x} decreases length")
    m = lam[a] - lam[b]
    degree = tuple(m if inv(a) <= k < inv(b) else 0 for k in range(1, x.n))
    return m, degree


def degree_offset(u: Permutation, w: Permutation, lam) -> tuple[int, ...]:
    """Coefficients of w(lam) - u(lam) in the simple roots e_i - e_{i+1}."""
    lam = _as_param(lam)
    if u.n != w.n or lam.n != u.n:
        raise InputError("u, w and lambda must share n")
    diff = [x - y for x, y in zip(w.act(lam.lam), u.act(lam.lam))]
    # partial sums invert alpha_i = e_i - e_{i+1}
    out, running = [], 0
    for x in diff[:-1]:
        running += x
        out.append(running)
    return tuple(out)


def _chains_from(w: Permutation, lam: WeightParameter, mode: EdgeMode,
                 target: Permutation | None) -> list[BubbleChain]:
    out = []

    def walk(current, edges, mults):
        if target is None or current == target:
            out.append(BubbleChain(w, tuple(edges), tuple(mults)))
            if target is not None:
                return
        for edge in bruhat_edges(current, mode):
            if target is not None and not bruhat_leq(edge.target, target):
                continue
            m, _ = edge_data(current, edge.transposition, lam)
            walk(edge.target, edges + [edge], mults + [m])

    walk(w, [], [])
    return sorted(out)


def enumerate_chains(w: Permutation, u: Permutation, lam,
                     mode: EdgeMode | str = EdgeMode.ALL) -> list[BubbleChain]:
    """Every bubble chain from w to u; there are path_count(w, u) of them."""
    if u.n != w.n:
        raise InputError("w and u must share n")
    return _chains_from(w, _as_param(lam), EdgeMode.parse(mode), u)


def enumerate_all_chains(w: Permutation, lam,
                         mode: EdgeMode | str = EdgeMode.ALL) -> list[BubbleChain]:
    """Bubble chains from w ending anywhere, the empty chain included."""
    return _chains_from(w, _as_param(lam), EdgeMode.parse(mode), None)


def enumerate_rel_fixed_points(w: Permutation, lam, d: Sequence[int],
                               mode: EdgeMode | str = EdgeMode.ALL) -> list[RelFixedPoint]:
    lam = _as_param(lam)
    d = tuple(d)
    if len(d) != w.n - 1:
        raise InputError(f"expected {w.n - 1} degrees, got {d}")
    points = []
    for chain in enumerate_all_chains(w, lam, mode):
        rest = tuple(x - y for x, y in zip(d, chain.degree()))
        for laumon in enumerate_fixed_points(w.n, chain.end, rest):
            points.append(RelFixedPoint(chain, laumon))
    return sorted(points)


def graded_dim_direct(w: Permutation, lam, d: Sequence[int],
                      mode: EdgeMode | str = EdgeMode.ALL) -> int:
    """Number of fixed points of M_0 in degree d, by enumeration."""
    return len(enumerate_rel_fixed_points(w, lam, d, mode))


def graded_dim_formula(w: Permutation, lam, d: Sequence[int],
                       mode: EdgeMode | str = EdgeMode.ALL) -> int:
    """sum_u b_{w,u} v_{d - d(u-w)}."""
    lam = _as_param(lam)
    d = tuple(d)
    n = w.n
    total = 0
    for u in permutations(n):
        b = path_count(w, u, mode)
        if b:
            shift = degree_offset(u, w, lam)
            total += b * count_v(n, tuple(x - y for x, y in zip(d, shift)))
    return total


def node_weights(chain: BubbleChain) -> list[Weight]:
    """
    Smoothing weights of the nodes, starting from the one on the
    parametrized line: each is the sum of the two adjacent tangent weights.

    Node 1 touches the bubble of the last edge (the one ending at u).  A
    bubble over x -> t_ab * x has tangent weight (a_a - a_b)/m at its longer
    end and the negative at its shorter end; the parametrized line
    contributes -eps.
    """
    if not chain.edges:
        return []
    n = chain.start.n
    bubble = []
    for edge, m in zip(chain.edges, chain.multiplicities):
        a, b = edge.transposition
        bubble.append((Weight.a(n, a) - Weight.a(n, b)) / m)
    bubble.reverse()  # now ordered from the parametrized side outwards
    weights = [bubble[0] - Weight.eps(n)]
    for inner, outer in zip(bubble, bubble[1:]):
        weights.append(outer - inner)
    return weights


def rel_f_weight(p: RelFixedPoint, k: int) -> Weight:
    """F_k at a relative fixed point: only the parametrized part contributes."""
    return f_weight(p.parametrized_part, k)
