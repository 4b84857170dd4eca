"""
Torus-fixed points of the Laumon space (quasimaps nonsingular at infinity)
and their equivariant data.

A fixed point over the evaluation `w(x_0)` is a triangular array `d[k][i]`,
1 <= i <= k <= n-1, of non-negative integers: the rank-k subsheaf splits as
the sum over i <= k of `O(-d[k][i])` carrying the torus weight a_{w(i)}.
Columns are weakly decreasing, d[k][i] >= d[k+1][i], and row k sums to the
degree d_k.

Weights are linear forms in a_1..a_n and eps with exact rational coefficients.
The domain coordinate z at 0 has weight -eps, so the tangent line at 0 has
weight +eps and the fiber at 0 of (mu, O(-c)) has weight mu - c*eps.

>>> from relquasimap.weyl import identity
>>> [p.rows for p in enumerate_fixed_points(3, identity(3), (1, 1))]
[((1,), (0, 1)), ((1,), (1, 0))]
>>> point = enumerate_fixed_points(2, identity(2), (1,))[0]
>>> sorted(str(wt) for wt in tangent_character(point).terms)
['-a1+a2+eps', 'eps']
"""

from __future__ import annotations

__all__ = [
    "Weight", "TangentCharacter", "LaumonPoint",
    "enumerate_fixed_points", "count_v", "kostant_partition", "positive_roots",
    "chi_hom", "tangent_character", "f_weight", "line_weight",
]

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exceptions import InputError, VerificationError
from .weyl import Permutation


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Weight:
    """A weight sum_i a_coeffs[i-1] * a_i + eps_coeff * eps."""
    a_coeffs: tuple[Fraction, ...]
    eps_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a_coeffs", tuple(Fraction(c) for c in self.a_coeffs))
        object.__setattr__(self, "eps_coeff", Fraction(self.eps_coeff))

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((0,) * n, 0)

    @classmethod
    def a(cls, n: int, i: int) -> Weight:
        """The equivariant variable a_i."""
        coeffs = [0] * n
        coeffs[i - 1] = 1
        return cls(tuple(coeffs), 0)

    @classmethod
    def eps(cls, n: int, coeff=1) -> Weight:
        return cls((0,) * n, coeff)

    @property
    def n(self) -> int:
        return len(self.a_coeffs)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(x + y for x, y in zip(self.a_coeffs, other.a_coeffs)),
                      self.eps_coeff + other.eps_coeff)

    def __neg__(self) -> Weight:
        return Weight(tuple(-x for x in self.a_coeffs), -self.eps_coeff)

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def __mul__(self, scalar) -> Weight:
        scalar = Fraction(scalar)
        return Weight(tuple(x * scalar for x in self.a_coeffs), self.eps_coeff * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> Weight:
        return self * (1 / Fraction(scalar))

    def is_zero(self) -> bool:
        return not self.eps_coeff and not any(self.a_coeffs)

    def specialize(self, lam: Sequence[int]) -> Fraction:
        """Coefficient of eps after a_i -> lam_i * eps."""
        if len(lam) != self.n:
            raise InputError(f"need {self.n} lambda entries, got {len(lam)}")
        return sum((c * l for c, l in zip(self.a_coeffs, lam)), Fraction(0)) + self.eps_coeff

    def __str__(self) -> str:
        parts = [(c, f"a{i}") for i, c in enumerate(self.a_coeffs, start=1) if c]
        if self.eps_coeff:
            parts.append((self.eps_coeff, "eps"))
        if not parts:
            return "0"
        text = ""
        for c, name in parts:
            mag = "" if abs(c) == 1 else _frac_str(abs(c)) + "*"
            sign = "-" if c < 0 else "+"
            text += sign + mag + name
        return text[1:] if text.startswith("+") else text

    def to_dict(self) -> dict:
        a = [int(c) if c.denominator == 1 else _frac_str(c) for c in self.a_coeffs]
        return {"a": a, "eps": _frac_str(self.eps_coeff)}

    @classmethod
    def from_dict(cls, data: Mapping) -> Weight:
        return cls(tuple(Fraction(str(c)) for c in data["a"]), Fraction(str(data["eps"])))


@dataclass(frozen=True)
class TangentCharacter:
    """A signed multiset of weights, zero multiplicities dropped."""
    terms: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms",
                           {wt: m for wt, m in sorted(self.terms.items()) if m})

    @classmethod
    def from_weights(cls, weights: Iterable[Weight], mult: int = 1) -> TangentCharacter:
        counts = Counter()
        for wt in weights:
            counts[wt] += mult
        return cls(dict(counts))

    def __add__(self, other: TangentCharacter) -> TangentCharacter:
        counts = Counter(self.terms)
        for wt, m in other.terms.items():
            counts[wt] += m
        return TangentCharacter(dict(counts))

    def __neg__(self) -> TangentCharacter:
        return TangentCharacter({wt: -m for wt, m in self.terms.items()})

    def __sub__(self, other: TangentCharacter) -> TangentCharacter:
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, TangentCharacter) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def signed_size(self) -> int:
        return sum(self.terms.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self.terms.values())

    def weights(self) -> list[Weight]:
        """Weights listed with multiplicity; only meaningful when effective."""
        return [wt for wt, m in self.terms.items() for _ in range(m)]

    def to_list(self) -> list[dict]:
        return [dict(wt.to_dict(), mult=m) for wt, m in self.terms.items()]

    @classmethod
    def from_list(cls, records: Iterable[Mapping]) -> TangentCharacter:
        counts = Counter()
        for rec in records:
            counts[Weight.from_dict(rec)] += int(rec["mult"])
        return cls(dict(counts))


@dataclass(frozen=True, order=True)
class LaumonPoint:
    """
    A fixed point of the Laumon space over `w(x_0)`.

    `rows[k-1][i-1]` is d_{k,i}, the degree of the summand of the rank-k
    subsheaf carrying weight a_{w(i)}.
    """
    w: Permutation
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.w.n
        if len(rows) != n - 1 or any(len(row) != k for k, row in enumerate(rows, start=1)):
            raise InputError(f"rows must be triangular of height {n - 1}: {rows}")
        if any(x < 0 for row in rows for x in row):
            raise InputError(f"negative entry in {rows}")
        for k in range(len(rows) - 1):
            if any(rows[k][i] < rows[k + 1][i] for i in range(k + 1)):
                raise InputError(f"columns must weakly decrease: {rows}")

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def to_dict(self) -> dict:
        return {"w": str(self.w), "d": [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, data: Mapping) -> LaumonPoint:
        return cls(Permutation.parse(data["w"]), tuple(tuple(r) for r in data["d"]))


def _rows_under(bound: tuple[int, ...], total: int):
    """Rows of length len(bound)+1 with entries bounded by `bound` (last free) summing to total."""
    def rec(i, remaining):
        if i == len(bound):
            yield (remaining,)
            return
        for x in range(min(bound[i], remaining) + 1):
            for rest in rec(i + 1, remaining - x):
                yield (x,) + rest
    yield from rec(0, total)


def enumerate_fixed_points(n: int, w: Permutation, d: Sequence[int]) -> list[LaumonPoint]:
    """All fixed points of degree `d` over `w(x_0)`, lexicographically ordered."""
    d = tuple(d)
    if w.n != n or len(d) != n - 1:
        raise InputError(f"expected w in S_{n} and {n - 1} degrees, got {w} and {d}")
    if any(x < 0 for x in d):
        return []
    if n == 1:
        return [LaumonPoint(w, ())]
    arrays = [((d[0],),)]
    for k in range(1, n - 1):
        arrays = [rows + (row,) for rows in arrays for row in _rows_under(rows[-1], d[k])]
    return sorted(LaumonPoint(w, rows) for rows in arrays)


@lru_cache(maxsize=None)
def _count(bound: tuple[int, ...], rest: tuple[int, ...]) -> int:
    if not rest:
        return 1
    return sum(_count(row, rest[1:]) for row in _rows_under(bound, rest[0]))


def count_v(n: int, d: Sequence[int]) -> int:
    """Number of fixed points of degree d; 0 if any entry is negative."""
    d = tuple(d)
    if len(d) != n - 1:
        raise InputError(f"expected {n - 1} degrees, got {d}")
    if any(x < 0 for x in d):
        return 0
    if n == 1:
        return 1
    # same constraint set as enumerate_fixed_points, counted without materializing
    return _count((d[0],), d[1:])


def positive_roots(n: int) -> list[tuple[int, ...]]:
    """Roots e_p - e_q (p < q) as coefficient vectors in the simple roots."""
    return [tuple(1 if p <= k < q else 0 for k in range(1, n))
            for p in range(1, n) for q in range(p + 1, n + 1)]


def kostant_partition(n: int, d: Sequence[int]) -> int:
    """Ways to write sum_i d_i alpha_i as a multiset of positive roots."""
    d = tuple(d)
    if len(d) != n - 1:
        raise InputError(f"expected {n - 1} degrees, got {d}")
    if any(x < 0 for x in d):
        return 0
    return _kostant(tuple(positive_roots(n)), d)


@lru_cache(maxsize=None)
def _kostant(roots: tuple[tuple[int, ...], ...], target: tuple[int, ...]) -> int:
    if not any(target):
        return 1
    if not roots:
        return 0
    root, rest = roots[0], roots[1:]
    total = 0
    remaining = target
    while all(x >= 0 for x in remaining):
        total += _kostant(rest, remaining)
        remaining = tuple(x - r for x, r in zip(remaining, root))
    return total


def chi_hom(source: tuple[Weight, int], target: tuple[Weight, int],
            twist_at_infinity: bool = True) -> TangentCharacter:
    """
    Equivariant Euler characteristic H^0 - H^1 of Hom((mu, O(-c)), (nu, O(-d)))
    on P^1, optionally twisted to sections vanishing at infinity.
    """
    (mu, c), (nu, d) = source, target
    base = nu - mu
    e = c - d
    eps = Weight.eps(base.n)
    if twist_at_infinity:
        if e >= 0:
            ks, sign = range(1, e + 1), 1
        else:
            ks, sign = range(e + 1, 1), -1
    else:
        if e >= 0:
            ks, sign = range(0, e + 1), 1
        else:
            ks, sign = range(e + 1, 0), -1
    return TangentCharacter.from_weights((base + eps * k for k in ks), sign)


def line_weight(w: Permutation, i: int) -> Weight:
    """a_{w(i)}."""
    return Weight.a(w.n, w(i))


def tangent_character(p: LaumonPoint) -> TangentCharacter:
    """
    Tangent space at a fixed point: the Hom terms between consecutive
    subsheaves minus the End terms, all twisted by vanishing at infinity.
    """
    n, w = p.n, p.w
    rows = list(p.rows) + [(0,) * n]  # rank-n row is the trivial flag
    summands = [[(line_weight(w, i), row[i - 1]) for i in range(1, len(row) + 1)]
                for row in rows]
    total = TangentCharacter()
    for k in range(n - 1):
        for src in summands[k]:
            for tgt in summands[k + 1]:
                total = total + chi_hom(src, tgt, True)
            for tgt in summands[k]:
                total = total - chi_hom(src, tgt, True)
    if not total.is_effective():
        raise VerificationError("tangent character has negative multiplicities",
                                {"point": p.to_dict(), "character": total.to_list()})
    return total


def f_weight(p: LaumonPoint, k: int) -> Weight:
    """Weight of the tautological bundle F_k: sum_{i<=k} a_{w(i)} - d_k eps."""
    if not 1 <= k <= p.n - 1:
        raise InputError(f"k must be in 1..{p.n - 1}, got {k}")
    total = Weight.zero(p.n)
    for i in range(1, k + 1):
        total = total + line_weight(p.w, i)
    return total - Weight.eps(p.n, p.degree[k - 1])
