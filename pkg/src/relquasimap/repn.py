"""
Graded characters of Verma, H_{lam,w} and tilting modules, Cartan weights,
and the tilting multiplicities n_{w,y}.

Characters are truncated to a box: `box = (5, 5)` means all degrees d with
0 <= d_i < 5.  Every equality between characters is an equality on a box.

Module-side conventions.  H_{lam,w} has a Verma flag with one Verma module
for each bubble chain from w to v, sitting at degree offset d(v - w).  The
equivalence with category O relabels the lowest weight v(lam) - rho as
v^{-1}(lam) - rho, so on the category-O side the Verma multiplicity of
M(u(lam) - rho) is b_{w,u^{-1}} and the tilting module T(y(lam) - rho) contains
M(u(lam) - rho) exactly p_{u w0, y w0} times.

>>> from relquasimap.weyl import identity
>>> row = tilting_multiplicities(identity(3), (2, 1, 0), 3)
>>> [row.entries[y] for y in sorted(row.entries, key=lambda y: (y.length(), y))]
[1, 0, 0, 1, 1, 2]
"""

from __future__ import annotations

__all__ = [
    "Character", "MultiplicityRow", "degrees_in_box",
    "verma_character", "shifted_verma_character", "h_module_character",
    "tilting_character", "tilting_multiplicities", "tilting_multiplicities_closed_form",
    "tilting_multiplicities_triangular", "verma_filtration_multiplicities",
    "dual_verma_filtration_multiplicities", "h_i_weight", "h_i_weight_closed_form",
    "cartan_trace", "check_cartan_commutators", "check_decomposition",
]

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exceptions import InputError, VerificationError
from .kl import p_value
from .laumon import Weight, count_v
from .qmrel import (
    WeightParameter, degree_offset, enumerate_all_chains, graded_dim_direct,
    graded_dim_formula,
)
from .weyl import (
    EdgeMode, Permutation, length, longest_element, path_count,
    permutations, permutations_by_length,
)


def degrees_in_box(box: Sequence[int]) -> list[tuple[int, ...]]:
    """All d with 0 <= d_i < box_i, lexicographically."""
    if any(b < 0 for b in box):
        raise InputError(f"box entries must be non-negative: {box}")
    return list(itertools.product(*(range(b) for b in box)))


@dataclass(frozen=True)
class Character:
    box: tuple[int, ...]
    values: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        box = tuple(int(b) for b in self.box)
        object.__setattr__(self, "box", box)
        values = {tuple(d): int(m) for d, m in self.values.items()}
        if set(values) != set(degrees_in_box(box)):
            raise InputError("character values must cover exactly the box")
        object.__setattr__(self, "values", dict(sorted(values.items())))

    def __getitem__(self, d) -> int:
        return self.values[tuple(d)]

    def __add__(self, other: Character) -> Character:
        self._check_box(other)
        return Character(self.box, {d: m + other.values[d] for d, m in self.values.items()})

    def __mul__(self, k: int) -> Character:
        return Character(self.box, {d: m * k for d, m in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and self.box == other.box
                and self.values == other.values)

    def __hash__(self):
        return hash((self.box, tuple(self.values.items())))

    def _check_box(self, other: Character) -> None:
        if self.box != other.box:
            raise InputError(f"boxes differ: {self.box} vs {other.box}")

    @classmethod
    def zero(cls, box: Sequence[int]) -> Character:
        return cls(tuple(box), {d: 0 for d in degrees_in_box(box)})

    def dominates(self, other: Character) -> bool:
        self._check_box(other)
        return all(m >= other.values[d] for d, m in self.values.items())

    def to_dict(self) -> dict:
        return {"box": list(self.box),
                "values": [{"d": list(d), "dim": m} for d, m in self.values.items()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> Character:
        return cls(tuple(data["box"]), {tuple(rec["d"]): rec["dim"] for rec in data["values"]})


@dataclass(frozen=True)
class MultiplicityRow:
    """n_{w,y} for all y in S_n."""
    w: Permutation
    entries: Mapping[Permutation, int]

    def to_dict(self) -> dict:
        return {"w": str(self.w),
                "entries": [{"y": str(y), "n": m} for y, m in sorted(self.entries.items())]}

    @classmethod
    def from_dict(cls, data: Mapping) -> MultiplicityRow:
        return cls(Permutation.parse(data["w"]),
                   {Permutation.parse(rec["y"]): int(rec["n"]) for rec in data["entries"]})


def _param(lam, n: int) -> WeightParameter:
    lam = lam if isinstance(lam, WeightParameter) else WeightParameter(tuple(lam))
    if lam.n != n:
        raise InputError(f"lambda has {lam.n} entries, expected {n}")
    return lam


def _check_box_dim(box: Sequence[int], n: int) -> tuple[int, ...]:
    box = tuple(box)
    if len(box) != n - 1:
        raise InputError(f"box must have {n - 1} entries, got {box}")
    return box


def shifted_verma_character(n: int, box: Sequence[int], shift: Sequence[int]) -> Character:
    """Graded character of a Verma module whose lowest weight sits at `shift`."""
    box = _check_box_dim(box, n)
    return Character(box, {d: count_v(n, tuple(x - s for x, s in zip(d, shift)))
                           for d in degrees_in_box(box)})


def verma_character(n: int, box: Sequence[int]) -> Character:
    return shifted_verma_character(n, box, (0,) * (n - 1))


def h_module_character(w: Permutation, lam, box: Sequence[int],
                       mode: EdgeMode | str = EdgeMode.ALL,
                       cross_check: bool = True) -> Character:
    """
    Graded dimensions of H_{lam,w} from the path-count formula, checked
    degree by degree against direct fixed-point enumeration.
    """
    lam = _param(lam, w.n)
    box = _check_box_dim(box, w.n)
    values = {}
    for d in degrees_in_box(box):
        values[d] = graded_dim_formula(w, lam, d, mode)
        if cross_check:
            direct = graded_dim_direct(w, lam, d, mode)
            if direct != values[d]:
                raise VerificationError(
                    "dimension formula disagrees with enumeration",
                    {"w": str(w), "lambda": list(lam.lam), "d": list(d),
                     "formula": values[d], "direct": direct})
    return Character(box, values)


def tilting_character(y: Permutation, w_base: Permutation, lam, box: Sequence[int],
                      n: int | None = None) -> Character:
    """
    Character of the image of T(y(lam) - rho), graded from w_base(lam) - rho:
    sum over u of p_{u w0, y w0} Verma characters shifted by d(u^{-1} - w_base).
    """
    n = y.n if n is None else n
    if y.n != n or w_base.n != n:
        raise InputError("y and w_base must lie in S_n")
    lam = _param(lam, n)
    w0 = longest_element(n)
    total = Character.zero(_check_box_dim(box, n))
    for u in permutations(n):
        p = p_value(u * w0, y * w0)
        if p:
            shift = degree_offset(u.inverse(), w_base, lam)
            total = total + p * shifted_verma_character(n, box, shift)
    return total


def _b_inverse_row(w: Permutation, mode) -> dict[Permutation, int]:
    return {u: path_count(w, u.inverse(), mode) for u in permutations(w.n)}


def tilting_multiplicities_triangular(w: Permutation,
                                      mode: EdgeMode | str = EdgeMode.ALL) -> dict[Permutation, int]:
    """
    Solve sum_y n_y p_{u w0, y w0} = b_{w,u^{-1}}.  The matrix is unitriangular
    (p_{u w0, y w0} vanishes unless y <= u), so forward substitution in order
    of increasing length suffices.
    """
    n = w.n
    w0 = longest_element(n)
    b = _b_inverse_row(w, mode)
    solution: dict[Permutation, int] = {}
    for u in permutations_by_length(n):
        acc = b[u]
        for y, val in solution.items():
            if val:
                acc -= p_value(u * w0, y * w0) * val
        solution[u] = acc
    return solution


def tilting_multiplicities_closed_form(w: Permutation,
                                       mode: EdgeMode | str = EdgeMode.ALL) -> dict[Permutation, int]:
    """n_{w,y} = sum_u b_{w,u^{-1}} p_{u,y} (-1)^{l(u)-l(y)}."""
    b = _b_inverse_row(w, mode)
    group = permutations(w.n)
    return {y: sum(b[u] * p_value(u, y) * (-1) ** ((length(u) - length(y)) % 2)
                   for u in group if b[u])
            for y in group}


def tilting_multiplicities(w: Permutation, lam, n: int | None = None,
                           mode: EdgeMode | str = EdgeMode.ALL) -> MultiplicityRow:
    """
    The row n_{w,.}, computed by triangular solve and by the closed form.
    Raises VerificationError if the routes disagree or an entry is negative.
    """
    n = w.n if n is None else n
    if w.n != n:
        raise InputError(f"w is not in S_{n}")
    _param(lam, n)  # validated only: the row does not depend on lambda
    solved = tilting_multiplicities_triangular(w, mode)
    closed = tilting_multiplicities_closed_form(w, mode)
    if solved != closed:
        y = next(y for y in solved if solved[y] != closed[y])
        raise VerificationError("tilting multiplicity routes disagree",
                                {"w": str(w), "y": str(y), "triangular": solved[y],
                                 "closed_form": closed[y]})
    negative = [y for y, m in sorted(solved.items()) if m < 0]
    if negative:
        raise VerificationError("negative tilting multiplicity",
                                {"w": str(w), "mode": EdgeMode.parse(mode).value,
                                 "row": {str(y): m for y, m in sorted(solved.items())}})
    return MultiplicityRow(w, solved)


def verma_filtration_multiplicities(w: Permutation,
                                    mode: EdgeMode | str = EdgeMode.ALL) -> dict[Permutation, int]:
    """u -> multiplicity of M(u(lam) - rho), which is b_{w,u^{-1}}."""
    return _b_inverse_row(w, mode)


def dual_verma_filtration_multiplicities(w: Permutation, lam,
                                         mode: EdgeMode | str = EdgeMode.ALL) -> dict[Permutation, int]:
    """
    Count the dual Verma layers directly: one per bubble chain out of w,
    relabelled through the equivalence (chain end v gives u = v^{-1}).
    """
    lam = _param(lam, w.n)
    counts = Counter(chain.end.inverse() for chain in enumerate_all_chains(w, lam, mode))
    return {u: counts.get(u, 0) for u in permutations(w.n)}


def _tautological(w: Permutation, d: Sequence[int], k: int) -> Weight:
    n = w.n
    # F_n is the trivial bundle C^n, so it has degree 0 but nonzero c_1
    padded = (0,) + tuple(d) + (0,)
    total = Weight.eps(n, -padded[k])
    for i in range(1, k + 1):
        total = total + Weight.a(n, w(i))
    return total


def h_i_weight(i: int, w: Permutation, lam, d: Sequence[int]) -> Fraction:
    """
    Eigenvalue of H_i in units of eps, from c_1(F_i) - c_1(F_{i-1}) + i*eps
    with a_j -> lam_j eps.
    """
    n = w.n
    lam = _param(lam, n)
    if not 1 <= i <= n:
        raise InputError(f"i must be in 1..{n}, got {i}")
    if len(d) != n - 1:
        raise InputError(f"expected {n - 1} degrees, got {tuple(d)}")
    weight = _tautological(w, d, i) - _tautological(w, d, i - 1) + Weight.eps(n, i)
    return weight.specialize(lam.lam)


def h_i_weight_closed_form(i: int, w: Permutation, lam, d: Sequence[int]) -> Fraction:
    """lam_{w(i)} + d_{i-1} - d_i + i with d_0 = d_n = 0."""
    lam = _param(lam, w.n)
    padded = (0,) + tuple(d) + (0,)
    return Fraction(lam[w(i)] + padded[i - 1] - padded[i] + i)


def cartan_trace(w: Permutation, lam, d: Sequence[int]) -> Fraction:
    """sum_i H_i; independent of d."""
    return sum((h_i_weight(i, w, lam, d) for i in range(1, w.n + 1)), Fraction(0))


def check_cartan_commutators(n: int, box: Sequence[int]) -> bool:
    """
    Raising degree d by delta_i must move H_i by -1, H_{i+1} by +1 and leave
    the other H_j alone, at every degree in the box and for every w.
    """
    box = _check_box_dim(box, n)
    lam = WeightParameter(tuple(range(n, 0, -1)))
    for w in permutations(n):
        for d in degrees_in_box(box):
            for i in range(1, n):
                raised = tuple(x + (k == i) for k, x in enumerate(d, start=1))
                for j in range(1, n + 1):
                    diff = h_i_weight(j, w, lam, raised) - h_i_weight(j, w, lam, d)
                    expected = -1 if j == i else (1 if j == i + 1 else 0)
                    if diff != expected:
                        return False
    return True


def check_decomposition(w: Permutation, lam, box: Sequence[int],
                        mode: EdgeMode | str = EdgeMode.ALL) -> bool:
    """
    ch H_{lam,w} == sum_y n_{w,y} ch T_y on the box, where n_{w,y} must be a
    verified non-negative row.
    """
    n = w.n
    lam = _param(lam, n)
    box = _check_box_dim(box, n)
    try:
        row = tilting_multiplicities(w, lam, n, mode)
    except VerificationError:
        return False
    total = Character.zero(box)
    for y, m in row.entries.items():
        if m:
            total = total + m * tilting_character(y, w, lam, box, n)
    return total == h_module_character(w, lam, box, mode)
