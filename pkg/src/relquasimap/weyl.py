"""
Symmetric-group combinatorics: one-line permutations, inversion length, Bruhat
order, and directed path counts in the Bruhat graph.

Permutations act on values from the left.  An edge of the Bruhat graph goes
from `x` to `t * x` where `t` swaps the *values* `a < b`; it exists exactly
when `x.inverse()(a) < x.inverse()(b)`, i.e. when the length goes up.

>>> e = identity(3)
>>> [str(edge.target) for edge in bruhat_edges(e)]
['2,1,3', '3,2,1', '1,3,2']
>>> path_count(e, longest_element(3))
5
>>> path_count(e, longest_element(3), EdgeMode.SIMPLE)
2
"""

from __future__ import annotations

__all__ = [
    "Permutation", "BruhatEdge", "EdgeMode",
    "identity", "longest_element", "simple_reflection", "transposition",
    "permutations", "permutations_by_length",
    "length", "bruhat_leq", "bruhat_edges", "path_count", "path_counts_from",
]

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import InputError


class EdgeMode(str, enum.Enum):
    """Which reflections label the edges of the Bruhat graph."""
    ALL = "all"  # every transposition (Dyer's Bruhat graph)
    SIMPLE = "simple"  # adjacent transpositions only

    @classmethod
    def parse(cls, value: "EdgeMode | str") -> "EdgeMode":
        if isinstance(value, cls):
            return value
        aliases = {"all": cls.ALL, "all-reflections": cls.ALL,
                   "simple": cls.SIMPLE, "simple-only": cls.SIMPLE}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise InputError(f"unknown edge mode {value!r}") from None


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation of {1, ..., n} in one-line notation, `w(i) = images[i-1]`.

    Ordering is lexicographic on the one-line notation.
    """
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InputError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read comma-separated one-line notation such as ``"3,1,2"``."""
        text = text.strip()
        if not text:
            raise InputError("empty permutation string")
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError:
            raise InputError(f"malformed permutation {text!r}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        _check_same_n(self, other)
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def act(self, vector):
        """Positional action on a vector: ``(w . v)_i = v[w(i)]``."""
        return tuple(vector[j - 1] for j in self.images)


@dataclass(frozen=True, order=True)
class BruhatEdge:
    """The edge `source -> t_ab * source`, with `t_ab` swapping values a < b."""
    source: Permutation
    transposition: tuple[int, int]
    target: Permutation


def _check_same_n(u: Permutation, w: Permutation) -> None:
    if u.n != w.n:
        raise InputError(f"permutations of different size: {u} and {w}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def transposition(n: int, a: int, b: int) -> Permutation:
    """The permutation swapping `a` and `b` in S_n."""
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(tuple(images))


def simple_reflection(n: int, i: int) -> Permutation:
    return transposition(n, i, i + 1)


def permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def permutations_by_length(n: int) -> list[Permutation]:
    """All of S_n sorted by length, ties broken lexicographically."""
    return sorted(permutations(n), key=lambda p: (length(p), p))


def length(w: Permutation) -> int:
    """Number of inversions, i.e. pairs i < j with w(i) > w(j)."""
    images = w.images
    return sum(1 for i, j in itertools.combinations(range(len(images)), 2)
               if images[i] > images[j])


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """
    Bruhat order by the tableau criterion: u <= w iff for every prefix
    length i and every threshold k, u has no more prefix entries >= k than w.
    """
    _check_same_n(u, w)
    n = u.n
    for i in range(1, n):
        prefix_u = sorted(u.images[:i], reverse=True)
        prefix_w = sorted(w.images[:i], reverse=True)
        # comparing sorted prefixes entrywise is the same test
        if any(a > b for a, b in zip(prefix_u, prefix_w)):
            return False
    return True


def bruhat_edges(w: Permutation, mode: EdgeMode | str = EdgeMode.ALL) -> list[BruhatEdge]:
    """Length-increasing edges out of `w`, ordered by transposition."""
    mode = EdgeMode.parse(mode)
    inv = w.inverse()
    n = w.n
    if mode is EdgeMode.ALL:
        pairs = itertools.combinations(range(1, n + 1), 2)
    else:
        pairs = ((a, a + 1) for a in range(1, n))
    return [BruhatEdge(w, (a, b), transposition(n, a, b) * w)
            for a, b in pairs if inv(a) < inv(b)]


@lru_cache(maxsize=None)
def _path_count(w: Permutation, u: Permutation, mode: EdgeMode) -> int:
    if w == u:
        return 1
    if length(w) >= length(u):
        return 0
    return sum(_path_count(edge.target, u, mode) for edge in bruhat_edges(w, mode))


def path_count(w: Permutation, u: Permutation, mode: EdgeMode | str = EdgeMode.ALL) -> int:
    """Number of directed paths from `w` to `u` (1 for the empty path)."""
    _check_same_n(w, u)
    return _path_count(w, u, EdgeMode.parse(mode))


def path_counts_from(w: Permutation, mode: EdgeMode | str = EdgeMode.ALL) -> dict[Permutation, int]:
    """The row `u -> path_count(w, u)` over all of S_n, zeros included."""
    return {u: path_count(w, u, mode) for u in permutations(w.n)}
