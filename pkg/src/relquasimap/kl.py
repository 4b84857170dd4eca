"""
Kazhdan-Lusztig polynomials of the symmetric group.

Two independent routes are provided.  `kl_polynomial` runs the classical
recursion through a left descent `s` of `w`,

    P_{x,w} = q^{1-c} P_{sx,sw} + q^c P_{x,sw}
              - sum_{z < sw, sz < z} mu(z, sw) q^{(l(w)-l(z))/2} P_{x,z},

with c = 1 if sx < x and 0 otherwise.  `kl_polynomial_from_r` instead solves
the bar-invariance relation

    q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x < y <= w} R_{x,y} P_{y,w}

using the degree bound to separate the two sides.

>>> from relquasimap.weyl import Permutation
>>> str(kl_polynomial(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2))))
'1+q'
>>> p_value(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2)))
2
"""

from __future__ import annotations

__all__ = [
    "IntPolynomial", "kl_polynomial", "kl_polynomial_from_r", "r_polynomial",
    "mu", "p_value", "verify_inverse_kl", "MAX_N",
]

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .exceptions import InputError
from .weyl import (
    Permutation, bruhat_leq, length, longest_element, permutations,
    simple_reflection,
)

# exhaustive checks above this size get slow in pure Python
MAX_N = 6


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in q; `coefficients[k]` multiplies q^k."""
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> IntPolynomial:
        """Inverse of `to_pairs`: ``[[0, 1], [1, 1]]`` is 1+q."""
        coeffs: dict[int, int] = {}
        for exponent, c in pairs:
            if exponent < 0:
                raise InputError(f"negative exponent {exponent}")
            coeffs[exponent] = coeffs.get(exponent, 0) + c
        top = max(coeffs, default=-1)
        return cls(tuple(coeffs.get(k, 0) for k in range(top + 1)))

    def to_pairs(self) -> list[list[int]]:
        return [[k, c] for k, c in enumerate(self.coefficients) if c]

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, q):
        result = 0
        for c in reversed(self.coefficients):
            result = result * q + c
        return result

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        a = a + (0,) * (size - len(a))
        b = b + (0,) * (size - len(b))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            if x:
                for j, y in enumerate(other.coefficients):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by q^k (k >= 0)."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coefficients)

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(sign + body for sign, body in terms[1:])


ZERO = IntPolynomial()
ONE = IntPolynomial.constant(1)


def _check(u: Permutation, w: Permutation) -> None:
    if u.n != w.n:
        raise InputError(f"permutations of different size: {u} and {w}")


def _left_descent(w: Permutation) -> int | None:
    """Some i with s_i w < w, or None for the identity."""
    inv = w.inverse()
    for i in range(1, w.n):
        if inv(i) > inv(i + 1):
            return i
    return None


@lru_cache(maxsize=None)
def _kl(x: Permutation, w: Permutation) -> IntPolynomial:
    if not bruhat_leq(x, w):
        return ZERO
    if x == w:
        return ONE
    i = _left_descent(w)
    s = simple_reflection(w.n, i)
    v = s * w
    sx = s * x
    c = 1 if length(sx) < length(x) else 0
    result = _kl(sx, v).shift(1 - c) + _kl(x, v).shift(c)
    lw = length(w)
    for z in permutations(w.n):
        if z == v or not bruhat_leq(x, z) or not bruhat_leq(z, v):
            continue
        if length(s * z) > length(z):
            continue
        m = _mu(z, v)
        if m:
            result = result - (_kl(x, z) * m).shift((lw - length(z)) // 2)
    return result


@lru_cache(maxsize=None)
def _mu(z: Permutation, v: Permutation) -> int:
    gap = length(v) - length(z)
    if gap <= 0 or gap % 2 == 0:
        return 0
    return _kl(z, v).coefficient((gap - 1) // 2)


def kl_polynomial(u: Permutation, w: Permutation) -> IntPolynomial:
    """P_{u,w}; zero unless u <= w in Bruhat order."""
    _check(u, w)
    return _kl(u, w)


def mu(z: Permutation, v: Permutation) -> int:
    """Top coefficient of P_{z,v} in degree (l(v)-l(z)-1)/2, else 0."""
    _check(z, v)
    return _mu(z, v)


def p_value(u: Permutation, w: Permutation) -> int:
    """P_{u,w}(1)."""
    return kl_polynomial(u, w)(1)


@lru_cache(maxsize=None)
def _r(x: Permutation, w: Permutation) -> IntPolynomial:
    if not bruhat_leq(x, w):
        return ZERO
    if x == w:
        return ONE
    i = _left_descent(w)
    s = simple_reflection(w.n, i)
    sx, sw = s * x, s * w
    if length(sx) < length(x):
        return _r(sx, sw)
    # (q - 1) R_{x,sw} + q R_{sx,sw}
    return _r(x, sw).shift(1) - _r(x, sw) + _r(sx, sw).shift(1)


def r_polynomial(x: Permutation, w: Permutation) -> IntPolynomial:
    """The R-polynomial R_{x,w} (zero unless x <= w)."""
    _check(x, w)
    return _r(x, w)


@lru_cache(maxsize=None)
def _kl_from_r(x: Permutation, w: Permutation) -> IntPolynomial:
    if not bruhat_leq(x, w):
        return ZERO
    if x == w:
        return ONE
    gap = length(w) - length(x)
    rhs = ZERO
    for y in permutations(w.n):
        if y != x and bruhat_leq(x, y) and bruhat_leq(y, w):
            rhs = rhs + _r(x, y) * _kl_from_r(y, w)
    # -P occupies degrees < gap/2, q^gap P(1/q) degrees > gap/2
    return IntPolynomial(tuple(-rhs.coefficient(k) for k in range(gap)
                               if 2 * k < gap))


def kl_polynomial_from_r(u: Permutation, w: Permutation) -> IntPolynomial:
    """P_{u,w} recomputed from R-polynomials; must agree with `kl_polynomial`."""
    _check(u, w)
    return _kl_from_r(u, w)


def verify_inverse_kl(n: int) -> bool:
    """
    Check, as an exact polynomial identity on all of S_n,

        sum_{u <= z <= w} (-1)^{l(z)-l(u)} P_{u,z} P_{w w0, z w0} = delta_{u,w}.
    """
    if n < 1 or n > MAX_N:
        raise InputError(f"n must be in 1..{MAX_N}, got {n}")
    w0 = longest_element(n)
    group = permutations(n)
    for u in group:
        for w in group:
            if not bruhat_leq(u, w):
                continue
            total = ZERO
            for z in group:
                if bruhat_leq(u, z) and bruhat_leq(z, w):
                    term = kl_polynomial(u, z) * kl_polynomial(w * w0, z * w0)
                    total = total + (term if (length(z) - length(u)) % 2 == 0 else -term)
            if total != (ONE if u == w else ZERO):
                return False
    return True
