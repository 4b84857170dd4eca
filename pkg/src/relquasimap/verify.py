"""
Named invariant suites.  Each suite returns a `SuiteResult`; on failure the
first counterexample is attached in JSON-friendly form.
"""

from __future__ import annotations

__all__ = ["SuiteResult", "SUITES", "run_suite", "regular_weights"]

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .exceptions import InputError, VerificationError
from .kl import MAX_N, kl_polynomial, verify_inverse_kl
from .laumon import count_v, enumerate_fixed_points, kostant_partition, tangent_character
from .qmrel import WeightParameter, degree_offset, enumerate_all_chains
from .repn import check_cartan_commutators, check_decomposition
from .weyl import EdgeMode, bruhat_leq, length, permutations


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample}


def regular_weights(n: int, top: int = 4) -> list[WeightParameter]:
    """Strictly decreasing lambda with entries in [0, top]."""
    return [WeightParameter(lam) for lam in itertools.combinations(range(top, -1, -1), n)]


def _oracle(n_max: int, mode: EdgeMode) -> SuiteResult:
    result = SuiteResult("oracle", True)
    for n in range(2, n_max + 1):
        for d in itertools.product(range(7), repeat=n - 1):
            result.checked += 1
            v, k = count_v(n, d), kostant_partition(n, d)
            if v != k:
                return SuiteResult("oracle", False, result.checked,
                                   {"n": n, "d": list(d), "count_v": v, "kostant": k})
    return result


def _telescoping(n_max: int, mode: EdgeMode) -> SuiteResult:
    result = SuiteResult("telescoping", True)
    for n in range(2, n_max + 1):
        for lam in regular_weights(n):
            for w in permutations(n):
                for chain in enumerate_all_chains(w, lam, mode):
                    result.checked += 1
                    offset = degree_offset(chain.end, w, lam)
                    if chain.degree() != offset:
                        return SuiteResult("telescoping", False, result.checked,
                                           {"w": str(w), "lambda": list(lam.lam),
                                            "chain": chain.to_list(),
                                            "chain_degree": list(chain.degree()),
                                            "offset": list(offset)})
    return result


def _tangent_dimension(n_max: int, mode: EdgeMode, max_total: int = 4) -> SuiteResult:
    result = SuiteResult("tangent-dimension", True)
    for n in range(2, n_max + 1):
        for w in permutations(n):
            for d in itertools.product(range(max_total + 1), repeat=n - 1):
                if sum(d) > max_total:
                    continue
                for point in enumerate_fixed_points(n, w, d):
                    result.checked += 1
                    try:
                        tc = tangent_character(point)
                    except VerificationError as exc:
                        return SuiteResult("tangent-dimension", False, result.checked,
                                           exc.counterexample)
                    # the expected weights are 2|d| distinct ones, each with multiplicity 1
                    if tc.signed_size() != 2 * sum(d) or any(m != 1 for m in tc.terms.values()):
                        return SuiteResult("tangent-dimension", False, result.checked,
                                           {"point": point.to_dict(), "size": tc.signed_size(),
                                            "character": tc.to_list()})
    return result


def _inverse_kl(n_max: int, mode: EdgeMode) -> SuiteResult:
    result = SuiteResult("inverse-kl", True)
    for n in range(1, n_max + 1):
        result.checked += 1
        if not verify_inverse_kl(n):
            return SuiteResult("inverse-kl", False, result.checked, {"n": n})
        for u in permutations(n):
            for w in permutations(n):
                if u == w or not bruhat_leq(u, w):
                    continue
                poly = kl_polynomial(u, w)
                gap = length(w) - length(u)
                if (2 * poly.degree > gap - 1 or poly.coefficient(0) != 1
                        or any(c < 0 for c in poly.coefficients)):
                    return SuiteResult("inverse-kl", False, result.checked,
                                       {"u": str(u), "w": str(w), "P": poly.to_pairs()})
    return result


def _commutators(n_max: int, mode: EdgeMode) -> SuiteResult:
    result = SuiteResult("commutators", True)
    for n in range(2, n_max + 1):
        result.checked += 1
        if not check_cartan_commutators(n, (3,) * (n - 1)):
            return SuiteResult("commutators", False, result.checked, {"n": n})
    return result


def _decomposition(n_max: int, mode: EdgeMode) -> SuiteResult:
    result = SuiteResult("decomposition", True)
    for n in range(2, n_max + 1):
        lam = WeightParameter(tuple(range(n - 1, -1, -1)))
        box = (4,) * (n - 1) if n <= 3 else (2,) * (n - 1)
        for w in permutations(n):
            result.checked += 1
            if not check_decomposition(w, lam, box, mode):
                return SuiteResult("decomposition", False, result.checked,
                                   {"w": str(w), "lambda": list(lam.lam), "box": list(box),
                                    "mode": mode.value})
    return result


SUITES: dict[str, Callable[[int, EdgeMode], SuiteResult]] = {
    "oracle": _oracle,
    "telescoping": _telescoping,
    "tangent-dimension": _tangent_dimension,
    "inverse-kl": _inverse_kl,
    "commutators": _commutators,
    "decomposition": _decomposition,
}

# default upper bound on n per suite
DEFAULT_N = {"oracle": 4, "telescoping": 3, "tangent-dimension": 3,
             "inverse-kl": 4, "commutators": 4, "decomposition": 3}


def run_suite(name: str, n_max: int | None = None,
              mode: EdgeMode | str = EdgeMode.ALL) -> SuiteResult:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    n_max = DEFAULT_N[name] if n_max is None else n_max
    if not 1 <= n_max <= MAX_N:
        raise InputError(f"n must be in 1..{MAX_N}, got {n_max}")
    return SUITES[name](n_max, EdgeMode.parse(mode))
