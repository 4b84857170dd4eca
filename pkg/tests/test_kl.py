import itertools

import pytest
from hypothesis import given, strategies as st

from relquasimap.exceptions import InputError
from relquasimap.kl import (
    IntPolynomial, kl_polynomial, kl_polynomial_from_r, mu, p_value,
    r_polynomial, verify_inverse_kl,
)
from relquasimap.weyl import bruhat_leq, identity, length, permutations

from oracles import perm

polys = st.lists(st.integers(-5, 5), max_size=6).map(lambda c: IntPolynomial(tuple(c)))


class TestIntPolynomial:
    def test_canonical_form(self):
        assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert IntPolynomial((0, 0)).is_zero()
        assert IntPolynomial().degree == -1

    def test_str(self):
        assert str(IntPolynomial((1, 1))) == "1+q"
        assert str(IntPolynomial((0, -2, 0, 1))) == "-2*q+q^3"
        assert str(IntPolynomial()) == "0"

    def test_pairs_round_trip(self):
        p = IntPolynomial((1, 1))
        assert p.to_pairs() == [[0, 1], [1, 1]]
        assert IntPolynomial.from_pairs(p.to_pairs()) == p

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b)(2) == a(2) * b(2)
        assert (a - a).is_zero()
        assert a.shift(2) == a * IntPolynomial.monomial(2)


class TestKL:
    def test_support_and_normalization(self):
        u, w = perm("2,1,3"), perm("1,3,2")
        assert kl_polynomial(u, w).is_zero()
        assert kl_polynomial(w, w) == IntPolynomial.constant(1)

    def test_s3_all_trivial(self):
        for u, w in itertools.product(permutations(3), repeat=2):
            expected = 1 if bruhat_leq(u, w) else 0
            assert kl_polynomial(u, w) == IntPolynomial.constant(expected)
            assert p_value(u, w) == expected

    def test_s4_singular_pairs(self):
        # the only nontrivial polynomials in S_4: below 3412 and 4231
        nontrivial = {(str(u), str(w)): str(kl_polynomial(u, w))
                      for u in permutations(4) for w in permutations(4)
                      if kl_polynomial(u, w).degree > 0}
        assert nontrivial == {
            ("1,2,3,4", "3,4,1,2"): "1+q", ("1,3,2,4", "3,4,1,2"): "1+q",
            ("1,2,3,4", "4,2,3,1"): "1+q", ("1,2,4,3", "4,2,3,1"): "1+q",
            ("2,1,3,4", "4,2,3,1"): "1+q", ("2,1,4,3", "4,2,3,1"): "1+q",
        }

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_two_routes_agree(self, n):
        for u, w in itertools.product(permutations(n), repeat=2):
            assert kl_polynomial(u, w) == kl_polynomial_from_r(u, w)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_degree_bound_positivity_inverse_symmetry(self, n):
        for u, w in itertools.product(permutations(n), repeat=2):
            poly = kl_polynomial(u, w)
            assert all(c >= 0 for c in poly.coefficients)
            assert poly == kl_polynomial(u.inverse(), w.inverse())
            if u != w and bruhat_leq(u, w):
                assert poly.coefficient(0) == 1
                assert 2 * poly.degree <= length(w) - length(u) - 1

    def test_r_polynomial_small(self):
        s = perm("2,1")
        assert r_polynomial(identity(2), s) == IntPolynomial((-1, 1))
        assert r_polynomial(s, identity(2)).is_zero()

    def test_mu(self):
        assert mu(identity(3), perm("2,1,3")) == 1
        assert mu(perm("1,2,3,4"), perm("3,4,1,2")) == 0
        assert mu(perm("1,3,2,4"), perm("3,4,1,2")) == 1

    def test_mismatched_n(self):
        with pytest.raises(InputError):
            kl_polynomial(identity(2), identity(3))


class TestInverseKL:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_holds(self, n):
        assert verify_inverse_kl(n)

    def test_bound(self):
        with pytest.raises(InputError):
            verify_inverse_kl(0)
