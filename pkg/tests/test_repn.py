import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from relquasimap.exceptions import InputError, VerificationError
from relquasimap.repn import (
    Character, MultiplicityRow, cartan_trace, check_cartan_commutators,
    check_decomposition, degrees_in_box, dual_verma_filtration_multiplicities,
    h_i_weight, h_i_weight_closed_form, h_module_character, tilting_character,
    tilting_multiplicities, tilting_multiplicities_closed_form,
    tilting_multiplicities_triangular, verma_character,
    verma_filtration_multiplicities,
)
from relquasimap.weyl import identity, longest_element, permutations, permutations_by_length

from oracles import perm


def row_by_length(row):
    return [row.entries[y] for y in permutations_by_length(row.w.n)]


class TestCharacter:
    def test_box_is_a_shape(self):
        assert degrees_in_box((2, 3)) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
        assert degrees_in_box((0, 3)) == []

    def test_verma(self):
        assert verma_character(3, (3, 3)).values == {
            d: min(d) + 1 for d in degrees_in_box((3, 3))}

    def test_arithmetic_and_dominance(self):
        v = verma_character(2, (3,))
        assert (v + v) == v * 2
        assert (v * 2).dominates(v)
        assert not v.dominates(v * 2)

    def test_values_must_cover_box(self):
        with pytest.raises(InputError):
            Character((2,), {(0,): 1})

    def test_round_trip(self):
        ch = h_module_character(identity(3), (2, 1, 0), (3, 3))
        assert Character.from_dict(ch.to_dict()) == ch


class TestHModule:
    def test_sl2(self):
        ch = h_module_character(identity(2), (3, 1), (5,))
        assert [ch[(k,)] for k in range(5)] == [1, 1, 2, 2, 2]
        assert h_module_character(perm("2,1"), (3, 1), (5,)) == verma_character(2, (5,))

    def test_dominance(self):
        lam = (2, 1, 0)
        w0 = longest_element(3)
        top = h_module_character(w0, lam, (3, 3))
        for w in permutations(3):
            ch = h_module_character(w, lam, (3, 3))
            assert ch.dominates(top)
            assert (ch == top) == (w == w0)


class TestMultiplicities:
    def test_s3_identity_row(self):
        assert row_by_length(tilting_multiplicities(identity(3), (2, 1, 0))) == [1, 0, 0, 1, 1, 2]

    def test_sl2_rows(self):
        assert row_by_length(tilting_multiplicities(identity(2), (3, 1))) == [1, 0]
        assert row_by_length(tilting_multiplicities(perm("2,1"), (3, 1))) == [0, 1]

    def test_longest_row_is_delta(self):
        for n in (2, 3, 4):
            w0 = longest_element(n)
            row = tilting_multiplicities(w0, tuple(range(n - 1, -1, -1)))
            assert {y: m for y, m in row.entries.items() if m} == {w0: 1}

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_routes_agree_all_edges(self, n):
        for w in permutations(n):
            tri = tilting_multiplicities_triangular(w)
            assert tri == tilting_multiplicities_closed_form(w)
            assert all(m >= 0 for m in tri.values())

    def test_simple_edges_go_negative(self):
        # the simple-reflection graph is too sparse: the row for s_2 has a -1
        w = perm("1,3,2")
        assert tilting_multiplicities_triangular(w, "simple") == tilting_multiplicities_closed_form(w, "simple")
        assert tilting_multiplicities_triangular(w, "simple")[perm("2,3,1")] == -1
        with pytest.raises(VerificationError):
            tilting_multiplicities(w, (2, 1, 0), mode="simple")
        assert not check_decomposition(w, (2, 1, 0), (3, 3), "simple")

    def test_filtration_counts(self):
        for n in (2, 3):
            lam = tuple(range(n, 0, -1))
            for w in permutations(n):
                assert verma_filtration_multiplicities(w) == dual_verma_filtration_multiplicities(w, lam)
        assert verma_filtration_multiplicities(identity(3))[longest_element(3)] == 5

    def test_row_round_trip(self):
        row = tilting_multiplicities(perm("2,1,3"), (2, 1, 0))
        assert MultiplicityRow.from_dict(row.to_dict()) == row


class TestDecomposition:
    def test_tilting_of_longest_is_verma(self):
        w0 = longest_element(3)
        assert tilting_character(w0, w0, (2, 1, 0), (3, 3)) == verma_character(3, (3, 3))

    @pytest.mark.parametrize("lam", [(2, 1, 0), (4, 2, 0), (3, 2, 0)])
    def test_s3(self, lam):
        for w in permutations(3):
            assert check_decomposition(w, lam, (4, 4))

    def test_sl2(self):
        for gap in (1, 2, 3):
            lam = (gap, 0)
            for w in permutations(2):
                assert check_decomposition(w, lam, (2 * gap,))


class TestCartan:
    @given(st.integers(2, 4).flatmap(lambda n: st.tuples(
        st.sampled_from(permutations(n)),
        st.lists(st.integers(0, 5), min_size=n - 1, max_size=n - 1))))
    def test_two_routes(self, case):
        w, d = case
        n = w.n
        lam = tuple(range(2 * n, 0, -2))
        for i in range(1, n + 1):
            assert h_i_weight(i, w, lam, d) == h_i_weight_closed_form(i, w, lam, d)

    def test_sl2_example(self):
        assert h_i_weight(1, identity(2), (3, 1), (1,)) == 3
        assert h_i_weight(2, identity(2), (3, 1), (1,)) == 4

    def test_degree_zero_is_shifted_weight(self):
        # w(lam) - rho with rho = (-1, ..., -n)
        lam = (5, 3, 2, 0)
        for w in permutations(4):
            assert [h_i_weight(i, w, lam, (0, 0, 0)) for i in range(1, 5)] == [
                lam[w(i) - 1] + i for i in range(1, 5)]

    def test_trace_constant(self):
        lam = (3, 1, 0)
        for w in permutations(3):
            traces = {cartan_trace(w, lam, d) for d in degrees_in_box((4, 4))}
            assert traces == {Fraction(sum(lam) + 6)}

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_commutators(self, n):
        assert check_cartan_commutators(n, (3,) * (n - 1))

    def test_index_range(self):
        with pytest.raises(InputError):
            h_i_weight(0, identity(2), (1, 0), (0,))
