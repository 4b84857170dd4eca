import itertools

import pytest
from hypothesis import given, strategies as st

from relquasimap.exceptions import InputError
from relquasimap.laumon import Weight
from relquasimap.qmrel import (
    BubbleChain, RelFixedPoint, WeightParameter, degree_offset, edge_data,
    enumerate_all_chains, enumerate_chains, enumerate_rel_fixed_points,
    graded_dim_direct, graded_dim_formula, node_weights, rel_f_weight,
)
from relquasimap.weyl import identity, longest_element, path_count, permutations

from oracles import perm

regular = st.integers(2, 3).flatmap(
    lambda n: st.lists(st.integers(0, 6), min_size=n, max_size=n, unique=True)
    .map(lambda xs: WeightParameter(tuple(sorted(xs, reverse=True)))))


class TestWeightParameter:
    def test_indexing(self):
        lam = WeightParameter((4, 2, 1))
        assert (lam[1], lam[3], lam.n) == (4, 1, 3)

    @pytest.mark.parametrize("bad", [(1, 2), (2, 2, 0)])
    def test_rejects_non_regular(self, bad):
        with pytest.raises(InputError):
            WeightParameter(bad)


class TestEdgeData:
    def test_examples(self):
        assert edge_data(identity(2), (1, 2), (3, 1)) == (2, (2,))
        assert edge_data(identity(3), (1, 3), (3, 1, 0)) == (3, (3, 3))
        assert edge_data(perm("2,1,3"), (2, 3), (4, 2, 1)) == (1, (1, 1))

    def test_rejects_descending_edge(self):
        with pytest.raises(InputError):
            edge_data(perm("2,1"), (1, 2), (3, 1))


class TestDegreeOffset:
    def test_examples(self):
        lam = (2, 1, 0)
        assert degree_offset(identity(3), identity(3), lam) == (0, 0)
        assert degree_offset(longest_element(3), identity(3), lam) == (2, 2)
        assert degree_offset(perm("2,1"), identity(2), (3, 1)) == (2,)

    @given(regular, st.data())
    def test_additive(self, lam, data):
        n = lam.n
        u, v, w = (data.draw(st.sampled_from(permutations(n))) for _ in range(3))
        total = tuple(x + y for x, y in zip(degree_offset(u, v, lam), degree_offset(v, w, lam)))
        assert total == degree_offset(u, w, lam)

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("mode", ["all", "simple"])
    def test_telescoping_along_chains(self, n, mode):
        for lam in itertools.combinations(range(4, -1, -1), n):
            for w in permutations(n):
                for chain in enumerate_all_chains(w, lam, mode):
                    assert chain.degree() == degree_offset(chain.end, w, lam)
                    assert all(x >= 0 for x in chain.degree())


class TestChains:
    def test_counts_match_path_counts(self):
        lam = (3, 1, 0)
        for mode in ("all", "simple"):
            for w, u in itertools.product(permutations(3), repeat=2):
                assert len(enumerate_chains(w, u, lam, mode)) == path_count(w, u, mode)

    def test_identity_to_longest(self):
        chains = enumerate_chains(identity(3), longest_element(3), (2, 1, 0))
        assert len(chains) == 5
        assert all(c.end == longest_element(3) for c in chains)

    def test_rejects_broken_chain(self):
        chain = enumerate_chains(identity(3), perm("2,1,3"), (2, 1, 0))[0]
        with pytest.raises(InputError):
            BubbleChain(perm("1,3,2"), chain.edges, chain.multiplicities)


class TestFixedPoints:
    def test_sl2_examples(self):
        lam = (3, 1)
        assert len(enumerate_rel_fixed_points(identity(2), lam, (2,))) == 2
        assert len(enumerate_rel_fixed_points(identity(2), lam, (1,))) == 1
        assert [graded_dim_direct(identity(2), lam, (k,)) for k in range(5)] == [1, 1, 2, 2, 2]

    def test_s3_anchor(self):
        assert graded_dim_direct(identity(3), (2, 1, 0), (2, 2)) == 16

    @pytest.mark.parametrize("mode", ["all", "simple"])
    def test_dimension_formula(self, mode):
        for n in (2, 3):
            for lam in itertools.combinations(range(4, -1, -1), n):
                for w in permutations(n):
                    for d in itertools.product(range(5), repeat=n - 1):
                        assert graded_dim_direct(w, lam, d, mode) == graded_dim_formula(w, lam, d, mode)

    def test_degrees_add_up(self):
        for p in enumerate_rel_fixed_points(perm("2,1,3"), (3, 1, 0), (3, 2)):
            assert p.degree == (3, 2)

    def test_monotone_in_degree(self):
        # the empty chain embeds the Laumon points, so dimensions never drop below v_d
        lam = (2, 1, 0)
        for d in itertools.product(range(4), repeat=2):
            assert graded_dim_direct(identity(3), lam, d) >= graded_dim_direct(longest_element(3), lam, d)

    def test_round_trip(self):
        for p in enumerate_rel_fixed_points(identity(3), (2, 1, 0), (2, 2)):
            assert RelFixedPoint.from_dict(p.to_dict()) == p

    def test_rejects_mismatched_laumon_part(self):
        p = enumerate_rel_fixed_points(identity(2), (3, 1), (2,))[-1]
        with pytest.raises(InputError):
            RelFixedPoint(p.chain, enumerate_rel_fixed_points(identity(2), (3, 1), (0,))[0].parametrized_part)


class TestNodeWeights:
    def test_empty_chain(self):
        assert node_weights(BubbleChain(identity(2))) == []

    @pytest.mark.parametrize("n", [2, 3])
    def test_vanish_on_specialization(self, n):
        for lam in itertools.combinations(range(4, -1, -1), n):
            for w in permutations(n):
                for chain in enumerate_all_chains(w, lam):
                    for wt in node_weights(chain):
                        assert wt.specialize(lam) == 0

    def test_generic_weights_nonzero(self):
        chain = enumerate_chains(identity(2), perm("2,1"), (3, 1))[0]
        (wt,) = node_weights(chain)
        assert wt == (Weight.a(2, 1) - Weight.a(2, 2)) / 2 - Weight.eps(2)


class TestRelFWeight:
    def test_examples(self):
        points = enumerate_rel_fixed_points(identity(2), (3, 1), (2,))
        bubbled = [p for p in points if p.chain.edges][0]
        assert rel_f_weight(bubbled, 1) == Weight.a(2, 2)
        points = enumerate_rel_fixed_points(identity(2), (2, 1), (2,))
        bubbled = [p for p in points if p.chain.edges][0]
        assert rel_f_weight(bubbled, 1) == Weight.a(2, 2) - Weight.eps(2)
