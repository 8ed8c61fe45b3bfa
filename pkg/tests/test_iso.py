import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphhash.coder import graph_hash, vertex_codes
from graphhash.graph import Graph, digraph_from_bits, random_graph, scramble
from graphhash.iso import (
    OracleCapExceeded,
    brute_force_isomorphic,
    hash_constrained_isomorphic,
    ullmann_isomorphic,
    verify_isomorphism,
)

from conftest import FIGURE1_EDGES, build

MATCHERS = [brute_force_isomorphic, ullmann_isomorphic, hash_constrained_isomorphic]


class TestVerify:
    def test_identity(self, figure1):
        assert verify_isomorphism(figure1, figure1, {0: 0, 1: 1, 2: 2})

    def test_figure1_swap(self, figure1):
        assert verify_isomorphism(figure1, figure1, {0: 0, 1: 2, 2: 1})
        assert not verify_isomorphism(figure1, figure1, {0: 1, 1: 0, 2: 2})

    def test_edge_count_mismatch(self):
        assert not verify_isomorphism(build(2, [(0, 1)]), build(2, []), {0: 0, 1: 1})

    def test_size_mismatch_is_false(self):
        assert not verify_isomorphism(build(2, []), build(3, []), {0: 0, 1: 1})

    def test_not_bijective(self):
        assert not verify_isomorphism(build(2, []), build(2, []), {0: 0, 1: 0})

    def test_multiplicity(self):
        a = build(2, [(0, 1), (0, 1), (1, 0)])
        b = build(2, [(0, 1), (1, 0), (1, 0)])
        assert not verify_isomorphism(a, b, {0: 0, 1: 1})
        assert verify_isomorphism(a, b, {0: 1, 1: 0})

    def test_labels(self):
        a = build(2, [(0, 1)], vlabels=[1, 2], elabels=[3])
        b = build(2, [(1, 0)], vlabels=[2, 1], elabels=[3])
        c = build(2, [(1, 0)], vlabels=[2, 1], elabels=[4])
        assert verify_isomorphism(a, b, {0: 1, 1: 0})
        assert not verify_isomorphism(a, c, {0: 1, 1: 0})

    def test_undirected_orientation_free(self):
        a = build(2, [(0, 1)], directed=False)
        b = build(2, [(0, 1)], directed=False)
        assert verify_isomorphism(a, b, {0: 1, 1: 0})


class TestBruteForce:
    def test_scrambled(self, figure1):
        assert brute_force_isomorphic(figure1, scramble(figure1, 7)).found

    def test_path_vs_triangle(self):
        path = build(3, [(0, 1), (1, 2)])
        tri = build(3, [(0, 1), (1, 2), (2, 0)])
        assert not brute_force_isomorphic(path, tri).found

    def test_six_cycle_vs_two_triangles(self):
        c6 = build(6, [(i, (i + 1) % 6) for i in range(6)])
        two = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        r = brute_force_isomorphic(c6, two)
        assert not r.found
        assert r.nodes > 0
        # same-degree pair the hash alone separates as well
        assert graph_hash(c6, False) != graph_hash(two, False)

    def test_cap(self):
        g = random_graph(9, 3, seed=0)
        with pytest.raises(OracleCapExceeded):
            brute_force_isomorphic(g, g)
        assert brute_force_isomorphic(g, g, cap=9).found


class TestMatchers:
    @pytest.mark.parametrize("matcher", MATCHERS)
    def test_empty(self, matcher):
        r = matcher(Graph(), Graph())
        assert r.found and r.mapping == {}

    @pytest.mark.parametrize("matcher", MATCHERS)
    def test_mapping_verifies(self, matcher, figure1):
        h = scramble(figure1, 3)
        r = matcher(figure1, h)
        assert r.found and verify_isomorphism(figure1, h, r.mapping)

    @pytest.mark.parametrize("matcher", MATCHERS)
    def test_label_mismatch(self, matcher):
        a = build(3, FIGURE1_EDGES[:3], vlabels=[1, 1, 2])
        b = build(3, FIGURE1_EDGES[:3], vlabels=[1, 2, 2])
        assert not matcher(a, b).found

    def test_disjoint_code_multisets(self):
        a = build(3, [(0, 1), (1, 2)])
        b = build(3, [(0, 1), (0, 2)])
        r = hash_constrained_isomorphic(a, b)
        assert not r.found and r.nodes == 0

    def test_ullmann_loops_and_parallels(self):
        g = build(3, [(0, 0), (0, 1), (0, 1), (1, 2), (2, 1)])
        h = build(3, [(0, 0), (0, 1), (1, 2), (1, 2), (2, 1)])
        assert ullmann_isomorphic(g, scramble(g, 1)).found
        assert not ullmann_isomorphic(g, h).found
        assert not brute_force_isomorphic(g, h).found

    def test_ullmann_table1_scale(self):
        for nv, ne in [(10, 100), (20, 400), (30, 900)]:
            g = random_graph(nv, ne, True, None, seed=nv)
            h = scramble(g, ne)
            r = ullmann_isomorphic(g, h)
            assert r.found and verify_isomorphism(g, h, r.mapping)

    def test_ullmann_agrees_exhaustive_3(self):
        graphs = [digraph_from_bits(3, b) for b in range(64)]
        for g in graphs:
            for h in graphs:
                assert ullmann_isomorphic(g, h).found == brute_force_isomorphic(g, h).found

    def test_hash_agrees_exhaustive_4(self):
        # every 4-vertex digraph against a fixed random sample of partners
        rng = random.Random(4)
        graphs = [digraph_from_bits(4, b) for b in range(4096)]
        codes = [vertex_codes(g) for g in graphs]
        for a in range(0, 4096, 3):
            for b in rng.sample(range(4096), 4) + [a ^ 1, rng.randrange(4096)]:
                expect = brute_force_isomorphic(graphs[a], graphs[b]).found
                got = hash_constrained_isomorphic(graphs[a], graphs[b], codes[a], codes[b])
                assert got.found == expect

    def test_hash_agrees_with_self_images_4(self):
        import itertools

        rng = random.Random(5)
        for bits in rng.sample(range(4096), 200):
            g = digraph_from_bits(4, bits)
            perm = list(itertools.permutations(range(4)))[rng.randrange(24)]
            h = build(4, [(perm[e.source], perm[e.target]) for e in g.edges])
            assert hash_constrained_isomorphic(g, h).found


class TestProperties:
    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(2, 7),
        st.integers(0, 14),
        st.booleans(),
        st.sampled_from([None, 2]),
        st.integers(0, 2**32),
    )
    def test_constrained_search_not_larger(self, nv, ne, directed, lr, seed):
        g = random_graph(nv, ne, directed, lr, seed)
        h = scramble(g, seed + 1)
        brute = brute_force_isomorphic(g, h)
        hashed = hash_constrained_isomorphic(g, h)
        assert brute.found and hashed.found
        assert hashed.nodes <= brute.nodes

    @settings(max_examples=80, deadline=None)
    @given(st.integers(2, 6), st.integers(0, 10), st.booleans(), st.integers(0, 2**32), st.integers(0, 2**32))
    def test_verdicts_agree(self, nv, ne, directed, s1, s2):
        g = random_graph(nv, ne, directed, 2, s1)
        h = random_graph(nv, ne, directed, 2, s2)
        verdicts = {m(g, h).found for m in MATCHERS}
        assert len(verdicts) == 1
        if verdicts == {True}:
            assert graph_hash(g, True) == graph_hash(h, True)
