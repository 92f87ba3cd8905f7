"""Core type and degree-query tests."""

from itertools import combinations
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricover import (
    Graph,
    TriGraph,
    codegree,
    complete_trigraph,
    construct_h,
    construct_h4,
    is_triangle_free,
    link_graph,
    min_codegree,
    pair_degree_table,
    spanned_link_edges,
)

from _brute import bf_codegree, bf_min_codegree, bf_triangle_free, random_trigraph


def trigraphs(max_n=9):
    return st.integers(3, max_n).flatmap(
        lambda n: st.builds(
            lambda es: TriGraph(n, es),
            st.lists(
                st.sets(st.integers(0, n - 1), min_size=3, max_size=3).map(lambda s: tuple(sorted(s))),
                max_size=40,
            ),
        )
    )


class TestGraph:
    def test_adjacency_symmetric_irreflexive(self):
        g = Graph(4, [(0, 1), (1, 2)])
        assert g.has_edge(1, 0) and g.has_edge(0, 1)
        assert not g.has_edge(0, 2)
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_edges_sorted(self):
        g = Graph(4, [(2, 3), (1, 0), (3, 1)])
        assert g.edges() == [(0, 1), (1, 3), (2, 3)]
        assert g.edge_count == 3


class TestTriGraph:
    def test_canonical_edges_and_membership(self):
        h = TriGraph(5, [(2, 0, 1), (3, 4, 2)])
        assert h.edges == ((0, 1, 2), (2, 3, 4))
        assert h.has_edge(4, 2, 3)
        assert not h.has_edge(0, 1, 3)

    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            TriGraph(4, [(0, 1, 1)])
        with pytest.raises(ValueError):
            TriGraph(4, [(0, 1, 4)])

    def test_duplicate_edges_collapse(self):
        h = TriGraph(4, [(0, 1, 2), (2, 1, 0)])
        assert h.edge_count == 1


class TestCodegree:
    def test_complete_on_5(self):
        H = complete_trigraph(5)
        assert all(codegree(H, a, b) == 3 for a, b in combinations(range(5), 2))

    def test_blowup_link_family_m1(self):
        # at m = 1 the link of x is 2-regular, so every pair through x has codegree 2
        H = construct_h("H1", 1)
        assert all(codegree(H, 0, a) == 2 for a in range(1, 6))

    def test_edgeless(self):
        H = TriGraph(6)
        assert codegree(H, 2, 5) == 0

    def test_errors(self):
        H = complete_trigraph(4)
        with pytest.raises(ValueError):
            codegree(H, 1, 1)
        with pytest.raises(ValueError):
            codegree(H, 0, 4)

    def test_against_brute_force(self):
        rng = Random(11)
        for _ in range(20):
            H = random_trigraph(rng, rng.randint(4, 8), 0.4)
            for a, b in combinations(range(H.n), 2):
                assert codegree(H, a, b) == bf_codegree(H, a, b)


class TestMinCodegree:
    def test_complete_k4(self):
        assert min_codegree(complete_trigraph(4)).min == 2

    def test_h2_m1(self):
        assert min_codegree(construct_h("H2", 1)).min == 3

    def test_h4_n7(self):
        assert min_codegree(construct_h4(7)).min == (2 * 7 - 2) // 3 == 4

    def test_complete_is_n_minus_2(self):
        for n in range(3, 9):
            assert min_codegree(complete_trigraph(n)).min == n - 2

    def test_histogram_totals(self):
        rng = Random(5)
        for _ in range(10):
            H = random_trigraph(rng, rng.randint(3, 8), 0.5)
            prof = min_codegree(H)
            assert sum(prof.histogram.values()) == H.n * (H.n - 1) // 2
            assert prof.min == min(k for k, c in prof.histogram.items() if c > 0)
            assert prof.min == bf_min_codegree(H)
            assert all(pair_degree_table(H)[p] == prof.min for p in prof.argmin_pairs)

    def test_too_small(self):
        with pytest.raises(ValueError):
            min_codegree(TriGraph(1))


class TestLinkGraph:
    def test_complete_k4_link_is_triangle(self):
        link = link_graph(complete_trigraph(4), 0)
        assert link.graph.edges() == [(0, 1), (0, 2), (1, 2)]
        assert link.to_host == (1, 2, 3)

    def test_h1_m1_link_is_5_cycle(self):
        link = link_graph(construct_h("H1", 1), 0).graph
        assert link.n == 5
        assert all(link.degree(v) == 2 for v in range(5))
        assert link.edge_count == 5

    def test_h3_m1_link_profile(self):
        # one vertex of degree 4 (the one labeled "1"), the other eight of degree 3
        H = construct_h("H3", 1)
        link = link_graph(H, 0)
        degs = sorted(link.graph.degree(v) for v in range(link.graph.n))
        assert degs == [3] * 8 + [4]
        heavy = max(range(link.graph.n), key=link.graph.degree)
        assert H.class_of[link.to_host[heavy]] == "1"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            link_graph(complete_trigraph(4), 4)

    @settings(max_examples=60, deadline=None)
    @given(trigraphs(max_n=8), st.data())
    def test_link_degree_equals_codegree(self, H, data):
        x = data.draw(st.integers(0, H.n - 1))
        link = link_graph(H, x)
        for i, host in enumerate(link.to_host):
            assert link.graph.degree(i) == codegree(H, x, host)

    @settings(max_examples=60, deadline=None)
    @given(trigraphs(max_n=8))
    def test_codegree_sum_is_3e(self, H):
        table = pair_degree_table(H)
        assert sum(table.values()) == 3 * H.edge_count


class TestTriangleFree:
    def test_single_triangle(self):
        res = is_triangle_free(Graph(4, [(0, 1), (1, 2), (0, 2)]))
        assert not res.triangle_free and res.witness == (0, 1, 2)

    def test_cycle(self):
        assert is_triangle_free(Graph(5, [(i, (i + 1) % 5) for i in range(5)])).triangle_free

    def test_against_brute_force(self):
        rng = Random(3)
        sizes = [rng.randint(3, 12) for _ in range(40)] + [20, 40, 60, 60]
        for n in sizes:
            p = rng.choice((0.05, 0.15, 0.3))
            edges = [e for e in combinations(range(n), 2) if rng.random() < p]
            g = Graph(n, edges)
            res = is_triangle_free(g)
            assert res.triangle_free == bf_triangle_free(g)
            if not res.triangle_free:
                a, b, c = res.witness
                assert g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)


class TestSpannedLinkEdges:
    def test_triangle(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert spanned_link_edges(g, (0, 1, 2)) == 3

    def test_independent(self):
        assert spanned_link_edges(Graph(5), (0, 2, 4)) == 0

    def test_in_5_cycle(self):
        # cycle 0-1-2-3-4-0; {0, 1, 3} spans only the edge 01
        g = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert spanned_link_edges(g, (0, 1, 3)) == 1

    def test_malformed(self):
        g = Graph(5)
        with pytest.raises(ValueError):
            spanned_link_edges(g, (0, 1))
        with pytest.raises(ValueError):
            spanned_link_edges(g, (0, 1, 1))
