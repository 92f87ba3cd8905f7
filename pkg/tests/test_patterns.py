"""Pattern containment, covering reports, and the local obstruction."""

from itertools import combinations
from random import Random

import pytest

from tricover import (
    Pattern,
    TriGraph,
    builtin_pattern,
    clique_profile,
    complete_trigraph,
    construct_h,
    construct_h4,
    covered_at,
    covered_by_count,
    covering_obstruction,
    covering_report,
    is_covered,
)

from _brute import bf_covered, bf_lexmin_embedding, random_trigraph


class TestBuiltinPatterns:
    def test_edge_counts(self):
        assert (builtin_pattern("K4-").t, builtin_pattern("K4-").edge_count) == (4, 3)
        assert (builtin_pattern("K5-").t, builtin_pattern("K5-").edge_count) == (5, 9)
        assert (builtin_pattern("K4").t, builtin_pattern("K4").edge_count) == (4, 4)

    def test_removed_edge_is_012(self):
        assert (0, 1, 2) not in builtin_pattern("K6-").edges

    def test_cli_spellings(self):
        assert builtin_pattern("Kt:6") == builtin_pattern("K6")
        assert builtin_pattern("Kt-:5") == builtin_pattern("K5-")

    def test_unknown_names(self):
        for bad in ("K3", "K9", "K4--", "Q4", "k4-"):
            with pytest.raises(ValueError):
                builtin_pattern(bad)

    def test_clique_profile(self):
        assert clique_profile(builtin_pattern("K5-")) == (5, 9)
        assert clique_profile(builtin_pattern("K4")) == (4, 4)
        odd = Pattern(5, frozenset({(0, 1, 2), (2, 3, 4)}), "pair")
        assert clique_profile(odd) is None


def _embedding_is_valid(H, F, emb):
    if len(set(emb)) != F.t:
        return False
    return all(tuple(sorted((emb[a], emb[b], emb[c]))) in H.edge_set for a, b, c in F.edges)


class TestCoveredAt:
    def test_pattern_in_itself(self):
        F = builtin_pattern("K4-")
        H = TriGraph(4, F.edges)
        for v in range(4):
            emb = covered_at(H, v, F)
            assert emb is not None and v in emb and _embedding_is_valid(H, F, emb)

    def test_pinned_vertex_never_covered_in_link_constructions(self):
        F = builtin_pattern("K4-")
        for m in (1, 2):
            assert covered_at(construct_h("H1", m), 0, F) is None

    def test_pinned_vertex_never_covered_in_three_part_construction(self):
        assert covered_at(construct_h4(7), 0, builtin_pattern("K5-")) is None

    def test_pattern_larger_than_graph(self):
        assert covered_at(complete_trigraph(4), 0, builtin_pattern("K5")) is None

    def test_bad_vertex(self):
        with pytest.raises(ValueError):
            covered_at(complete_trigraph(4), 4, builtin_pattern("K4"))

    def test_agrees_with_brute_force(self):
        rng = Random(2024)
        K4m, K5m = builtin_pattern("K4-"), builtin_pattern("K5-")
        for _ in range(25):
            H = random_trigraph(rng, rng.randint(4, 7), rng.choice((0.3, 0.5, 0.7)))
            for v in range(H.n):
                for F in (K4m, K5m):
                    emb = covered_at(H, v, F)
                    assert (emb is not None) == (bf_covered(H, v, F) is not None)
                    if emb is not None:
                        assert v in emb and _embedding_is_valid(H, F, emb)

    def test_witness_is_lexicographically_smallest(self):
        rng = Random(99)
        F = builtin_pattern("K4-")
        for _ in range(15):
            H = random_trigraph(rng, 6, 0.6)
            for v in range(H.n):
                assert covered_at(H, v, F) == bf_lexmin_embedding(H, v, F)
        F5 = builtin_pattern("K5-")
        for _ in range(4):
            H = random_trigraph(rng, 7, 0.7)
            for v in range(H.n):
                assert covered_at(H, v, F5) == bf_lexmin_embedding(H, v, F5)

    def test_monotone_under_edge_addition(self):
        rng = Random(41)
        F = builtin_pattern("K4-")
        for _ in range(10):
            H = random_trigraph(rng, 7, 0.3)
            covered_before = {v for v in range(7) if is_covered(H, v, F)}
            extra = [t for t in combinations(range(7), 3) if t not in H.edge_set]
            rng.shuffle(extra)
            H2 = TriGraph(7, list(H.edges) + extra[:4])
            covered_after = {v for v in range(7) if is_covered(H2, v, F)}
            assert covered_before <= covered_after


class TestCountingDetector:
    def test_cross_validates_with_embedder(self):
        rng = Random(7)
        K4m, K5m, K4, K5 = (builtin_pattern(s) for s in ("K4-", "K5-", "K4", "K5"))
        for _ in range(40):
            H = random_trigraph(rng, rng.randint(4, 8), rng.choice((0.3, 0.5, 0.8)))
            for F in (K4m, K5m, K4, K5):
                for v in range(H.n):
                    assert covered_by_count(H, v, F) == is_covered(H, v, F)

    def test_rejects_other_shapes(self):
        odd = Pattern(4, frozenset({(0, 1, 2)}), "one")
        with pytest.raises(ValueError):
            covered_by_count(complete_trigraph(4), 0, odd)


class TestCoveringReport:
    def test_complete_5_fully_covered(self):
        rep = covering_report(complete_trigraph(5), builtin_pattern("K5-"))
        assert rep.uncovered == () and rep.fully_covered
        assert set(rep.witnesses) == set(range(5))

    def test_h2_m1_x_uncovered(self):
        rep = covering_report(construct_h("H2", 1), builtin_pattern("K4-"))
        assert 0 in rep.uncovered

    def test_edgeless(self):
        rep = covering_report(TriGraph(6), builtin_pattern("K4-"))
        assert rep.uncovered == tuple(range(6)) and not rep.witnesses

    def test_dict_shape(self):
        rep = covering_report(complete_trigraph(4), builtin_pattern("K4"))
        doc = rep.to_dict()
        assert doc["covered_count"] == 4 and doc["uncovered"] == []
        assert set(doc["witnesses"]) == {"0", "1", "2", "3"}


class TestObstruction:
    def test_holds_on_link_constructions(self):
        for fam in ("H1", "H2", "H3"):
            for m in (1, 2):
                assert covering_obstruction(construct_h(fam, m), 0).holds

    def test_fails_on_complete_k4(self):
        res = covering_obstruction(complete_trigraph(4), 0)
        assert not res.holds and res.link_triangle == (1, 2, 3)

    def test_reports_bad_edge(self):
        # triangle-free link (path 1-2-3 through x) plus the edge {1,2,3}
        H = TriGraph(4, [(0, 1, 2), (0, 2, 3), (1, 2, 3)])
        res = covering_obstruction(H, 0)
        assert not res.holds and res.bad_edge == (1, 2, 3)

    def test_obstruction_implies_uncovered(self):
        F = builtin_pattern("K4-")
        for fam in ("H1", "H2", "H3"):
            for m in (1, 2, 3):
                H = construct_h(fam, m)
                assert covering_obstruction(H, 0).holds
                assert covered_at(H, 0, F) is None
