"""Construction and claim-verifier tests."""

from itertools import combinations

import pytest

from tricover import (
    TriGraph,
    UnsupportedResidueError,
    base_graph,
    builtin_pattern,
    check_construction,
    codegree,
    construct,
    construct_h,
    construct_h4,
    construct_t,
    covered_at,
    h4_part_sizes,
    is_triangle_free,
    link_graph,
    link_graph_for,
    lower_bound_certificate,
    min_codegree,
    pair_degree_table,
    verify_claim,
)


def _by_label(obj):
    table = {}
    for v, lab in obj.class_of.items():
        table.setdefault(lab, []).append(v)
    return table


class TestBaseGraphs:
    @pytest.mark.parametrize("name,n,edges", [("G1", 11, 21), ("G2", 14, 30), ("G3", 15, 35)])
    def test_counts_and_triangle_freeness(self, name, n, edges):
        g = base_graph(name)
        assert (g.n, g.edge_count) == (n, edges)
        assert is_triangle_free(g).triangle_free

    def test_g1_degree_of_v1(self):
        g = base_graph("G1")
        lab = {s: v for v, s in g.class_of.items()}
        v1 = lab["v1"]
        assert g.degree(v1) == 3
        assert g.neighbors(v1) == {lab["v2"], lab["v6"], lab["1"]}

    def test_g3_degree_of_vertex_9(self):
        g = base_graph("G3")
        lab = {s: v for v, s in g.class_of.items()}
        nine = lab["9"]
        assert g.degree(nine) == 5
        assert g.neighbors(nine) == {lab["1"], lab["3"], lab["7"], lab["v2"], lab["v5"]}

    def test_hexagon_and_outer_cycle_present(self):
        for name, r in (("G1", 5), ("G2", 8), ("G3", 8)):
            g = base_graph(name)
            lab = {s: v for v, s in g.class_of.items()}
            for j in range(6):
                assert g.has_edge(lab[f"v{j + 1}"], lab[f"v{(j + 1) % 6 + 1}"])
            for i in range(r):
                assert g.has_edge(lab[str(i + 1)], lab[str((i + 1) % r + 1)])

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            base_graph("G4")


class TestLinkFamilies:
    def test_h1_m1(self):
        H = construct_h("H1", 1)
        assert H.n == 6 and H.distinguished == 0
        link = link_graph(H, 0).graph
        assert all(link.degree(v) == 2 for v in range(5)) and link.edge_count == 5
        assert min_codegree(H).min == 2

    def test_h2_m1(self):
        H = construct_h("H2", 1)
        assert H.n == 9
        assert min_codegree(H).min == 3
        assert covered_at(H, 0, builtin_pattern("K4-")) is None

    def test_h3_m2(self):
        H = construct_h("H3", 2)
        assert H.n == 16
        assert min_codegree(H).min == 5 == 16 // 3
        one = _by_label(H)["1"][0]
        assert codegree(H, 0, one) == 2 * 2 + 2 == 6

    @pytest.mark.parametrize("family,m", [(f, m) for f in ("H1", "H2", "H3") for m in (1, 2, 3)])
    def test_link_regularity(self, family, m):
        H = construct_h(family, m)
        link = link_graph(H, 0).graph
        degs = sorted(link.degree(v) for v in range(link.n))
        if family == "H1":
            assert degs == [2 * m] * (H.n - 1)
        elif family == "H2":
            assert degs == [2 * m + 1] * (H.n - 1)
        else:
            assert degs == [2 * m + 1] * (H.n - 2) + [2 * m + 2]

    def test_link_rule_defines_non_x_edges(self):
        # a triple avoiding x is an edge exactly when it spans <= 1 link edge
        H = construct_h("H2", 2)
        link = link_graph(H, 0)
        inv = link.host_to_link()
        for tri in combinations(range(1, H.n), 3):
            spans = sum(
                1
                for a, b in combinations(tri, 2)
                if link.graph.has_edge(inv[a], inv[b])
            )
            assert (tri in H.edge_set) == (spans <= 1)

    def test_construct_link_matches_link_graph(self):
        for fam, m in (("H1", 2), ("H3", 1)):
            H = construct_h(fam, m)
            assert link_graph(H, 0).graph.edges() == link_graph_for(fam, m).edges()

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            construct_h("H1", 0)


class TestMatchingPartite:
    def test_2_2_2_cross_codegrees(self):
        T = construct_t((2, 2, 2))
        table = pair_degree_table(T)
        for a in range(2):
            for b in range(2, 4):
                assert table[(a, b)] == 1

    def test_1_1_2_single_edge(self):
        assert construct_t((1, 1, 2)).edge_count == 1

    @pytest.mark.parametrize("sizes", [(1, 1, 1), (2, 2, 3), (2, 3, 3), (3, 3, 4), (4, 5, 5)])
    def test_max_codegree_at_most_1(self, sizes):
        T = construct_t(sizes)
        assert max(pair_degree_table(T).values()) <= 1
        assert verify_claim("T", sizes=sizes).passed

    def test_bad_sizes(self):
        for sizes in ((0, 1, 1), (2, 1, 3), (3, 3, 2)):
            with pytest.raises(ValueError):
                construct_t(sizes)


class TestThreePartConstruction:
    def test_part_sizes(self):
        assert h4_part_sizes(5) == (1, 1, 2)
        assert h4_part_sizes(7) == (2, 2, 2)
        assert h4_part_sizes(10) == (3, 3, 3)
        assert h4_part_sizes(12) == (3, 4, 4)
        with pytest.raises(ValueError):
            h4_part_sizes(4)

    def test_n7(self):
        H = construct_h4(7)
        assert min_codegree(H).min == 4 == (2 * 7 - 2) // 3
        assert covered_at(H, 0, builtin_pattern("K5-")) is None

    def test_n10(self):
        assert min_codegree(construct_h4(10)).min == 6

    def test_x_codegree_formula(self):
        for n in (7, 9, 12):
            H = construct_h4(n)
            sizes = h4_part_sizes(n)
            offsets = [1, 1 + sizes[0], 1 + sizes[0] + sizes[1]]
            for i, size in enumerate(sizes):
                for b in range(offsets[i], offsets[i] + size):
                    assert codegree(H, 0, b) == n - 1 - size


class TestVerifyClaim:
    @pytest.mark.parametrize("family,m", [(f, m) for f in ("H1", "H2", "H3") for m in (1, 2)])
    def test_link_families_pass(self, family, m):
        report = verify_claim(family, m=m)
        assert report.passed
        expected = {"H1": 2 * m, "H2": 2 * m + 1, "H3": 2 * m + 1}[family]
        assert report.measured_delta2 == report.expected_delta2 == expected

    @pytest.mark.parametrize("n", [5, 6, 7, 8, 13])
    def test_three_part_passes(self, n):
        report = verify_claim("H4", n=n)
        assert report.passed and report.measured_delta2 == (2 * n - 2) // 3

    def test_base_graphs_pass(self):
        for name in ("G1", "G2", "G3"):
            assert verify_claim(name).passed

    def test_mutated_construction_fails_on_delta2(self):
        H = construct_h("H1", 2)
        x_edge = next(e for e in H.edges if 0 in e)
        mutated = TriGraph(
            H.n,
            [e for e in H.edges if e != x_edge],
            distinguished=H.distinguished,
            class_of=H.class_of,
        )
        report = check_construction(mutated, "H1", m=2)
        assert not report.passed
        assert report.checks["delta2"] is False
        assert report.measured_delta2 == 2 * 2 - 1

    def test_report_dict_key_stability(self):
        doc = verify_claim("H1", m=1).to_dict()
        assert list(doc) == [
            "family", "parameter", "n", "edge_count", "expected_delta2",
            "measured_delta2", "pattern", "link_degree_profile", "checks",
            "labels", "notes", "passed",
        ]

    def test_infers_m_from_vertex_count(self):
        H = construct_h("H2", 2)
        assert check_construction(H, "H2").parameter == {"m": 2}

    def test_missing_distinguished_vertex(self):
        H = construct_h("H1", 1)
        stripped = TriGraph(H.n, H.edges, class_of=H.class_of)
        report = check_construction(stripped, "H1", m=1)
        assert not report.passed and "has_distinguished_vertex" in report.checks


class TestLowerBoundCertificate:
    def test_12_k4m_uses_h1(self):
        H, report = lower_bound_certificate(12, "K4-")
        assert report.family == "H1" and report.parameter == {"m": 2}
        assert report.passed and report.measured_delta2 == 4

    def test_10_k4m_uses_h3(self):
        H, report = lower_bound_certificate(10, "K4-")
        assert report.family == "H3" and report.measured_delta2 == 3

    def test_9_k4m_uses_h2(self):
        _, report = lower_bound_certificate(9, "K4-")
        assert report.family == "H2" and report.passed

    def test_unsupported_residue(self):
        for n in (8, 11, 13, 17):
            with pytest.raises(UnsupportedResidueError):
                lower_bound_certificate(n, "K4-")

    def test_k5m_any_n(self):
        for n in (5, 7, 11, 20):
            H, report = lower_bound_certificate(n, "K5-")
            assert report.passed and report.measured_delta2 == (2 * n - 2) // 3

    def test_unknown_pattern(self):
        with pytest.raises(ValueError):
            lower_bound_certificate(9, "K4")


def test_construct_dispatcher_requires_params():
    with pytest.raises(ValueError):
        construct("H1")
    with pytest.raises(ValueError):
        construct("H4")
    with pytest.raises(ValueError):
        construct("T")
    with pytest.raises(ValueError):
        construct("H9")
