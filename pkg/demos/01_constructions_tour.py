#!/usr/bin/env python3
"""Tour of the extremal constructions and their verified certificates.

Builds the three triangle-free base graphs, the blowup-link hypergraphs
H1/H2/H3 (the K4^- certificates), the matching-partite helper T, and the
three-part hypergraph H4 (the K5^- certificate), printing the measured
quantities next to the targets.
"""

from tricover import (
    base_graph,
    construct_h,
    construct_h4,
    construct_t,
    h4_part_sizes,
    is_triangle_free,
    link_graph,
    min_codegree,
    pair_degree_table,
    verify_claim,
    write_edge_list,
)


def banner(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


def main():
    banner("Base graphs: hexagon + outer cycle + cross edges")
    for name in ("G1", "G2", "G3"):
        g = base_graph(name)
        tf = is_triangle_free(g)
        print(f"  {name}: {g.n} vertices, {g.edge_count} edges, "
              f"triangle-free={tf.triangle_free}")

    banner("K4^- certificates: delta2 = floor(n/3) with an uncoverable vertex")
    print(f"  {'family':<8}{'m':>3}{'n':>5}{'delta2':>8}{'target':>8}  link degrees")
    for family in ("H1", "H2", "H3"):
        for m in (1, 2, 3):
            report = verify_claim(family, m=m)
            profile = ", ".join(
                f"{c} of degree {d}" for d, c in sorted(report.link_degree_profile.items())
            )
            assert report.passed
            print(f"  {family:<8}{m:>3}{report.n:>5}{report.measured_delta2:>8}"
                  f"{report.expected_delta2:>8}  {profile}")

    banner("A closer look at H1 with m = 1 (n = 6)")
    H = construct_h("H1", 1)
    link = link_graph(H, 0)
    print("  link of x:", link.graph.edges(), "(a 5-cycle)")
    print("  edge-list file:")
    for line in write_edge_list(H).splitlines():
        print("   ", line)

    banner("The matching-partite helper T")
    T = construct_t((2, 2, 2))
    print("  sizes (2,2,2):", sorted(T.edges))
    print("  max codegree:", max(pair_degree_table(T).values()), "(always <= 1)")

    banner("K5^- certificates: delta2 = floor((2n-2)/3)")
    print(f"  {'n':>4}  {'parts':<12}{'delta2':>7}{'target':>8}{'passed':>8}")
    for n in (5, 6, 7, 10, 16, 23, 30):
        report = verify_claim("H4", n=n)
        print(f"  {n:>4}  {str(h4_part_sizes(n)):<12}{report.measured_delta2:>7}"
              f"{report.expected_delta2:>8}{str(report.passed):>8}")

    banner("Codegree structure of H4 at n = 7")
    H = construct_h4(7)
    table = pair_degree_table(H)
    hist = {}
    for d in table.values():
        hist[d] = hist.get(d, 0) + 1
    print("  codegree histogram:", dict(sorted(hist.items())))
    print("  delta2:", min_codegree(H).min)


if __name__ == "__main__":
    main()
