"""Extremal covering-free constructions and their mechanical verification.

Three families certify lower bounds on the K4^- covering threshold and one on
the K5^- threshold:

* ``H1`` (n = 6m), ``H2`` (n = 6m+3), ``H3`` (n = 6m+4): a distinguished
  vertex x whose link is a blowup of a fixed triangle-free base graph (plus
  one or two matchings), with every triple avoiding x an edge exactly when it
  spans at most one link edge.  The link obstruction then keeps x out of
  every K4^- copy while delta2 reaches floor(n/3).
* ``H4`` (any n >= 5): x joined to all cross-pairs of a near-balanced
  3-partition, all non-transversal triples present, and transversal triples
  given by round-robin matchings attached to the third part.  x avoids every
  K5^- copy while delta2 reaches floor((2n-2)/3).

``verify_claim`` rebuilds a construction and re-measures every quantity the
certificate depends on, producing a structured ClaimReport.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .blowup import BlowupResult, BlowupSpec, add_edge_list, add_matching_between, blowup
from .hypergraphs import (
    Graph,
    TriGraph,
    is_triangle_free,
    link_graph,
    min_codegree,
    pair_degree_table,
    spanned_link_edges,
)
from .koenig import complete_bipartite_matchings
from .patterns import builtin_pattern, covered_at, covering_obstruction


class UnsupportedResidueError(ValueError):
    """No construction is provided for this (n, pattern) combination."""


FAMILIES = ("G1", "G2", "G3", "H1", "H2", "H3", "T", "H4")

# Base graphs: a hexagon v1..v6, an outer cycle on numbered vertices, and a
# fixed set of cross edges.  Outer vertices take indices 0..r-1 (label i at
# index i-1), hexagon vertices r..r+5.
_HEX = [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v6", "v1")]

_BASE_SPECS: dict[str, dict] = {
    "G1": {
        "outer": 5,
        "outer_edges": [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
        "cross": [
            (1, "v1"), (1, "v3"), (2, "v2"), (2, "v5"), (3, "v4"),
            (3, "v6"), (4, "v3"), (4, "v5"), (5, "v2"), (5, "v6"),
        ],
    },
    "G2": {
        "outer": 8,
        "outer_edges": [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1)],
        "cross": [
            (1, "v1"), (1, "v3"), (2, "v2"), (2, "v6"), (3, "v1"), (3, "v5"),
            (4, "v3"), (4, "v6"), (5, "v2"), (5, "v4"), (6, "v3"), (6, "v5"),
            (7, "v4"), (7, "v6"), (8, "v2"), (8, "v5"),
        ],
    },
    "G3": {
        "outer": 9,
        "outer_edges": [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
            (1, 9), (3, 9), (7, 9),
        ],
        "cross": [
            (1, "v1"), (1, "v3"), (2, "v2"), (2, "v6"), (3, "v1"), (3, "v4"),
            (4, "v3"), (4, "v5"), (5, "v4"), (5, "v6"), (6, "v1"), (6, "v5"),
            (7, "v3"), (7, "v6"), (8, "v2"), (8, "v4"), (9, "v2"), (9, "v5"),
        ],
    },
}

# Which base each link family blows up, and which matchings get inserted:
# a perfect matching between the blowup classes of v1 and v4, and/or a fixed
# matching on outer vertices (given as label pairs).
_H_SPECS: dict[str, dict] = {
    "H1": {"base": "G1", "v_matching": True, "outer_matching": []},
    "H2": {"base": "G2", "v_matching": True, "outer_matching": [(1, 5), (2, 6), (3, 7), (4, 8)]},
    "H3": {"base": "G3", "v_matching": False, "outer_matching": [(1, 5), (2, 6), (4, 8)]},
}

_EXPECTED_BASE_COUNTS = {"G1": (11, 21), "G2": (14, 30), "G3": (15, 35)}


def base_graph(name: str) -> Graph:
    """One of the three fixed triangle-free base graphs G1, G2, G3."""
    spec = _BASE_SPECS.get(name)
    if spec is None:
        raise ValueError(f"unknown base graph {name!r} (expected G1, G2 or G3)")
    r = spec["outer"]

    def idx(label: Union[int, str]) -> int:
        if isinstance(label, int):
            return label - 1
        return r + int(label[1:]) - 1

    edges = [(idx(a), idx(b)) for a, b in _HEX]
    edges += [(idx(a), idx(b)) for a, b in spec["outer_edges"]]
    edges += [(idx(a), idx(b)) for a, b in spec["cross"]]
    class_of = {i: str(i + 1) for i in range(r)}
    class_of.update({r + j: f"v{j + 1}" for j in range(6)})
    return Graph(r + 6, edges, class_of=class_of)


def link_graph_for(family: str, m: int) -> Graph:
    """The link that defines H1/H2/H3: a blowup of the base graph (hexagon
    classes of size m-1, outer vertices kept single) plus the family's
    matchings.  For m = 1 the hexagon classes are empty and only the outer
    part survives."""
    spec = _H_SPECS.get(family)
    if spec is None:
        raise ValueError(f"unknown construction family {family!r}")
    if m < 1:
        raise ValueError("m must be a positive integer")
    base = base_graph(spec["base"])
    r = _BASE_SPECS[spec["base"]]["outer"]
    if m == 1:
        outer_only = Graph(
            r,
            [e for e in base.edges() if e[0] < r and e[1] < r],
            class_of={v: base.class_of[v] for v in range(r)},
        )
        res = blowup(BlowupSpec(outer_only, {v: 1 for v in range(r)}))
        members = dict(res.class_members)
        for j in range(6):
            members[r + j] = []
        res = BlowupResult(res.graph, members)
    else:
        mult = {v: 1 for v in range(r)}
        mult.update({r + j: m - 1 for j in range(6)})
        res = blowup(BlowupSpec(base, mult))
    g = res.graph
    if spec["v_matching"]:
        g = add_matching_between(res, r, r + 3)  # classes of v1 and v4
    pairs = [(a - 1, b - 1) for a, b in spec["outer_matching"]]
    if pairs:
        g = add_edge_list(g, pairs)
    return g


def construct_h(family: str, m: int) -> TriGraph:
    """Build H1, H2 or H3 with parameter m >= 1.

    Vertex 0 is the distinguished vertex x; its link is
    :func:`link_graph_for` shifted by one.  Every triple avoiding x is an
    edge exactly when it spans at most one link edge.
    """
    link = link_graph_for(family, m)
    edges: list[tuple[int, int, int]] = [(0, a + 1, b + 1) for a, b in link.edges()]
    for tri in combinations(range(link.n), 3):
        if spanned_link_edges(link, tri) <= 1:
            edges.append((tri[0] + 1, tri[1] + 1, tri[2] + 1))
    class_of = {0: "x"}
    for v in range(link.n):
        class_of[v + 1] = link.class_of[v]
    return TriGraph(link.n + 1, edges, distinguished=0, class_of=class_of)


def construct_t(sizes: tuple[int, int, int]) -> TriGraph:
    """3-partite 3-graph whose edges join each round-robin matching of
    K(V1, V2) to one vertex of the third part.

    ``sizes`` is (|V1|, |V2|, |V3|) with 1 <= |V1| <= |V2| <= |V3|.  Third-part
    vertex i (0-based, i < |V2|) picks up matching class i; any extra
    third-part vertices lie in no edge.  Every pair has codegree at most 1,
    and V1 x V2 pairs exactly 1.
    """
    a, m, ell = sizes
    if not (1 <= a <= m <= ell):
        raise ValueError(f"sizes must satisfy 1 <= |V1| <= |V2| <= |V3|, got {sizes}")
    coloring = complete_bipartite_matchings(a, m)
    edges = []
    for i in range(m):
        for u, w in coloring.classes[i]:
            edges.append((u, w, a + m + i))
    class_of = {}
    for v in range(a):
        class_of[v] = "V1"
    for v in range(a, a + m):
        class_of[v] = "V2"
    for v in range(a + m, a + m + ell):
        class_of[v] = "V3"
    return TriGraph(a + m + ell, edges, class_of=class_of)


def h4_part_sizes(n: int) -> tuple[int, int, int]:
    """The unique near-balanced part sizes (|V1|, |V2|, |V3|) summing to n-1
    with |V2|-1 <= |V1| <= |V2| <= |V3| <= |V2|+1 and |V3| - |V1| <= 1."""
    if n < 5:
        raise ValueError("the three-part construction needs n >= 5")
    s = n - 1
    if s % 3 == 0:
        m = s // 3
        parts = (m, m, m)
    elif s % 3 == 1:
        m = (s - 1) // 3
        parts = (m, m, m + 1)
    else:
        m = (s + 1) // 3
        parts = (m - 1, m, m)
    a, mm, ell = parts
    assert a + mm + ell == s and mm - 1 <= a <= mm <= ell <= mm + 1 and ell - a <= 1
    return parts


def construct_h4(n: int) -> TriGraph:
    """Build the K5^- certificate on n >= 5 vertices.

    Vertex 0 is x; parts V1, V2, V3 occupy indices 1..n-1 in order.  Edges:
    x with every cross-part pair, every non-transversal triple of the body,
    and the transversal triples of :func:`construct_t` on the parts.
    """
    a, m, ell = h4_part_sizes(n)
    t_graph = construct_t((a, m, ell))

    def part(v: int) -> int:
        if v <= a:
            return 0
        return 1 if v <= a + m else 2

    edges: list[tuple[int, int, int]] = []
    for u, w in combinations(range(1, n), 2):
        if part(u) != part(w):
            edges.append((0, u, w))
    for tri in combinations(range(1, n), 3):
        if len({part(v) for v in tri}) < 3:
            edges.append(tri)
    for u, w, z in t_graph.edges:
        edges.append((u + 1, w + 1, z + 1))
    class_of = {0: "x"}
    class_of.update({v: f"V{part(v) + 1}" for v in range(1, n)})
    return TriGraph(n, edges, distinguished=0, class_of=class_of)


def construct(
    family: str,
    *,
    m: Optional[int] = None,
    n: Optional[int] = None,
    sizes: Optional[tuple[int, int, int]] = None,
) -> Union[Graph, TriGraph]:
    """Dispatch on family name; the parameter kinds are family-specific."""
    if family in ("G1", "G2", "G3"):
        return base_graph(family)
    if family in ("H1", "H2", "H3"):
        if m is None:
            raise ValueError(f"{family} needs the parameter m")
        return construct_h(family, m)
    if family == "T":
        if sizes is None:
            raise ValueError("T needs part sizes (|V1|, |V2|, |V3|)")
        return construct_t(sizes)
    if family == "H4":
        if n is None:
            raise ValueError("H4 needs the vertex count n")
        return construct_h4(n)
    raise ValueError(f"unknown construction family {family!r}")


# ---------------------------------------------------------------------------
# Claim verification
# ---------------------------------------------------------------------------

@dataclass
class ClaimReport:
    """Re-measured certificate data for one construction.

    ``checks`` holds the named pass/fail sub-checks whose conjunction is
    ``passed``; the remaining fields carry the measured quantities and the
    grouped paper-label table (label -> vertex indices).
    """

    family: str
    parameter: dict
    n: int
    edge_count: int
    expected_delta2: Optional[int]
    measured_delta2: Optional[int]
    pattern: Optional[str]
    link_degree_profile: Optional[dict[int, int]]
    checks: dict[str, bool]
    labels: dict[str, list[int]]
    notes: tuple[str, ...] = ()
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = all(self.checks.values()) if self.checks else False

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "parameter": self.parameter,
            "n": self.n,
            "edge_count": self.edge_count,
            "expected_delta2": self.expected_delta2,
            "measured_delta2": self.measured_delta2,
            "pattern": self.pattern,
            "link_degree_profile": (
                {str(d): c for d, c in sorted(self.link_degree_profile.items())}
                if self.link_degree_profile is not None
                else None
            ),
            "checks": dict(sorted(self.checks.items())),
            "labels": {lab: list(vs) for lab, vs in sorted(self.labels.items())},
            "notes": list(self.notes),
            "passed": self.passed,
        }


def _label_table(obj: Union[Graph, TriGraph]) -> dict[str, list[int]]:
    table: dict[str, list[int]] = {}
    for v, lab in (obj.class_of or {}).items():
        table.setdefault(lab, []).append(v)
    for vs in table.values():
        vs.sort()
    return table


def _infer_m(family: str, n: int) -> int:
    offset = {"H1": 0, "H2": 3, "H3": 4}[family]
    if n < 6 + offset or (n - offset) % 6 != 0:
        raise ValueError(f"no parameter m gives an {family} on {n} vertices")
    return (n - offset) // 6


def check_base_graph(G: Graph, name: str) -> ClaimReport:
    exp_n, exp_edges = _EXPECTED_BASE_COUNTS[name]
    tf = is_triangle_free(G)
    checks = {
        "vertex_count": G.n == exp_n,
        "edge_count": G.edge_count == exp_edges,
        "triangle_free": tf.triangle_free,
    }
    return ClaimReport(
        family=name,
        parameter={},
        n=G.n,
        edge_count=G.edge_count,
        expected_delta2=None,
        measured_delta2=None,
        pattern=None,
        link_degree_profile=None,
        checks=checks,
        labels=_label_table(G),
    )


def _degree_profile(G: Graph) -> dict[int, int]:
    profile: dict[int, int] = {}
    for v in range(G.n):
        d = G.degree(v)
        profile[d] = profile.get(d, 0) + 1
    return profile


def check_h_construction(H: TriGraph, family: str, m: Optional[int] = None) -> ClaimReport:
    """Verify the K4^- certificate claims against a given 3-graph.

    Checks the vertex count, delta2, link triangle-freeness, the link degree
    profile, the local obstruction at x, and that x lies in no K4^- copy.
    """
    if family not in ("H1", "H2", "H3"):
        raise ValueError(f"{family!r} is not one of the blowup-link families")
    if m is None:
        m = _infer_m(family, H.n)
    expected_n = {"H1": 6 * m, "H2": 6 * m + 3, "H3": 6 * m + 4}[family]
    expected_delta = {"H1": 2 * m, "H2": 2 * m + 1, "H3": 2 * m + 1}[family]
    notes: list[str] = []
    if H.distinguished is None:
        return ClaimReport(
            family=family,
            parameter={"m": m},
            n=H.n,
            edge_count=H.edge_count,
            expected_delta2=expected_delta,
            measured_delta2=None,
            pattern="K4-",
            link_degree_profile=None,
            checks={"has_distinguished_vertex": False},
            labels=_label_table(H),
            notes=("no distinguished vertex marked; cannot verify the certificate",),
        )
    x = H.distinguished
    link = link_graph(H, x)
    profile = min_codegree(H)
    measured_profile = _degree_profile(link.graph)
    if family == "H3":
        expected_profile = {2 * m + 2: 1, 2 * m + 1: expected_n - 2}
    else:
        expected_profile = {expected_delta: expected_n - 1}
    obstruction = covering_obstruction(H, x)
    k4m = builtin_pattern("K4-")
    checks = {
        "vertex_count": H.n == expected_n,
        "delta2": profile.min == expected_delta,
        "link_triangle_free": is_triangle_free(link.graph).triangle_free,
        "link_degree_profile": measured_profile == expected_profile,
        "obstruction": obstruction.holds,
        "x_uncovered": covered_at(H, x, k4m) is None,
    }
    if family == "H3" and H.class_of:
        heavy = [v for v, lab in H.class_of.items() if lab == "1"]
        if len(heavy) == 1:
            link_idx = link.host_to_link().get(heavy[0])
            checks["heavy_vertex_degree"] = (
                link_idx is not None and link.graph.degree(link_idx) == 2 * m + 2
            )
    return ClaimReport(
        family=family,
        parameter={"m": m},
        n=H.n,
        edge_count=H.edge_count,
        expected_delta2=expected_delta,
        measured_delta2=profile.min,
        pattern="K4-",
        link_degree_profile=measured_profile,
        checks=checks,
        labels=_label_table(H),
        notes=tuple(notes),
    )


def check_t_construction(H: TriGraph, sizes: tuple[int, int, int]) -> ClaimReport:
    a, m, ell = sizes
    n = a + m + ell

    def part(v: int) -> int:
        return 0 if v < a else (1 if v < a + m else 2)

    table = pair_degree_table(H) if H.n >= 2 else {}
    transversal = all(len({part(v) for v in e}) == 3 for e in H.edges)
    cross_pairs_ok = all(
        table.get((u, w), 0) == 1 for u in range(a) for w in range(a, a + m)
    )
    checks = {
        "vertex_count": H.n == n,
        "edge_count": H.edge_count == a * m,
        "all_edges_transversal": transversal,
        "max_codegree_le_1": (max(table.values()) <= 1) if table else True,
        "v1_v2_codegree_1": cross_pairs_ok,
    }
    return ClaimReport(
        family="T",
        parameter={"sizes": list(sizes)},
        n=H.n,
        edge_count=H.edge_count,
        expected_delta2=None,
        measured_delta2=None,
        pattern=None,
        link_degree_profile=None,
        checks=checks,
        labels=_label_table(H),
    )


def check_h4_construction(H: TriGraph, n: Optional[int] = None) -> ClaimReport:
    """Verify the K5^- certificate claims against a given 3-graph.

    Besides delta2 and x being uncovered, every pair codegree is checked
    against its closed form: same-part pairs give n-3, pairs through x give
    n-1-|V_i|, and cross-part pairs give |V_i|+|V_j|-1+d_T.
    """
    if n is None:
        n = H.n
    a, m, ell = h4_part_sizes(n)
    expected_delta = (2 * n - 2) // 3
    notes = [
        f"delta2 target is floor((2n-2)/3) = {expected_delta}; "
        "the looser reading floor((3n-2)/3) is rejected as inconsistent "
        "with the per-pair codegree forms",
    ]
    if H.distinguished is None:
        return ClaimReport(
            family="H4",
            parameter={"n": n},
            n=H.n,
            edge_count=H.edge_count,
            expected_delta2=expected_delta,
            measured_delta2=None,
            pattern="K5-",
            link_degree_profile=None,
            checks={"has_distinguished_vertex": False},
            labels=_label_table(H),
            notes=("no distinguished vertex marked; cannot verify the certificate",),
        )
    x = H.distinguished
    sizes = (a, m, ell)

    def part(v: int) -> int:
        # canonical layout: x then V1, V2, V3 in index order
        body = v if v < x else v - 1
        if body < a:
            return 0
        return 1 if body < a + m else 2

    t_graph = construct_t(sizes)
    t_codegree = pair_degree_table(t_graph)

    def d_t(u: int, w: int) -> int:
        bu, bw = (u if u < x else u - 1), (w if w < x else w - 1)
        key = (bu, bw) if bu < bw else (bw, bu)
        return t_codegree.get(key, 0)

    table = pair_degree_table(H)
    profile = min_codegree(H)
    same_ok = x_ok = cross_ok = True
    for (u, w), d in table.items():
        if u == x or w == x:
            other = w if u == x else u
            if d != n - 1 - sizes[part(other)]:
                x_ok = False
        elif part(u) == part(w):
            if d != n - 3:
                same_ok = False
        else:
            if d != sizes[part(u)] + sizes[part(w)] - 1 + d_t(u, w):
                cross_ok = False
    k5m = builtin_pattern("K5-")
    checks = {
        "vertex_count": H.n == n,
        "delta2": profile.min == expected_delta,
        "x_uncovered": covered_at(H, x, k5m) is None,
        "codegree_same_part": same_ok,
        "codegree_x_pairs": x_ok,
        "codegree_cross_part": cross_ok,
    }
    return ClaimReport(
        family="H4",
        parameter={"n": n, "sizes": list(sizes)},
        n=H.n,
        edge_count=H.edge_count,
        expected_delta2=expected_delta,
        measured_delta2=profile.min,
        pattern="K5-",
        link_degree_profile=None,
        checks=checks,
        labels=_label_table(H),
        notes=tuple(notes),
    )


def check_construction(
    H: Union[Graph, TriGraph],
    family: str,
    *,
    m: Optional[int] = None,
    n: Optional[int] = None,
    sizes: Optional[tuple[int, int, int]] = None,
) -> ClaimReport:
    """Verify a given object against the named family's claims."""
    if family in ("G1", "G2", "G3"):
        if not isinstance(H, Graph):
            raise ValueError(f"{family} is a 2-graph family")
        return check_base_graph(H, family)
    if not isinstance(H, TriGraph):
        raise ValueError(f"{family} is a 3-graph family")
    if family in ("H1", "H2", "H3"):
        return check_h_construction(H, family, m=m)
    if family == "T":
        if sizes is None:
            raise ValueError("T verification needs part sizes")
        return check_t_construction(H, sizes)
    if family == "H4":
        return check_h4_construction(H, n=n)
    raise ValueError(f"unknown construction family {family!r}")


def verify_claim(
    family: str,
    *,
    m: Optional[int] = None,
    n: Optional[int] = None,
    sizes: Optional[tuple[int, int, int]] = None,
) -> ClaimReport:
    """Construct the named object and verify every claim made about it."""
    obj = construct(family, m=m, n=n, sizes=sizes)
    return check_construction(obj, family, m=m, n=n, sizes=sizes)


def lower_bound_certificate(n: int, pattern: Union[str, object]) -> tuple[TriGraph, ClaimReport]:
    """An n-vertex witness certifying the covering threshold lower bound.

    The returned 3-graph has delta2 equal to the threshold and a vertex in no
    copy of the pattern; the report carries the verified measurements.  For
    K4^- only n congruent to 0, 3 or 4 mod 6 (n >= 6) is constructible here;
    other residues raise :class:`UnsupportedResidueError`.
    """
    name = pattern if isinstance(pattern, str) else getattr(pattern, "name", None)
    if name == "K4-":
        if n < 6 or n % 6 not in (0, 3, 4):
            raise UnsupportedResidueError(
                f"no K4- certificate for n = {n}: need n >= 6 with n mod 6 in {{0, 3, 4}}"
            )
        family = {0: "H1", 3: "H2", 4: "H3"}[n % 6]
        m = _infer_m(family, n)
        H = construct_h(family, m)
        return H, check_h_construction(H, family, m=m)
    if name == "K5-":
        H = construct_h4(n)
        return H, check_h4_construction(H, n=n)
    raise ValueError(f"no certificate family for pattern {name!r}")
