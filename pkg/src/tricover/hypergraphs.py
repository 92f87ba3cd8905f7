"""Core types for 2-graphs and 3-uniform hypergraphs.

Vertices are the integers 0..n-1 throughout.  Both graph types are immutable
after construction and every operation in this module is a pure function, so
values may be shared freely across threads.

For a 3-graph H, the codegree of a vertex pair {a, b} is the number of
vertices c with {a, b, c} an edge; delta2(H) is the minimum codegree over all
pairs.  The link graph of a vertex x is the 2-graph on V(H) - {x} whose edges
are exactly the pairs completing an edge of H together with x.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Optional


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise ValueError(f"vertex {v!r} out of range [0, {n})")


class Graph:
    """Simple undirected graph with adjacency-set representation.

    ``class_of`` optionally labels vertices with provenance (a blowup class,
    a partite class, or a construction's vertex name).  Labels ride along
    through file round-trips but play no role in adjacency queries.
    """

    __slots__ = ("n", "adj", "class_of")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        class_of: Optional[Mapping[int, str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        if class_of is not None:
            for v in class_of:
                _check_vertex(v, n)
            self.class_of = dict(class_of)
        else:
            self.class_of = None

    def neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(v, self.n)
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.adj == other.adj
            and self.class_of == other.class_of
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _canonical_triple(e: Iterable[int], n: int) -> tuple[int, int, int]:
    t = tuple(sorted(e))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"edge {tuple(e)!r} is not a 3-element vertex set")
    for v in t:
        _check_vertex(v, n)
    return t  # type: ignore[return-value]


class TriGraph:
    """Simple 3-uniform hypergraph.

    Edges are stored both as a lexicographically sorted tuple of canonical
    triples (deterministic iteration) and as a frozenset (O(1) membership).
    ``distinguished`` optionally marks one vertex; the extremal constructions
    use it for the vertex certified to be uncoverable.
    """

    __slots__ = ("n", "edges", "distinguished", "class_of", "_edge_set")

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]] = (),
        distinguished: Optional[int] = None,
        class_of: Optional[Mapping[int, str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = {_canonical_triple(e, n) for e in edges}
        self.n = n
        self.edges = tuple(sorted(canon))
        self._edge_set = frozenset(canon)
        if distinguished is not None:
            _check_vertex(distinguished, n)
        self.distinguished = distinguished
        if class_of is not None:
            for v in class_of:
                _check_vertex(v, n)
            self.class_of = dict(class_of)
        else:
            self.class_of = None

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self._edge_set

    @property
    def edge_set(self) -> frozenset[tuple[int, int, int]]:
        return self._edge_set

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self._edge_set == other._edge_set
            and self.distinguished == other.distinguished
            and self.class_of == other.class_of
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set, self.distinguished))

    def __repr__(self) -> str:
        x = f", x={self.distinguished}" if self.distinguished is not None else ""
        return f"TriGraph(n={self.n}, edges={self.edge_count}{x})"


@dataclass(frozen=True)
class PairDegreeProfile:
    """Codegree statistics over all unordered vertex pairs of a 3-graph.

    ``min`` is delta2; ``argmin_pairs`` lists every pair attaining it;
    ``histogram`` maps codegree value -> number of pairs, with counts summing
    to n*(n-1)/2 (pairs of codegree zero included).
    """

    min: int
    argmin_pairs: tuple[tuple[int, int], ...]
    histogram: Mapping[int, int]


def codegree(H: TriGraph, a: int, b: int) -> int:
    """Number of vertices c such that {a, b, c} is an edge of H."""
    _check_vertex(a, H.n)
    _check_vertex(b, H.n)
    if a == b:
        raise ValueError("codegree requires two distinct vertices")
    return sum(1 for c in range(H.n) if c != a and c != b and H.has_edge(a, b, c))


def pair_degree_table(H: TriGraph) -> dict[tuple[int, int], int]:
    """Codegree of every unordered pair, computed in one pass over the edges."""
    table = {p: 0 for p in combinations(range(H.n), 2)}
    for a, b, c in H.edges:
        table[(a, b)] += 1
        table[(a, c)] += 1
        table[(b, c)] += 1
    return table


def min_codegree(H: TriGraph) -> PairDegreeProfile:
    """Full pair-degree profile of H; ``min`` is the minimum codegree delta2."""
    if H.n < 2:
        raise ValueError("minimum codegree needs at least 2 vertices")
    table = pair_degree_table(H)
    lo = min(table.values())
    histogram: dict[int, int] = {}
    for d in table.values():
        histogram[d] = histogram.get(d, 0) + 1
    argmin = tuple(sorted(p for p, d in table.items() if d == lo))
    return PairDegreeProfile(min=lo, argmin_pairs=argmin, histogram=histogram)


class LinkGraph(NamedTuple):
    """Link of a vertex, re-indexed to 0..n-2; ``to_host`` maps back."""

    graph: Graph
    to_host: tuple[int, ...]

    def host_to_link(self) -> dict[int, int]:
        return {h: i for i, h in enumerate(self.to_host)}


def link_graph(H: TriGraph, x: int) -> LinkGraph:
    """Link graph of x: the 2-graph {ab : xab in E(H)} on V(H) - {x}.

    The result is compact (vertices 0..n-2); ``to_host[i]`` recovers the
    original index of link vertex i.  Link labels are inherited from H.
    """
    _check_vertex(x, H.n)
    to_host = tuple(v for v in range(H.n) if v != x)
    to_link = {h: i for i, h in enumerate(to_host)}
    edges = []
    for a, b, c in H.edges:
        if x == a:
            edges.append((to_link[b], to_link[c]))
        elif x == b:
            edges.append((to_link[a], to_link[c]))
        elif x == c:
            edges.append((to_link[a], to_link[b]))
    class_of = None
    if H.class_of is not None:
        class_of = {to_link[v]: lab for v, lab in H.class_of.items() if v != x}
    return LinkGraph(Graph(len(to_host), edges, class_of=class_of), to_host)


class TriangleCheck(NamedTuple):
    triangle_free: bool
    witness: Optional[tuple[int, int, int]]


def is_triangle_free(G: Graph) -> TriangleCheck:
    """Whether G has no three mutually adjacent vertices.

    On failure the lexicographically smallest witness triangle is returned.
    """
    for u, v in G.edges():
        common = G.adj[u] & G.adj[v]
        if common:
            w = min(common)
            return TriangleCheck(False, tuple(sorted((u, v, w))))  # type: ignore[arg-type]
    return TriangleCheck(True, None)


def spanned_link_edges(G: Graph, s: Iterable[int]) -> int:
    """Number of edges of G inside the 3-vertex set s (0..3).

    On three vertices, "spans at most one edge" is exactly path-freeness: no
    two of the three pairs are both edges.
    """
    t = tuple(sorted(s))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"{tuple(s)!r} is not a set of 3 distinct vertices")
    a, b, c = t
    for v in t:
        _check_vertex(v, G.n)
    return int(G.has_edge(a, b)) + int(G.has_edge(a, c)) + int(G.has_edge(b, c))


def complete_trigraph(n: int, distinguished: Optional[int] = None) -> TriGraph:
    """The complete 3-graph on n vertices."""
    return TriGraph(n, combinations(range(n), 3), distinguished=distinguished)
