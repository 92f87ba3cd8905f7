"""Partition a bipartite graph's edges into Delta matchings.

Every bipartite graph with maximum degree Delta admits such a partition
(Koenig's edge-coloring theorem); for Delta-regular graphs each class is a
perfect matching.  The general routine inserts edges one at a time, giving
each a color free at both endpoints after at most one alternating-path
recolor.  A closed-form round-robin fast path covers complete bipartite
graphs, where bit-reproducible output matters for the constructions built on
top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .hypergraphs import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """Edge classes M_0, ..., M_{delta-1}: disjoint matchings covering E(G)."""

    classes: tuple[tuple[tuple[int, int], ...], ...]
    delta: int

    @property
    def edge_count(self) -> int:
        return sum(len(c) for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "class_count": len(self.classes),
            "classes": [[list(e) for e in c] for c in self.classes],
        }


def _first_free(used: dict[int, int], delta: int) -> int:
    for c in range(delta):
        if c not in used:
            return c
    raise AssertionError("no free color at a vertex of degree < delta")


def bipartite_edge_coloring(G: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> EdgeColoring:
    """Color E(G) with exactly Delta(G) colors, each class a matching.

    ``side_a`` and ``side_b`` must partition the vertex set with every edge
    crossing between them; a violating edge is reported in the error.
    """
    sa, sb = set(side_a), set(side_b)
    if sa & sb or sa | sb != set(range(G.n)):
        raise ValueError("sides must partition the vertex set")
    for u, v in G.edges():
        if (u in sa) == (v in sa):
            raise ValueError(f"edge ({u}, {v}) does not cross the given sides")

    delta = G.max_degree()
    if delta == 0:
        return EdgeColoring(classes=(), delta=0)

    used: list[dict[int, int]] = [dict() for _ in range(G.n)]  # vertex -> {color: partner}
    color_of: dict[tuple[int, int], int] = {}

    def assign(u: int, w: int, c: int) -> None:
        used[u][c] = w
        used[w][c] = u
        color_of[(u, w)] = c

    for u, w in G.edges():
        a = _first_free(used[u], delta)
        if a not in used[w]:
            assign(u, w, a)
            continue
        b = _first_free(used[w], delta)
        if b not in used[u]:
            assign(u, w, b)
            continue
        # a is free at u but used at w; b is free at w but used at u.  Swap
        # colors along the maximal (a, b)-alternating path from u; bipartite
        # parity keeps that path away from w, after which b is free at both.
        cur, col = u, b
        path: list[tuple[int, int, int]] = []
        while col in used[cur]:
            nxt = used[cur][col]
            path.append((cur, nxt, col))
            cur, col = nxt, (a if col == b else b)
        for x, y, c in path:
            del used[x][c]
            del used[y][c]
        for x, y, c in path:
            swapped = a if c == b else b
            used[x][swapped] = y
            used[y][swapped] = x
            color_of[(x, y) if x < y else (y, x)] = swapped
        assert b not in used[u] and b not in used[w]
        assign(u, w, b)

    classes: list[list[tuple[int, int]]] = [[] for _ in range(delta)]
    for edge, c in color_of.items():
        classes[c].append(edge)
    return EdgeColoring(
        classes=tuple(tuple(sorted(c)) for c in classes),
        delta=delta,
    )


def complete_bipartite_matchings(a: int, b: int) -> EdgeColoring:
    """Round-robin partition of K(a, b) into b matchings, a <= b.

    Vertices 0..a-1 form the small side, a..a+b-1 the large side; class i
    pairs small vertex j with large vertex a + (j + i) mod b.  Deterministic,
    so constructions built from it are bit-reproducible.
    """
    if a < 0 or b < 0:
        raise ValueError("side sizes must be non-negative")
    if a > b:
        raise ValueError(f"small side first: need a <= b, got ({a}, {b})")
    if a == 0 or b == 0:
        return EdgeColoring(classes=(), delta=0)
    classes = []
    for i in range(b):
        classes.append(tuple(sorted((j, a + (j + i) % b) for j in range(a))))
    return EdgeColoring(classes=tuple(classes), delta=b)


def coloring_is_valid(G: Graph, coloring: EdgeColoring) -> bool:
    """Disjoint matchings, union exactly E(G), class count = Delta(G)."""
    seen: set[tuple[int, int]] = set()
    for cls in coloring.classes:
        endpoints: set[int] = set()
        for u, v in cls:
            if not G.has_edge(u, v):
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
            if u in endpoints or v in endpoints:
                return False
            endpoints.update((u, v))
    if len(seen) != G.edge_count:
        return False
    return len(coloring.classes) == coloring.delta == G.max_degree()
