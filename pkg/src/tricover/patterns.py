"""Covering targets and the "is vertex v in a copy of F" machinery.

A pattern F is a small 3-graph.  A copy of F in H is an injective vertex map
sending every edge of F to an edge of H (subgraph containment: extra edges
among the image vertices are allowed).  H has an F-covering when every vertex
lies in at least one copy.

Two independent detectors are provided:

* a generic backtracking embedder (works for any pattern, returns witnesses),
* a counting check for the complete and near-complete patterns K_t / K_t^-,
  based on the fact that a t-set of vertices hosts a copy of K_t (K_t^-)
  exactly when it spans at least C(t,3) (C(t,3) - 1) edges.

The obstruction checker certifies that a vertex x lies in no K4^- copy: it
suffices that the link of x is triangle-free and that no edge avoiding x
spans two or more link edges, because a K4^- through x needs three edges on
four vertices and each shape of such a triple violates one of the two
conditions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Mapping, NamedTuple, Optional

from .hypergraphs import TriGraph, link_graph, is_triangle_free, spanned_link_edges


@dataclass(frozen=True)
class Pattern:
    """A covering target: 3-graph on vertices 0..t-1 with a display name."""

    t: int
    edges: frozenset[tuple[int, int, int]]
    name: str

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 3 or sorted(e) != list(e) or not all(0 <= v < self.t for v in e):
                raise ValueError(f"bad pattern edge {e!r}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


_PATTERN_RE = re.compile(r"^K(\d+)(-?)$")


def builtin_pattern(name: str) -> Pattern:
    """Built-in patterns by name: ``K4``, ``K4-``, ``K5``, ``K5-``, generally
    ``K<t>`` and ``K<t>-`` for 4 <= t <= 8 (CLI spellings ``Kt:<t>`` and
    ``Kt-:<t>`` are accepted too).

    ``K<t>-`` is the complete 3-graph on t vertices minus the single edge
    {0, 1, 2}.
    """
    canonical = name
    if name.startswith("Kt-:"):
        canonical = f"K{name[4:]}-"
    elif name.startswith("Kt:"):
        canonical = f"K{name[3:]}"
    m = _PATTERN_RE.match(canonical)
    if not m:
        raise ValueError(f"unknown pattern name {name!r}")
    t = int(m.group(1))
    minus = m.group(2) == "-"
    if not 4 <= t <= 8:
        raise ValueError(f"built-in patterns require 4 <= t <= 8, got {t}")
    edges = set(combinations(range(t), 3))
    if minus:
        edges.discard((0, 1, 2))
    return Pattern(t=t, edges=frozenset(edges), name=f"K{t}-" if minus else f"K{t}")


def clique_profile(F: Pattern) -> Optional[tuple[int, int]]:
    """(t, threshold) when F is K_t or K_t^-: a t-set hosts a copy of F iff it
    spans at least ``threshold`` edges.  None for other shapes."""
    full = comb(F.t, 3)
    if F.edge_count == full:
        return F.t, full
    if F.edge_count == full - 1:
        return F.t, full - 1
    return None


# ---------------------------------------------------------------------------
# Generic backtracking embedder
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _anchor_orbit_reps(F: Pattern) -> tuple[int, ...]:
    """One pattern vertex per automorphism orbit (anchoring v at any orbit
    member succeeds iff anchoring at the representative does)."""
    if F.t > 8:
        return tuple(range(F.t))
    autos = []
    edge_set = set(F.edges)
    for perm in permutations(range(F.t)):
        if all(tuple(sorted((perm[a], perm[b], perm[c]))) in edge_set for a, b, c in F.edges):
            autos.append(perm)
    return tuple(sorted({min(perm[p] for perm in autos) for p in range(F.t)}))


def _search_order(F: Pattern, anchor: int) -> list[int]:
    """Anchor first, then greedily prefer vertices with many edges into the
    already-placed prefix (fail-fast ordering for existence checks)."""
    order = [anchor]
    placed = {anchor}
    remaining = [p for p in range(F.t) if p != anchor]
    deg = {p: sum(1 for e in F.edges if p in e) for p in range(F.t)}
    while remaining:
        def gain(q: int) -> tuple[int, int, int]:
            full = sum(1 for e in F.edges if q in e and all(w in placed or w == q for w in e))
            return (full, deg[q], -q)
        best = max(remaining, key=gain)
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _extend(
    H: TriGraph,
    F: Pattern,
    order: list[int],
    phi: dict[int, int],
    used: set[int],
    h_degrees: list[int],
    f_degrees: list[int],
) -> Optional[dict[int, int]]:
    if len(phi) == len(order):
        return dict(phi)
    q = order[len(phi)]
    # pattern edges decided once q is placed
    ready = [e for e in F.edges if q in e and all(w in phi or w == q for w in e)]
    for c in range(H.n):
        if c in used:
            continue
        if h_degrees[c] < f_degrees[q]:
            continue
        ok = True
        for e in ready:
            img = tuple(sorted(phi[w] if w != q else c for w in e))
            if img not in H.edge_set:
                ok = False
                break
        if not ok:
            continue
        phi[q] = c
        used.add(c)
        res = _extend(H, F, order, phi, used, h_degrees, f_degrees)
        if res is not None:
            return res
        del phi[q]
        used.remove(c)
    return None


def _vertex_edge_degrees(H: TriGraph) -> list[int]:
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    return deg


def _exists_embedding(H: TriGraph, v: int, F: Pattern) -> bool:
    if F.t > H.n:
        return False
    h_deg = _vertex_edge_degrees(H)
    f_deg = [sum(1 for e in F.edges if p in e) for p in range(F.t)]
    for anchor in _anchor_orbit_reps(F):
        order = _search_order(F, anchor)
        if _extend(H, F, order, {anchor: v}, {v}, h_deg, f_deg) is not None:
            return True
    return False


def _lexmin_embedding(H: TriGraph, v: int, F: Pattern) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest embedding tuple (phi(0), ..., phi(t-1)) with
    v in the image, or None.  Filling positions in index order with ascending
    candidates yields the per-anchor lexicographic minimum; minimizing over
    all anchor positions gives the global one, which makes reports
    independent of evaluation order."""
    if F.t > H.n:
        return None
    h_deg = _vertex_edge_degrees(H)
    f_deg = [sum(1 for e in F.edges if p in e) for p in range(F.t)]
    best: Optional[tuple[int, ...]] = None
    for anchor in range(F.t):
        res = _extend_lexmin(H, F, {anchor: v}, h_deg, f_deg)
        if res is not None:
            tup = tuple(res[p] for p in range(F.t))
            if best is None or tup < best:
                best = tup
    return best


def _extend_lexmin(
    H: TriGraph,
    F: Pattern,
    phi: dict[int, int],
    h_deg: list[int],
    f_deg: list[int],
) -> Optional[dict[int, int]]:
    q = next((p for p in range(F.t) if p not in phi), None)
    if q is None:
        return dict(phi)
    used = set(phi.values())
    ready = [e for e in F.edges if q in e and all(w in phi or w == q for w in e)]
    for c in range(H.n):
        if c in used or h_deg[c] < f_deg[q]:
            continue
        if any(tuple(sorted(phi[w] if w != q else c for w in e)) not in H.edge_set for e in ready):
            continue
        phi[q] = c
        res = _extend_lexmin(H, F, phi, h_deg, f_deg)
        if res is not None:
            return res
        del phi[q]
    return None


def covered_at(H: TriGraph, v: int, F: Pattern) -> Optional[tuple[int, ...]]:
    """An embedding of F into H whose image contains v, or None.

    The returned tuple is the lexicographically smallest embedding (entry i is
    the image of pattern vertex i).  ``F.t > H.n`` yields None, not an error.
    """
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v!r} out of range [0, {H.n})")
    if not _exists_embedding(H, v, F):
        return None
    return _lexmin_embedding(H, v, F)


def is_covered(H: TriGraph, v: int, F: Pattern) -> bool:
    """Existence-only variant of :func:`covered_at` (no witness, faster)."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v!r} out of range [0, {H.n})")
    return _exists_embedding(H, v, F)


def covered_by_count(H: TriGraph, v: int, F: Pattern) -> bool:
    """Counting detector for K_t / K_t^- patterns, independent of the embedder.

    v is covered iff some (t-1)-set T avoiding v satisfies
    ``#link pairs of v inside T + #edges inside T >= threshold``.
    """
    profile = clique_profile(F)
    if profile is None:
        raise ValueError(f"pattern {F.name!r} is not a complete or near-complete 3-graph")
    t, threshold = profile
    if t > H.n:
        return False
    others = [u for u in range(H.n) if u != v]
    for T in combinations(others, t - 1):
        count = 0
        for a, b in combinations(T, 2):
            if H.has_edge(v, a, b):
                count += 1
        for e in combinations(T, 3):
            if e in H.edge_set:
                count += 1
        if count >= threshold:
            return True
    return False


# ---------------------------------------------------------------------------
# Whole-graph reports and the local obstruction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverReport:
    """Per-vertex covering status for one pattern.

    ``witnesses`` maps each covered vertex to its lexicographically smallest
    embedding; ``uncovered`` lists the rest in increasing order.
    """

    pattern: str
    n: int
    uncovered: tuple[int, ...]
    witnesses: Mapping[int, tuple[int, ...]]

    @property
    def fully_covered(self) -> bool:
        return not self.uncovered

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "n": self.n,
            "covered_count": self.n - len(self.uncovered),
            "uncovered": list(self.uncovered),
            "witnesses": {str(v): list(w) for v, w in sorted(self.witnesses.items())},
        }


def covering_report(H: TriGraph, F: Pattern) -> CoverReport:
    """Covering status of every vertex of H for the pattern F."""
    uncovered = []
    witnesses: dict[int, tuple[int, ...]] = {}
    for v in range(H.n):
        emb = covered_at(H, v, F)
        if emb is None:
            uncovered.append(v)
        else:
            witnesses[v] = emb
    return CoverReport(pattern=F.name, n=H.n, uncovered=tuple(uncovered), witnesses=witnesses)


class ObstructionCheck(NamedTuple):
    """Result of the local uncoverability test at a vertex.

    ``holds`` is True when (a) the link is triangle-free and (b) every edge
    avoiding the vertex spans at most one link edge; then no K4^- copy can
    contain the vertex.  On failure exactly one witness field is set: a
    triangle of the link (host indices) or an offending edge.
    """

    holds: bool
    link_triangle: Optional[tuple[int, int, int]]
    bad_edge: Optional[tuple[int, int, int]]


def covering_obstruction(H: TriGraph, x: int) -> ObstructionCheck:
    """Check the two local conditions under which x lies in no K4^- copy.

    A K4^- through x on {x, a, b, c} needs three of the four triples; either
    all three link pairs of {a, b, c} appear (a link triangle) or two link
    pairs plus the edge abc do (an edge spanning two link edges).
    """
    link = link_graph(H, x)
    tf = is_triangle_free(link.graph)
    if not tf.triangle_free:
        host = tuple(sorted(link.to_host[i] for i in tf.witness))  # type: ignore[union-attr]
        return ObstructionCheck(False, host, None)  # type: ignore[arg-type]
    to_link = link.host_to_link()
    for e in H.edges:
        if x in e:
            continue
        s = tuple(to_link[v] for v in e)
        if spanned_link_edges(link.graph, s) > 1:
            return ObstructionCheck(False, None, e)
    return ObstructionCheck(True, None, None)
