"""Exhaustive computation of covering codegree thresholds at small n.

The threshold c2(n, F) is the maximum of delta2(H) over n-vertex 3-graphs H
in which some vertex lies in no copy of F.  Relabeling lets the search pin
vertex 0 as the uncovered one, dividing the space by n without loss.

Search strategy (branch and bound):

* The edges through vertex 0 form its link, a 2-graph on the other n-1
  vertices.  Links are enumerated once per vertex count and reduced to one
  representative per isomorphism class (relabeling the non-pinned vertices
  maps valid completions to valid completions and preserves delta2).
* Since the codegree of (0, a) equals the link degree of a, a link whose
  minimum degree is below the target can never help; the remaining triples
  are decided by depth-first search with an admissible per-pair bound
  (current codegree plus undecided triples) and an incremental covering
  check that forbids any decision making vertex 0 covered.
* The outer loop deepens on the target value v = n-2, n-3, ...: each level
  either exhibits a witness with delta2 >= v or refutes it, so the first
  witness pins the threshold exactly.

For the complete and near-complete patterns K_t / K_t^- the covering check
is a subset counter (vertex 0 is covered iff some (t-1)-set T satisfies
"link pairs in T + edges in T >= threshold"); other patterns fall back on
the generic embedder and are correspondingly slower.

A separate naive path (``prune=False``) enumerates every edge subset and is
used to validate the pruned search on tiny instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from random import Random
from typing import Optional, Sequence

import numpy as np

from .fileio import to_json_dict
from .hypergraphs import TriGraph, min_codegree, pair_degree_table
from .patterns import Pattern, clique_profile, covered_by_count, covering_report, is_covered

DEFAULT_HARD_CAP = 8
DEFAULT_SEED = 20160901


class BudgetExhausted(Exception):
    """Internal: search ran out of nodes or time."""


class _Budget:
    __slots__ = ("node_limit", "deadline", "nodes")

    def __init__(self, node_limit: Optional[int], time_limit: Optional[float]):
        self.node_limit = node_limit
        self.deadline = time.monotonic() + time_limit if time_limit is not None else None
        self.nodes = 0

    def spend(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted


@dataclass
class SearchResult:
    """Outcome of a threshold search.

    ``value`` is exact when ``exhaustive`` is True; otherwise it is the best
    verified lower bound found before the budget ran out (-1 when no witness
    was found at all, with ``witness`` None).
    """

    n: int
    pattern: str
    value: int
    witness: Optional[TriGraph]
    exhaustive: bool
    nodes_explored: int
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "value": self.value,
            "exhaustive": self.exhaustive,
            "nodes_explored": self.nodes_explored,
            "elapsed_seconds": round(self.elapsed, 6),
            "witness": to_json_dict(self.witness) if self.witness is not None else None,
        }


# ---------------------------------------------------------------------------
# Link enumeration with isomorphism rejection
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4)
def _link_classes(nv: int) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int, int], ...]]:
    """All 2-graphs on nv <= 7 vertices up to isomorphism, as edge bitmasks.

    Returns (pair list, ((mask, min_degree, edge_count), ...)).  Masks are
    scanned in increasing order; an unseen mask is the lexicographic minimum
    of its orbit, and its whole orbit (images under all vertex permutations,
    computed vectorized) is marked seen.
    """
    if nv > 7:
        raise ValueError("link enumeration is limited to 7 vertices")
    pairs = tuple(combinations(range(nv), 2))
    P = len(pairs)
    pidx = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(nv)))
    sigma = np.empty((len(perms), P), dtype=np.int64)
    for k, pm in enumerate(perms):
        for j, (x, y) in enumerate(pairs):
            u, v = pm[x], pm[y]
            sigma[k, j] = pidx[(u, v) if u < v else (v, u)]
    pow2 = np.int64(1) << sigma

    seen = bytearray(1 << P)
    reps = []
    for mask in range(1 << P):
        if seen[mask]:
            continue
        bits = [j for j in range(P) if (mask >> j) & 1]
        if bits:
            images = pow2[:, bits].sum(axis=1).tolist()
        else:
            images = [0]
        for im in images:
            seen[im] = 1
        degs = [0] * nv
        for j in bits:
            x, y = pairs[j]
            degs[x] += 1
            degs[y] += 1
        reps.append((mask, min(degs) if nv else 0, len(bits)))
    return pairs, tuple(reps)


# ---------------------------------------------------------------------------
# Inner search over the triples avoiding vertex 0
# ---------------------------------------------------------------------------

class _InnerSearch:
    """Per-(n, pattern) tables for completing a fixed link of vertex 0.

    Link vertices carry local labels 0..nv-1 (host vertex = local + 1);
    ``triples`` are the candidate edges avoiding vertex 0.
    """

    def __init__(self, n: int, F: Pattern):
        self.n = n
        self.nv = n - 1
        self.F = F
        self.pairs = list(combinations(range(self.nv), 2))
        self.pidx = {p: i for i, p in enumerate(self.pairs)}
        self.triples = list(combinations(range(self.nv), 3))
        self.tri_pairs = [
            (self.pidx[(a, b)], self.pidx[(a, c)], self.pidx[(b, c)])
            for a, b, c in self.triples
        ]
        self.pair_tris: list[list[int]] = [[] for _ in self.pairs]
        for i, ps in enumerate(self.tri_pairs):
            for p in ps:
                self.pair_tris[p].append(i)
        profile = clique_profile(F)
        self.theta: Optional[int] = None
        self.sets: list[tuple[int, ...]] = []
        self.set_pairs: list[list[int]] = []
        self.tri_sets: list[list[int]] = [[] for _ in self.triples]
        if profile is not None:
            t, theta = profile
            self.theta = theta
            if t - 1 <= self.nv:
                self.sets = list(combinations(range(self.nv), t - 1))
                sidx = {s: i for i, s in enumerate(self.sets)}
                self.set_pairs = [
                    [self.pidx[p] for p in combinations(s, 2)] for s in self.sets
                ]
                for i, tri in enumerate(self.triples):
                    tri_set = set(tri)
                    for s_i, s in enumerate(self.sets):
                        if tri_set <= set(s):
                            self.tri_sets[i].append(s_i)

    # -- helpers -----------------------------------------------------------

    def link_degrees(self, mask: int) -> list[int]:
        degs = [0] * self.nv
        for j, (x, y) in enumerate(self.pairs):
            if (mask >> j) & 1:
                degs[x] += 1
                degs[y] += 1
        return degs

    def _link1(self, mask: int) -> list[int]:
        return [(mask >> j) & 1 for j in range(len(self.pairs))]

    def _initial_tot(self, link1: list[int]) -> list[int]:
        return [sum(link1[p] for p in sp) for sp in self.set_pairs]

    def host_edges(self, mask: int, chosen: Sequence[int]) -> list[tuple[int, int, int]]:
        edges = [
            (0, x + 1, y + 1)
            for j, (x, y) in enumerate(self.pairs)
            if (mask >> j) & 1
        ]
        for i in chosen:
            a, b, c = self.triples[i]
            edges.append((a + 1, b + 1, c + 1))
        return edges

    def link_covers_pinned(self, mask: int) -> bool:
        """Is vertex 0 covered already by the link triples alone?"""
        link1 = self._link1(mask)
        if self.theta is not None:
            if not self.sets:
                return False
            return any(t >= self.theta for t in self._initial_tot(link1))
        H = TriGraph(self.n, self.host_edges(mask, ()))
        return is_covered(H, 0, self.F)

    # -- greedy completion (cheap lower bounds, clique patterns only) ------

    def greedy_value(self, mask: int) -> Optional[tuple[int, list[int]]]:
        """Add triples in lexicographic order whenever vertex 0 stays
        uncovered; returns (delta2, chosen) for the resulting maximal graph."""
        if self.theta is None:
            return None
        link1 = self._link1(mask)
        tot = self._initial_tot(link1)
        if any(t >= self.theta for t in tot):
            return None
        counts = link1[:]
        chosen = []
        for i in range(len(self.triples)):
            if all(tot[s] + 1 < self.theta for s in self.tri_sets[i]):
                for s in self.tri_sets[i]:
                    tot[s] += 1
                for p in self.tri_pairs[i]:
                    counts[p] += 1
                chosen.append(i)
        degs = self.link_degrees(mask)
        value = min(min(degs), min(counts)) if self.pairs else min(degs)
        return value, chosen

    # -- decision search: is there a completion with delta2 >= v? ----------

    def decision_search(
        self, mask: int, v: int, budget: _Budget
    ) -> Optional[list[tuple[int, int, int]]]:
        nv, P = self.nv, len(self.pairs)
        degs = self.link_degrees(mask)
        if min(degs) < v:
            return None
        link1 = self._link1(mask)
        in_cnt = [0] * P
        und = [nv - 2] * P
        clique = self.theta is not None
        if clique:
            tot = self._initial_tot(link1)
            if any(t >= self.theta for t in tot):
                return None
        else:
            tot = []
            current: list[int] = []
            if self.link_covers_pinned(mask):
                return None
        decided = bytearray(len(self.triples))  # 0 undecided, 1 in, 2 out

        def rec() -> Optional[list[int]]:
            budget.spend()
            minval = nv  # upper bound on any pair value
            pick = -1
            pickval = nv + 1
            for p in range(P):
                val = link1[p] + in_cnt[p] + und[p]
                if val < minval:
                    minval = val
                if und[p] and val < pickval:
                    pickval = val
                    pick = p
            if minval < v:
                return None
            if pick < 0:
                return [i for i in range(len(decided)) if decided[i] == 1]
            tri = next(i for i in self.pair_tris[pick] if decided[i] == 0)

            # try including the triple when it keeps vertex 0 uncovered
            allowed = True
            if clique:
                for s in self.tri_sets[tri]:
                    if tot[s] + 1 >= self.theta:
                        allowed = False
                        break
            else:
                current.append(tri)
                H = TriGraph(self.n, self.host_edges(mask, current))
                allowed = not is_covered(H, 0, self.F)
                current.pop()
            if allowed:
                decided[tri] = 1
                for p in self.tri_pairs[tri]:
                    in_cnt[p] += 1
                    und[p] -= 1
                if clique:
                    for s in self.tri_sets[tri]:
                        tot[s] += 1
                else:
                    current.append(tri)
                res = rec()
                if res is not None:
                    return res
                decided[tri] = 0
                for p in self.tri_pairs[tri]:
                    in_cnt[p] -= 1
                    und[p] += 1
                if clique:
                    for s in self.tri_sets[tri]:
                        tot[s] -= 1
                else:
                    current.pop()

            # exclude it
            decided[tri] = 2
            for p in self.tri_pairs[tri]:
                und[p] -= 1
            res = rec()
            if res is not None:
                return res
            decided[tri] = 0
            for p in self.tri_pairs[tri]:
                und[p] += 1
            return None

        chosen = rec()
        if chosen is None:
            return None
        return self.host_edges(mask, chosen)


# ---------------------------------------------------------------------------
# Top-level searches
# ---------------------------------------------------------------------------

def _naive_search(n: int, F: Pattern, budget: _Budget) -> tuple[int, Optional[TriGraph]]:
    """Enumerate every 3-graph with vertex 0 pinned uncovered; no pruning."""
    triples = list(combinations(range(n), 3))
    if len(triples) > 20:
        raise ValueError("naive enumeration is limited to n <= 6")
    best, witness = -1, None
    for mask in range(1 << len(triples)):
        budget.spend()
        edges = [triples[i] for i in range(len(triples)) if (mask >> i) & 1]
        H = TriGraph(n, edges)
        if is_covered(H, 0, F):
            continue
        d = min(pair_degree_table(H).values())
        if d > best:
            best, witness = d, H
    return best, witness


_SEED_FAMILIES = ("complete", "bipartite", "tripartite", "quadripartite", "cycle_complement")


def _seed_link_mask(nv: int, pairs: Sequence[tuple[int, int]], family: str) -> int:
    """Deterministic structured links used only to seed lower bounds."""
    def has(x: int, y: int) -> bool:
        if family == "complete":
            return True
        if family == "cycle_complement":
            return (x - y) % nv not in (1, nv - 1)
        r = {"bipartite": 2, "tripartite": 3, "quadripartite": 4}[family]
        return x % r != y % r

    mask = 0
    for j, (x, y) in enumerate(pairs):
        if has(x, y):
            mask |= 1 << j
    return mask


def _deepening_search(
    n: int, F: Pattern, budget: _Budget, partial: dict
) -> tuple[int, Optional[TriGraph]]:
    """Iterative deepening on the target value.  ``partial`` is updated with
    the best verified lower bound found so far, so a budget-exhausted caller
    can still report it."""
    nv = n - 1
    inner = _InnerSearch(n, F)
    if nv <= 7:
        _, reps = _link_classes(nv)
        rep_list = list(reps)
    else:
        rep_list = None

    def consider_greedy(mask: int) -> None:
        res = inner.greedy_value(mask)
        if res is not None and res[0] > partial["value"]:
            partial["value"] = res[0]
            partial["edges"] = inner.host_edges(mask, res[1])

    if inner.theta is not None:
        if rep_list is not None:
            for mask, mind, _ in sorted(rep_list, key=lambda i: -i[1]):
                budget.spend()
                if mind > partial["value"]:
                    consider_greedy(mask)
        else:
            for fam in _SEED_FAMILIES:
                budget.spend()
                consider_greedy(_seed_link_mask(nv, inner.pairs, fam))

    for v in range(n - 2, -1, -1):
        if v <= partial["value"]:
            # all levels above were refuted, so the stored witness is optimal
            return partial["value"], TriGraph(n, partial["edges"])
        if rep_list is not None:
            candidates = sorted(
                (info for info in rep_list if info[1] >= v),
                key=lambda info: (info[2], info[0]),
            )
            for mask, _, _ in candidates:
                budget.spend()
                edges = inner.decision_search(mask, v, budget)
                if edges is not None:
                    return v, TriGraph(n, edges)
        else:
            found = _large_link_level(inner, v, budget)
            if found is not None:
                return v, TriGraph(n, found)
    raise AssertionError("level 0 always admits the edgeless witness")


def _large_link_level(
    inner: _InnerSearch, v: int, budget: _Budget
) -> Optional[list[tuple[int, int, int]]]:
    """Deepening level for n beyond the enumeration range: DFS over link
    pairs with a degree-potential prune, no isomorphism rejection."""
    nv = inner.nv
    pairs = inner.pairs
    P = len(pairs)
    remaining_at = [[0] * nv for _ in range(P + 1)]
    for j in range(P - 1, -1, -1):
        x, y = pairs[j]
        for u in range(nv):
            remaining_at[j][u] = remaining_at[j + 1][u] + (1 if u in (x, y) else 0)
    deg = [0] * nv

    def rec(j: int, mask: int) -> Optional[list[tuple[int, int, int]]]:
        budget.spend()
        if any(deg[u] + remaining_at[j][u] < v for u in range(nv)):
            return None
        if j == P:
            return inner.decision_search(mask, v, budget)
        x, y = pairs[j]
        deg[x] += 1
        deg[y] += 1
        res = rec(j + 1, mask | (1 << j))
        deg[x] -= 1
        deg[y] -= 1
        if res is not None:
            return res
        return rec(j + 1, mask)

    return rec(0, 0)


def exact_c2(
    n: int,
    pattern: Pattern,
    *,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    prune: bool = True,
    hard_cap: int = DEFAULT_HARD_CAP,
    allow_large: bool = False,
    threads: int = 1,
) -> SearchResult:
    """Maximum delta2 over n-vertex 3-graphs in which vertex 0 is uncovered.

    Exhaustive (``exhaustive=True``) results equal c2(n, pattern).  Witnesses
    are re-verified independently (codegree profile and covering report)
    before being returned.  ``prune=False`` switches to the naive full
    enumeration (n <= 5 scale, used for cross-validation).  Beyond
    ``hard_cap`` the search requires ``allow_large`` plus an explicit budget
    and will typically return a non-exhaustive result.

    The search is deterministic; ``threads`` is accepted for interface
    compatibility but exploration runs in-process.
    """
    if pattern.edge_count == 0:
        raise ValueError("pattern must have at least one edge")
    if n < pattern.t:
        raise ValueError(f"need n >= {pattern.t} vertices to host the pattern")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if n > hard_cap:
        if not allow_large:
            raise ValueError(f"n = {n} exceeds the hard cap {hard_cap}; pass allow_large=True")
        if node_budget is None and time_budget is None:
            raise ValueError("searches beyond the hard cap require a node or time budget")

    budget = _Budget(node_budget, time_budget)
    start = time.monotonic()
    exhaustive = True
    partial: dict = {"value": -1, "edges": None}
    try:
        if prune:
            value, witness = _deepening_search(n, pattern, budget, partial)
        else:
            value, witness = _naive_search(n, pattern, budget)
    except BudgetExhausted:
        value = partial["value"]
        witness = TriGraph(n, partial["edges"]) if partial["edges"] is not None else None
        exhaustive = False
    elapsed = time.monotonic() - start

    if witness is not None:
        # independent re-verification of the returned certificate
        profile = min_codegree(witness)
        report = covering_report(witness, pattern)
        if profile.min != value or 0 not in report.uncovered:
            raise AssertionError("search produced an inconsistent witness")
        witness = TriGraph(witness.n, witness.edges, distinguished=0)
    return SearchResult(
        n=n,
        pattern=pattern.name,
        value=value,
        witness=witness,
        exhaustive=exhaustive,
        nodes_explored=budget.nodes,
        elapsed=elapsed,
    )


# ---------------------------------------------------------------------------
# Randomized spot-check above the threshold
# ---------------------------------------------------------------------------

@dataclass
class CertifyReport:
    """Outcome of sampling 3-graphs with delta2 above a threshold.

    Every sampled graph gets a full covering check; graphs with an uncovered
    vertex are counterexamples to "delta2 > threshold forces a covering" and
    double as lower-bound witnesses.  Above the true threshold none should
    appear.
    """

    n: int
    pattern: str
    threshold: int
    samples: int
    seed: int
    counterexamples: list[TriGraph] = field(default_factory=list)

    @property
    def counterexample_count(self) -> int:
        return len(self.counterexamples)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "threshold": self.threshold,
            "samples": self.samples,
            "seed": self.seed,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [to_json_dict(H) for H in self.counterexamples],
        }


def _sample_above_threshold(n: int, threshold: int, rng: Random) -> TriGraph:
    """A random 3-graph with delta2 > threshold: start from density 1/2 and
    repair by adding random triples through minimum-codegree pairs."""
    triples = list(combinations(range(n), 3))
    present = {t for t in triples if rng.random() < 0.5}
    counts = {p: 0 for p in combinations(range(n), 2)}
    for a, b, c in present:
        counts[(a, b)] += 1
        counts[(a, c)] += 1
        counts[(b, c)] += 1
    while True:
        lo_pair = min(counts, key=lambda p: (counts[p], p))
        if counts[lo_pair] > threshold:
            break
        a, b = lo_pair
        absent = [
            c for c in range(n)
            if c not in lo_pair and tuple(sorted((a, b, c))) not in present
        ]
        c = rng.choice(absent)
        tri = tuple(sorted((a, b, c)))
        present.add(tri)
        for p in combinations(tri, 2):
            counts[p] += 1
    return TriGraph(n, present)


def certify_upper_behavior(
    n: int,
    pattern: Pattern,
    threshold: int,
    samples: int,
    seed: int = DEFAULT_SEED,
) -> CertifyReport:
    """Sample 3-graphs with delta2 > threshold and report any without a
    pattern-covering.

    Finding one would contradict "c2(n, pattern) <= threshold"; when the
    threshold is set below the true value, witnesses are expected and are
    reported as lower-bound certificates.  Candidate counterexamples are
    re-verified with the generic embedder before being recorded.
    """
    if n > 12:
        raise ValueError("sampling spot-checks are limited to n <= 12")
    if threshold > n - 3:
        raise ValueError(f"no 3-graph on {n} vertices has delta2 > {threshold}")
    can_count = clique_profile(pattern) is not None
    rng = Random(seed)
    report = CertifyReport(n=n, pattern=pattern.name, threshold=threshold,
                           samples=samples, seed=seed)
    for _ in range(samples):
        H = _sample_above_threshold(n, threshold, rng)
        if can_count:
            uncovered = [v for v in range(H.n) if not covered_by_count(H, v, pattern)]
        else:
            uncovered = [v for v in range(H.n) if not is_covered(H, v, pattern)]
        if uncovered:
            confirm = covering_report(H, pattern)
            if confirm.uncovered:
                report.counterexamples.append(H)
            else:
                raise AssertionError("covering detectors disagree on a sample")
    return report
