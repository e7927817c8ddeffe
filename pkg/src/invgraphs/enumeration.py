"""Isomorph-free generation of connected graphs and the census of connected
graphs with a unique perfect matching."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import linalg
from .graph import (
    SimpleGraph,
    canonical_form,
    canonical_relabel,
    embedding,
    from_graph6,
    is_connected,
    is_isomorphic,
    to_graph6,
)
from .invertibility import (
    VERDICTS,
    Classification,
    InverseGraph,
    classify,
    inverse_graph,
    is_selfinvertible,
    max_unique_pm_subgraphs,
)
from .matching import count_perfect_matchings, has_unique_pm

MAX_N = 8
EXHAUSTIVE_N = 6


class UnsupportedSizeError(ValueError):
    pass


def _labeled_graphs(n: int) -> Iterator[SimpleGraph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        a = [[0] * n for _ in range(n)]
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                a[i][j] = a[j][i] = 1
        yield SimpleGraph(n, a)


def _augment(smaller: list[SimpleGraph], n: int) -> list[SimpleGraph]:
    # every connected graph has a vertex whose deletion leaves it connected
    seen: dict[str, SimpleGraph] = {}
    for g in smaller:
        for k in range(1, n):
            for nbrs in combinations(range(1, n), k):
                h = SimpleGraph.from_edges(n, g.edges() + [(v, n) for v in nbrs])
                seen.setdefault(canonical_form(h), h)
    return [canonical_relabel(seen[key]) for key in sorted(seen)]


def _check_n(n, even=False):
    if not 1 <= n <= MAX_N:
        raise UnsupportedSizeError(f"n must be in 1..{MAX_N}, got {n}")
    if even and n % 2:
        raise UnsupportedSizeError(f"n must be even, got {n}")


def connected_graphs(n: int) -> list[SimpleGraph]:
    """Connected graphs on n vertices, one per isomorphism class, in
    canonical order and canonically labeled.

    n <= 6 scans every edge subset; n = 7, 8 grow the (n-1)-vertex list by
    one vertex at a time, which is complete but slow (experimental at 8).
    """
    _check_n(n)
    if n > EXHAUSTIVE_N:
        return _augment(connected_graphs(n - 1), n)
    seen: dict[str, SimpleGraph] = {}
    for g in _labeled_graphs(n):
        if is_connected(g):
            seen.setdefault(canonical_form(g), g)
    return [canonical_relabel(seen[key]) for key in sorted(seen)]


def unique_pm_graphs(n: int) -> list[SimpleGraph]:
    """Connected graphs with exactly one perfect matching, canonical order."""
    if n % 2:
        _check_n(n)
        return []
    _check_n(n, even=True)
    if n > EXHAUSTIVE_N:
        return [g for g in connected_graphs(n) if has_unique_pm(g) is not None]
    seen: dict[str, SimpleGraph] = {}
    for g in _labeled_graphs(n):
        # uniqueness first: it rejects most subsets before the costlier checks
        if count_perfect_matchings(g, limit=2) == 1 and is_connected(g):
            seen.setdefault(canonical_form(g), g)
    return [canonical_relabel(seen[key]) for key in sorted(seen)]


@dataclass(frozen=True)
class Census:
    """Classification of all connected unique-PM graphs on n vertices.

    Indices are 0-based positions in ``graphs``. ``self_contained`` and
    ``mutual_pairs`` use unlabeled embedding into the inverse skeleton;
    ``maximal_self`` and ``maximal_mutual`` use the stricter reading where
    the graph must be one of the edge-maximal unique-PM subgraphs of the
    inverse.
    """

    n: int
    graphs: list[tuple[SimpleGraph, Classification]]
    inverses: dict[int, InverseGraph]
    counts: dict[str, int]
    isospectral_pairs: list[tuple[int, int]]
    self_contained: list[int]
    mutual_pairs: list[tuple[int, int]]
    selfinvertible: list[int]
    maximal_subgraphs: dict[int, list[SimpleGraph]] = field(default_factory=dict)
    maximal_self: list[int] = field(default_factory=list)
    maximal_mutual: list[tuple[int, int]] = field(default_factory=list)
    char_polys: list[tuple[int, ...]] = field(default_factory=list)

    def indices(self, verdict: str) -> list[int]:
        return [i for i, (_, c) in enumerate(self.graphs) if c.verdict == verdict]

    def to_dict(self) -> dict:
        rows = []
        for i, (g, c) in enumerate(self.graphs):
            row = {"index": i + 1, **c.to_dict(),
                   "char_poly": list(self.char_polys[i]) if self.char_polys else None}
            inv = self.inverses.get(i)
            if inv is not None:
                row["inverse"] = {
                    "weights": [list(r) for r in inv.graph.weights],
                    "signing": list(inv.signing),
                    "sign": inv.sign,
                    "maximal_subgraphs": [to_graph6(h) for h in self.maximal_subgraphs.get(i, [])],
                }
            else:
                row["inverse"] = None
            rows.append(row)

        def one(xs):
            return [i + 1 for i in xs]

        def two(ps):
            return [[i + 1, j + 1] for i, j in ps]

        return {
            "n": self.n,
            "graphs": rows,
            "counts": dict(self.counts),
            "isospectral_pairs": two(self.isospectral_pairs),
            "self_contained": one(self.self_contained),
            "mutual_pairs": two(self.mutual_pairs),
            "selfinvertible": one(self.selfinvertible),
            "maximal_self": one(self.maximal_self),
            "maximal_mutual": two(self.maximal_mutual),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def census(n: int) -> Census:
    if n % 2 or not 2 <= n <= EXHAUSTIVE_N:
        raise UnsupportedSizeError(f"census needs even n in 2..{EXHAUSTIVE_N}, got {n}")
    gs = unique_pm_graphs(n)
    rows = [(g, classify(g)) for g in gs]
    counts = {v: 0 for v in VERDICTS}
    for _, c in rows:
        counts[c.verdict] += 1
    polys = [linalg.char_poly(g.adjacency) for g in gs]
    iso = [(i, j) for i, j in combinations(range(len(gs)), 2)
           if polys[i] == polys[j] and not is_isomorphic(gs[i], gs[j])]
    inverses = {i: inverse_graph(g, c) for i, (g, c) in enumerate(rows) if c.invertible}
    inv_ids = sorted(inverses)
    contains = {(i, j): embedding(gs[i], inverses[j].graph) is not None
                for i in inv_ids for j in inv_ids}
    maxsub = {i: max_unique_pm_subgraphs(inverses[i].graph) for i in inv_ids}
    max_keys = {i: {canonical_form(h) for h in maxsub[i]} for i in inv_ids}
    in_max = {(i, j): canonical_form(gs[i]) in max_keys[j] for i in inv_ids for j in inv_ids}
    return Census(
        n=n,
        graphs=rows,
        inverses=inverses,
        counts=counts,
        isospectral_pairs=iso,
        self_contained=[i for i in inv_ids if contains[i, i]],
        mutual_pairs=[(i, j) for i, j in combinations(inv_ids, 2)
                      if contains[i, j] and contains[j, i]],
        selfinvertible=[i for i in inv_ids if is_selfinvertible(gs[i])],
        maximal_subgraphs=maxsub,
        maximal_self=[i for i in inv_ids if in_max[i, i]],
        maximal_mutual=[(i, j) for i, j in combinations(inv_ids, 2)
                        if in_max[i, j] and in_max[j, i]],
        char_polys=polys,
    )


def census_from_graph6(lines: list[str]) -> list[SimpleGraph]:
    return [from_graph6(s) for s in lines if s.strip()]
