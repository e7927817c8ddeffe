"""Perfect matchings, uniqueness, Kotzig bridges and the pendant (corona)
construction."""
from __future__ import annotations

from typing import Iterator

from .graph import Edge, GraphError, SimpleGraph, bridges

Matching = frozenset  # frozenset of 1-based (u, v) pairs with u < v


def _iter_matchings(g: SimpleGraph) -> Iterator[list[Edge]]:
    # branch on the lowest uncovered vertex; yields in lexicographic order
    if g.n % 2:
        return
    covered = [False] * g.n
    chosen: list[Edge] = []

    def rec(start):
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            yield list(chosen)
            return
        covered[v] = True
        for u in g.neighbors(v):
            if not covered[u]:
                covered[u] = True
                chosen.append((v + 1, u + 1))
                yield from rec(v + 1)
                chosen.pop()
                covered[u] = False
        covered[v] = False

    yield from rec(0)


def perfect_matchings(g: SimpleGraph) -> list[Matching]:
    return [frozenset(m) for m in _iter_matchings(g)]


def count_perfect_matchings(g: SimpleGraph, limit: int | None = None) -> int:
    k = 0
    for _ in _iter_matchings(g):
        k += 1
        if limit is not None and k >= limit:
            break
    return k


def has_unique_pm(g: SimpleGraph) -> Matching | None:
    """The matching if g has exactly one perfect matching, else None."""
    found = []
    for m in _iter_matchings(g):
        found.append(m)
        if len(found) > 1:
            return None
    return frozenset(found[0]) if found else None


def is_perfect_matching(g: SimpleGraph, m) -> bool:
    seen = set()
    for u, v in m:
        if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.adjacency[u - 1][v - 1]:
            return False
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return len(seen) == g.n


def kotzig_bridge(g: SimpleGraph, m) -> Edge | None:
    """Smallest edge of ``m`` that is a bridge of ``g``."""
    if not is_perfect_matching(g, m):
        raise GraphError(f"{sorted(m)} is not a perfect matching of {g}")
    matched = {(min(e), max(e)) for e in m}
    hits = sorted(matched & bridges(g))
    return hits[0] if hits else None


def corona(g: SimpleGraph) -> SimpleGraph:
    """Attach a pendant vertex n+i to every vertex i."""
    n = g.n
    if n < 1:
        raise GraphError("corona needs at least one vertex")
    return SimpleGraph.from_edges(2 * n, g.edges() + [(i, n + i) for i in range(1, n + 1)])
