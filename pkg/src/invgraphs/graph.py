"""Labeled simple graphs, integer multigraphs, and the structural tools used
on them: graph6/DOT/JSON serialization, connectivity, bipartiteness,
bridges, canonical forms, isomorphism and unlabeled embedding.

Vertices are 0-based internally; every edge tuple that crosses the public
API (``from_edges``, ``edges``, ``bridges``) is 1-based.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

MAX_CANON_N = 8
MAX_GRAPH6_N = 62


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class SizeLimitError(GraphError):
    """Graph too large for an exhaustive (permutation-based) routine."""


Edge = tuple[int, int]


def _freeze(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = _freeze(self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if self.n < 0 or len(adj) != self.n or any(len(r) != self.n for r in adj):
            raise GraphError(f"adjacency must be {self.n}x{self.n}")
        for i in range(self.n):
            if adj[i][i] != 0:
                raise GraphError(f"loop at vertex {i + 1} in a simple graph")
            for j in range(i + 1, self.n):
                if adj[i][j] not in (0, 1) or adj[i][j] != adj[j][i]:
                    raise GraphError("adjacency must be symmetric 0/1")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        """Build from 1-based vertex pairs."""
        a = [[0] * n for _ in range(n)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise GraphError(f"bad edge ({u}, {v}) for n={n}")
            a[u - 1][v - 1] = a[v - 1][u - 1] = 1
        return cls(n, a)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, [[0] * n for _ in range(n)])

    def edges(self) -> list[Edge]:
        return [(i + 1, j + 1) for i in range(self.n) for j in range(i + 1, self.n)
                if self.adjacency[i][j]]

    def neighbors(self, v: int) -> list[int]:
        """0-based neighbor indices of 0-based vertex ``v``."""
        return [u for u, x in enumerate(self.adjacency[v]) if x]

    def degrees(self) -> list[int]:
        return [sum(row) for row in self.adjacency]

    @property
    def num_edges(self) -> int:
        return sum(map(sum, self.adjacency)) // 2

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Vertex ``i`` (0-based) becomes ``perm[i]``."""
        return SimpleGraph(self.n, _permute(self.adjacency, perm))

    def without_edge(self, u: int, v: int) -> "SimpleGraph":
        a = [list(r) for r in self.adjacency]
        a[u - 1][v - 1] = a[v - 1][u - 1] = 0
        return SimpleGraph(self.n, a)

    def to_multigraph(self) -> "Multigraph":
        return Multigraph(self.n, self.adjacency)

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Multigraph:
    """Symmetric nonnegative integer matrix; ``weights[i][i]`` is the loop
    multiplicity at ``i`` stored as-is (no halving)."""

    n: int
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        w = _freeze(self.weights)
        object.__setattr__(self, "weights", w)
        if len(w) != self.n or any(len(r) != self.n for r in w):
            raise GraphError(f"weights must be {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(self.n):
                if w[i][j] < 0 or w[i][j] != w[j][i]:
                    raise GraphError("weights must be symmetric and nonnegative")

    def skeleton(self) -> SimpleGraph:
        """Drop loops and flatten multiplicities to 1."""
        return SimpleGraph(self.n, [[1 if i != j and self.weights[i][j] else 0
                                     for j in range(self.n)] for i in range(self.n)])

    def loops(self) -> dict[int, int]:
        return {i + 1: self.weights[i][i] for i in range(self.n) if self.weights[i][i]}

    def multi_edges(self) -> dict[Edge, int]:
        return {(i + 1, j + 1): self.weights[i][j]
                for i in range(self.n) for j in range(i + 1, self.n)
                if self.weights[i][j] > 1}

    def is_simple(self) -> bool:
        return not self.loops() and not self.multi_edges()

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        return Multigraph(self.n, _permute(self.weights, perm))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.weights])

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        rows = json.loads(text)
        return cls(len(rows), rows)


AnyGraph = Union[SimpleGraph, Multigraph]


def _matrix(g: AnyGraph) -> tuple[tuple[int, ...], ...]:
    return g.adjacency if isinstance(g, SimpleGraph) else g.weights


def _permute(m, perm):
    n = len(m)
    if sorted(perm) != list(range(n)):
        raise GraphError(f"not a permutation of 0..{n - 1}: {perm}")
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = m[i][j]
    return out


# --- graph6 ------------------------------------------------------------------

def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if s[0] == "~":
        # long forms: n >= 63
        if len(s) >= 4 and s[1] == "~":
            if len(s) < 8:
                raise Graph6Error("truncated 36-bit vertex count")
            n = 0
            for c in s[2:8]:
                n = (n << 6) | (ord(c) - 63)
            body = s[8:]
        else:
            if len(s) < 4:
                raise Graph6Error("truncated 18-bit vertex count")
            n = 0
            for c in s[1:4]:
                n = (n << 6) | (ord(c) - 63)
            body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        x = ord(c) - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    a = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                a[i][j] = a[j][i] = 1
            k += 1
    return SimpleGraph(n, a)


def to_graph6(g: SimpleGraph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise SizeLimitError(f"short-form graph6 supports n <= {MAX_GRAPH6_N}, got {g.n}")
    bits = [g.adjacency[i][j] for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


# --- DOT ---------------------------------------------------------------------

def to_dot(g: AnyGraph, name: str = "G") -> str:
    m = _matrix(g)
    lines = [f"graph {name} {{"]
    lines += [f"  {i + 1};" for i in range(g.n)]
    for i in range(g.n):
        for j in range(i, g.n):
            lines += [f"  {i + 1} -- {j + 1};"] * m[i][j]
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- structural predicates ---------------------------------------------------

def _components(n, adj) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in range(n):
                if adj[v][u] and u != v and not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted lists of 0-based vertices."""
    return _components(g.n, g.adjacency)


def is_connected(g: SimpleGraph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


def two_coloring(g: SimpleGraph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: SimpleGraph) -> bool:
    return two_coloring(g) is not None


def bridges(g: SimpleGraph) -> set[Edge]:
    """Bridges via DFS low-links (iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[Edge] = set()
    t = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for u in it:
                if u == parent:
                    continue
                if disc[u] < 0:
                    disc[u] = low[u] = t
                    t += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    break
                low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add((min(v, parent) + 1, max(v, parent) + 1))
    return out


# --- canonical form / isomorphism / embedding --------------------------------

def _check_size(n):
    if n > MAX_CANON_N:
        raise SizeLimitError(f"exhaustive routines support n <= {MAX_CANON_N}, got {n}")


def canonical_order(g: SimpleGraph) -> tuple[int, ...]:
    """A vertex order whose relabeling gives the lexicographically smallest
    upper-triangle bit string (graph6 column order).

    Columns of the bit string are fixed position by position, so the search
    only ever extends the partial orders that tie on the smallest prefix.
    """
    _check_size(g.n)
    adj = g.adjacency
    if g.n == 0:
        return ()
    frontier = [(v,) for v in range(g.n)]
    for _ in range(1, g.n):
        best, nxt = None, []
        for order in frontier:
            used = set(order)
            for v in range(g.n):
                if v in used:
                    continue
                col = 0
                for u in order:
                    col = (col << 1) | adj[u][v]
                if best is None or col < best:
                    best, nxt = col, [order + (v,)]
                elif col == best:
                    nxt.append(order + (v,))
        frontier = nxt
    return frontier[0]


def canonical_relabel(g: SimpleGraph) -> SimpleGraph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: SimpleGraph) -> str:
    """graph6 text of the canonical relabeling; equal iff isomorphic.

    graph6 packs exactly the column-order upper-triangle bits, so comparing
    these strings for fixed n compares the minimized bit strings.
    """
    return to_graph6(canonical_relabel(g))


def _vertex_profile(m, v):
    return (m[v][v], tuple(sorted(m[v][u] for u in range(len(m)) if u != v)))


def _search(n, src, dst, ok_pair, ok_vertex):
    """Backtracking for a map pi with ok_vertex(i, pi[i]) and
    ok_pair(i, j, pi[i], pi[j]) for all assigned i < j. Returns pi or None."""
    pi = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for t in range(n):
            if used[t] or not ok_vertex(i, t):
                continue
            if all(ok_pair(j, i, pi[j], t) for j in range(i)):
                pi[i], used[t] = t, True
                if extend(i + 1):
                    return True
                used[t] = False
        pi[i] = -1
        return False

    return list(pi) if extend(0) else None


def isomorphism(g: AnyGraph, h: AnyGraph) -> list[int] | None:
    """Return a 0-based map pi with h[pi(i)][pi(j)] == g[i][j], or None."""
    if type(g) is not type(h):
        raise GraphError("is_isomorphic needs two graphs of the same kind")
    _check_size(max(g.n, h.n))
    if g.n != h.n:
        return None
    a, b = _matrix(g), _matrix(h)
    pa = [_vertex_profile(a, v) for v in range(g.n)]
    pb = [_vertex_profile(b, v) for v in range(h.n)]
    if sorted(pa) != sorted(pb):
        return None
    return _search(g.n, a, b,
                   lambda i, j, s, t: a[i][j] == b[s][t],
                   lambda i, s: pa[i] == pb[s])


def is_isomorphic(g: AnyGraph, h: AnyGraph) -> bool:
    return isomorphism(g, h) is not None


def embedding(g: SimpleGraph, h: AnyGraph) -> list[int] | None:
    """0-based map pi sending every edge of g onto an edge of h (loops in h
    ignored), or None."""
    if g.n != h.n:
        raise GraphError(f"embeds needs equal vertex counts, got {g.n} and {h.n}")
    _check_size(g.n)
    a = g.adjacency
    b = _matrix(h.skeleton() if isinstance(h, Multigraph) else h)
    if g.num_edges > sum(map(sum, b)) // 2:
        return None
    dg = g.degrees()
    dh = [sum(r) for r in b]
    return _search(g.n, a, b,
                   lambda i, j, s, t: not a[i][j] or b[s][t] >= 1,
                   lambda i, s: dg[i] <= dh[s])


def embeds(g: SimpleGraph, h: AnyGraph) -> bool:
    return embedding(g, h) is not None
