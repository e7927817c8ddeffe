"""Positive/negative invertibility of graphs with integral inverse.

A symmetric integer matrix B is signable to a target sign when some
d in {+1,-1}^n makes every entry of diag(d) B diag(d) carry that sign (zeros
allowed). Conjugation by diag(d) leaves the diagonal alone and multiplies
B[i][j] by d_i d_j, so the question is a parity (balance) problem on the
support of the off-diagonal entries.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal, Optional

from . import linalg
from .graph import (
    Multigraph,
    SimpleGraph,
    SizeLimitError,
    canonical_form,
    is_bipartite,
    is_isomorphic,
    to_graph6,
    MAX_CANON_N,
)
from .matching import count_perfect_matchings, perfect_matchings

Target = Literal["nonnegative", "nonpositive"]
Signing = tuple[int, ...]

BIPARTITE_BOTH = "bipartite-both"
POSITIVE_ONLY = "positive-only"
NEGATIVE_ONLY = "negative-only"
INTEGRAL_NEITHER = "integral-neither"
NON_INTEGRAL = "non-integral"
SINGULAR = "singular"
VERDICTS = (BIPARTITE_BOTH, POSITIVE_ONLY, NEGATIVE_ONLY, INTEGRAL_NEITHER, NON_INTEGRAL, SINGULAR)
INVERTIBLE = (BIPARTITE_BOTH, POSITIVE_ONLY, NEGATIVE_ONLY)


class NotInvertibleError(ValueError):
    def __init__(self, verdict: str):
        super().__init__(f"graph is not invertible: {verdict}")
        self.verdict = verdict


class _ParityUnionFind:
    """Union-find that tracks each node's parity relative to its root."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.parity = [0] * n

    def find(self, x):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        # compress, accumulating parity from the top down
        acc = 0
        for y in reversed(path):
            acc ^= self.parity[y]
            self.parity[y] = acc
            self.parent[y] = x
        return x

    def union(self, a, b, odd):
        """Require parity(a) xor parity(b) == odd. False on contradiction."""
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.parity[a] if a != ra else 0, self.parity[b] if b != rb else 0
        if ra == rb:
            return (pa ^ pb) == odd
        if ra > rb:
            ra, rb, pa, pb = rb, ra, pb, pa
        # the smaller index stays root so it ends up with d = +1
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ odd
        return True

    def value(self, x):
        r = self.find(x)
        return 0 if x == r else self.parity[x]


def signability(b, target: Target) -> Optional[Signing]:
    """Signing d with diag(d) b diag(d) entrywise >= 0 (or <= 0), or None.

    In each support component the lowest index gets +1.
    """
    if target not in ("nonnegative", "nonpositive"):
        raise ValueError(f"unknown target {target!r}")
    if not linalg.is_symmetric(b):
        raise ValueError("signability needs a symmetric matrix")
    want = 1 if target == "nonnegative" else -1
    n = len(b)
    if any(b[i][i] * want < 0 for i in range(n)):
        return None
    uf = _ParityUnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if b[i][j] == 0:
                continue
            # need d_i d_j = sign(b_ij) * want; odd parity means d_i != d_j
            odd = int((b[i][j] > 0) != (want > 0))
            if not uf.union(i, j, odd):
                return None
    return tuple(-1 if uf.value(i) else 1 for i in range(n))


@dataclass(frozen=True)
class Classification:
    graph: SimpleGraph
    det: int
    integral: bool
    bipartite: bool
    positive_signing: Optional[Signing]
    negative_signing: Optional[Signing]
    verdict: str

    @property
    def invertible(self) -> bool:
        return self.verdict in INVERTIBLE

    def to_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "det": self.det,
            "integral": self.integral,
            "bipartite": self.bipartite,
            "positive_signing": list(self.positive_signing) if self.positive_signing else None,
            "negative_signing": list(self.negative_signing) if self.negative_signing else None,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def classify(g: SimpleGraph) -> Classification:
    det = linalg.determinant(g.adjacency)
    bip = is_bipartite(g)
    pos = neg = None
    integral = abs(det) == 1
    if det == 0:
        verdict = SINGULAR
    elif not integral:
        verdict = NON_INTEGRAL
    else:
        inv = linalg.is_integral(linalg.inverse_exact(g.adjacency))
        pos = signability(inv, "nonnegative")
        neg = signability(inv, "nonpositive")
        if pos and neg:
            verdict = BIPARTITE_BOTH
        elif pos:
            verdict = POSITIVE_ONLY
        elif neg:
            verdict = NEGATIVE_ONLY
        else:
            verdict = INTEGRAL_NEITHER
    return Classification(g, det, integral, bip, pos, neg, verdict)


@dataclass(frozen=True)
class InverseGraph:
    graph: Multigraph
    signing: Signing
    sign: int


def inverse_graph(g: SimpleGraph, c: Classification | None = None) -> InverseGraph:
    """A_H = s * D A^-1 D, s=+1 when positively signable (preferred), else -1."""
    c = c or classify(g)
    if not c.invertible:
        raise NotInvertibleError(c.verdict)
    inv = linalg.is_integral(linalg.inverse_exact(g.adjacency))
    if c.positive_signing:
        d, s = c.positive_signing, 1
    else:
        d, s = c.negative_signing, -1
    return InverseGraph(Multigraph(g.n, linalg.signed_similarity(d, inv, s)), d, s)


def involution_check(g: SimpleGraph) -> bool:
    """A == s * D A_H^-1 D."""
    h = inverse_graph(g)
    back = linalg.is_integral(linalg.inverse_exact(h.graph.weights))
    if back is None:
        return False
    return linalg.signed_similarity(h.signing, back, h.sign) == g.adjacency


def is_selfinvertible(g: SimpleGraph) -> bool:
    h = inverse_graph(g).graph
    return h.is_simple() and is_isomorphic(g.to_multigraph(), h)


def max_unique_pm_subgraphs(h: Multigraph | SimpleGraph) -> list[SimpleGraph]:
    """Edge-maximal spanning subgraphs of the skeleton having a unique
    perfect matching, one per isomorphism class, sorted by canonical form.

    For each perfect matching M of the skeleton, the sets X of extra edges
    with M + X still uniquely matchable are closed under removal, so the
    maximal ones come out of include/exclude backtracking; a leaf is kept
    only if no skipped edge can be added back.
    """
    if h.n > MAX_CANON_N:
        raise SizeLimitError(f"n <= {MAX_CANON_N} required, got {h.n}")
    sk = h.skeleton() if isinstance(h, Multigraph) else h
    n = sk.n
    found: dict[str, SimpleGraph] = {}
    for m in perfect_matchings(sk):
        extra = [e for e in sk.edges() if e not in m]
        base = sorted(m)

        def unique(edges):
            return count_perfect_matchings(SimpleGraph.from_edges(n, base + edges), limit=2) == 1

        chosen: list = []

        def rec(k):
            if k == len(extra):
                skipped = [e for e in extra if e not in chosen]
                if not any(unique(chosen + [e]) for e in skipped):
                    g = SimpleGraph.from_edges(n, base + chosen)
                    found.setdefault(canonical_form(g), g)
                return
            if unique(chosen + [extra[k]]):
                chosen.append(extra[k])
                rec(k + 1)
                chosen.pop()
            rec(k + 1)

        rec(0)
    return [found[k] for k in sorted(found)]
