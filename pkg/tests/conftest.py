from __future__ import annotations

import pytest

from invgraphs.enumeration import census
from invgraphs.graph import SimpleGraph

# adjacency matrix and integral inverse as printed for the fulvene graph
FULVENE_A = (
    (0, 1, 0, 0, 1, 0),
    (1, 0, 1, 0, 0, 0),
    (0, 1, 0, 1, 0, 0),
    (0, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 0),
)
FULVENE_INV = (
    (0, 0, 0, 0, 1, -1),
    (0, 0, 1, 0, 0, -1),
    (0, 1, 0, 0, -1, 1),
    (0, 0, 0, 0, 0, 1),
    (1, 0, -1, 0, 0, 1),
    (-1, -1, 1, 1, 1, -2),
)
FULVENE_D = (1, 1, -1, -1, -1, 1)


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n):
    return SimpleGraph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


@pytest.fixture
def fulvene():
    return SimpleGraph(6, FULVENE_A)


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture(scope="session")
def censuses():
    return {n: census(n) for n in (2, 4, 6)}


@pytest.fixture(scope="session")
def census6(censuses):
    return censuses[6]
