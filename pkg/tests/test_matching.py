from __future__ import annotations


import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete, cycle, path
from invgraphs.enumeration import connected_graphs
from invgraphs.graph import GraphError, SimpleGraph, is_isomorphic
from invgraphs.matching import (
    corona,
    has_unique_pm,
    is_perfect_matching,
    kotzig_bridge,
    perfect_matchings,
)
from test_graph import graphs


def pairing_oracle(g):
    """All perfect matchings by pairing off an arbitrary remaining set."""
    def rec(rest):
        if not rest:
            return [frozenset()]
        v, *others = rest
        out = []
        for u in others:
            if g.adjacency[v - 1][u - 1]:
                left = [w for w in others if w != u]
                out += [m | {(min(u, v), max(u, v))} for m in rec(left)]
        return out

    return set(rec(list(range(1, g.n + 1))))


def test_examples(fulvene):
    assert perfect_matchings(complete(2)) == [frozenset({(1, 2)})]
    assert perfect_matchings(cycle(4)) == [frozenset({(1, 2), (3, 4)}), frozenset({(1, 4), (2, 3)})]
    assert perfect_matchings(fulvene) == [frozenset({(1, 5), (2, 3), (4, 6)})]
    assert pairing_oracle(fulvene) == {frozenset({(1, 5), (2, 3), (4, 6)})}


def test_odd_is_empty():
    assert perfect_matchings(complete(3)) == []
    assert has_unique_pm(complete(3)) is None


def test_deterministic_lexicographic_order():
    ms = perfect_matchings(complete(6))
    keys = [sorted(m) for m in ms]
    assert keys == sorted(keys)


@pytest.mark.parametrize("k,count", [(1, 1), (2, 3), (3, 15)])
def test_complete_graph_double_factorial(k, count):
    assert len(perfect_matchings(complete(2 * k))) == count


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_vs_pairing_oracle(g):
    ms = perfect_matchings(g)
    assert len(ms) == len(set(ms))
    assert set(ms) == pairing_oracle(g)
    assert all(is_perfect_matching(g, m) for m in ms)


def test_has_unique_pm():
    assert has_unique_pm(complete(2)) == frozenset({(1, 2)})
    assert has_unique_pm(cycle(6)) is None


@settings(max_examples=100)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_uniqueness_is_relabel_invariant(g, rng):
    p = list(range(g.n))
    rng.shuffle(p)
    assert (has_unique_pm(g) is None) == (has_unique_pm(g.relabel(p)) is None)


def test_kotzig_examples(fulvene):
    assert kotzig_bridge(complete(2), {(1, 2)}) == (1, 2)
    assert kotzig_bridge(fulvene, has_unique_pm(fulvene)) == (4, 6)
    # C4 has no bridge at all
    assert kotzig_bridge(cycle(4), {(1, 2), (3, 4)}) is None


def test_kotzig_rejects_non_matching():
    with pytest.raises(GraphError):
        kotzig_bridge(cycle(4), {(1, 3)})


def test_kotzig_picks_smallest():
    g = path(4)
    assert kotzig_bridge(g, {(1, 2), (3, 4)}) == (1, 2)


def test_kotzig_property_all_small_connected():
    for n in (2, 4, 6):
        for g in connected_graphs(n):
            m = has_unique_pm(g)
            if m is not None:
                assert kotzig_bridge(g, m) is not None


def test_corona_examples():
    assert corona(SimpleGraph.empty(1)) == complete(2)
    h2 = corona(path(3))
    assert h2.n == 6 and h2.num_edges == 5
    assert sorted(h2.degrees()) == [1, 1, 1, 2, 2, 3]
    h5 = corona(cycle(3))
    assert is_isomorphic(h5, SimpleGraph.from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]))


def test_corona_unique_matching():
    for n in range(1, 5):
        for g in connected_graphs(n):
            assert has_unique_pm(corona(g)) == frozenset((i, n + i) for i in range(1, n + 1))
