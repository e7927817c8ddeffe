from __future__ import annotations

import json
from itertools import combinations

import networkx as nx
import pytest

from invgraphs.enumeration import (
    UnsupportedSizeError,
    census,
    connected_graphs,
    unique_pm_graphs,
)
from invgraphs.graph import canonical_form, is_connected, is_isomorphic, to_graph6
from invgraphs.matching import has_unique_pm, kotzig_bridge


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_connected_counts(n, count):
    gs = connected_graphs(n)
    assert len(gs) == count
    assert all(is_connected(g) for g in gs)


def test_connected_counts_vs_networkx_atlas():
    # the graph atlas lists every graph on up to 7 vertices
    for n in range(1, 7):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]
        assert len(connected_graphs(n)) == len(atlas)


def test_connected_seven_by_augmentation():
    assert len(connected_graphs(7)) == 853


def test_unsupported():
    with pytest.raises(UnsupportedSizeError):
        connected_graphs(9)
    with pytest.raises(UnsupportedSizeError):
        census(8)
    with pytest.raises(UnsupportedSizeError):
        census(3)


def test_unique_pm_counts():
    assert [len(unique_pm_graphs(n)) for n in (2, 4, 6)] == [1, 2, 20]
    assert unique_pm_graphs(3) == [] and unique_pm_graphs(5) == []


def test_unique_pm_matches_filtered_connected():
    for n in (2, 4, 6):
        expected = sorted(canonical_form(g) for g in connected_graphs(n) if has_unique_pm(g))
        assert [canonical_form(g) for g in unique_pm_graphs(n)] == expected


def test_unique_pm_graph_properties():
    for n in (2, 4, 6):
        gs = unique_pm_graphs(n)
        for g in gs:
            m = has_unique_pm(g)
            assert m is not None and is_connected(g)
            assert kotzig_bridge(g, m) is not None
        assert not any(is_isomorphic(a, b) for a, b in combinations(gs, 2))


def test_deterministic(census6):
    assert [to_graph6(g) for g in unique_pm_graphs(6)] == [to_graph6(g) for g, _ in census6.graphs]
    assert census(6).to_json() == census6.to_json()


class TestCensus:
    def test_counts(self, censuses):
        assert censuses[2].counts["bipartite-both"] == 1
        assert censuses[4].counts["bipartite-both"] == 1
        assert censuses[4].counts["positive-only"] == 1
        c = censuses[6].counts
        assert (c["bipartite-both"], c["positive-only"], c["negative-only"],
                c["integral-neither"], c["non-integral"], c["singular"]) == (3, 12, 3, 1, 1, 0)
        for cen in censuses.values():
            assert sum(cen.counts.values()) == len(cen.graphs)

    def test_q1_selfinvertible_q2_not(self, censuses):
        c4 = censuses[4]
        (q1,) = c4.indices("bipartite-both")
        (q2,) = c4.indices("positive-only")
        assert q1 in c4.selfinvertible and q2 not in c4.selfinvertible

    def test_isospectral(self, census6):
        assert len(census6.isospectral_pairs) == 1
        (i, j), = census6.isospectral_pairs
        assert {census6.graphs[i][1].verdict, census6.graphs[j][1].verdict} == {"positive-only"}

    def test_single_outlier_det(self, census6):
        outliers = [c.det for _, c in census6.graphs if abs(c.det) != 1]
        assert [abs(d) for d in outliers] == [3]

    def test_selfinvertible_non_bipartite(self, census6):
        nb = [i for i in census6.selfinvertible if not census6.graphs[i][1].bipartite]
        assert len(nb) == 2
        assert all(census6.graphs[i][1].verdict == "negative-only" for i in nb)

    def test_json_shape(self, census6):
        d = json.loads(census6.to_json())
        assert d["n"] == 6 and len(d["graphs"]) == 20
        assert d["graphs"][0]["index"] == 1
        non_inv = [r for r in d["graphs"] if r["inverse"] is None]
        assert len(non_inv) == 2
