# %% [markdown]
# # Pendant (corona) graphs are self-inverse
#
# Attaching a new leaf to every vertex of a connected graph gives a graph
# whose unique perfect matching is the set of pendant edges, and whose
# inverse graph is isomorphic to itself.

# %%
from invgraphs.enumeration import connected_graphs
from invgraphs.graph import to_graph6
from invgraphs.invertibility import classify, is_selfinvertible
from invgraphs.matching import corona, has_unique_pm

for n in range(1, 5):
    for g in connected_graphs(n):
        h = corona(g)
        print(f"{to_graph6(g):<4} -> {to_graph6(h):<6} matching={sorted(has_unique_pm(h))} "
              f"{classify(h).verdict:<15} selfinvertible={is_selfinvertible(h)}")
