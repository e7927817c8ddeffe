# %% [markdown]
# # Inverse graphs, containment and self-inverses
#
# For each invertible census graph we look at the edge-maximal subgraphs of
# its inverse (loops dropped, parallel edges merged) that still have a
# unique perfect matching, and match them back against the census.

# %%
from invgraphs.enumeration import census
from invgraphs.graph import canonical_form

c = census(6)
index = {canonical_form(g): i + 1 for i, (g, _) in enumerate(c.graphs)}
for i, inv in sorted(c.inverses.items()):
    g, cl = c.graphs[i]
    subs = [index.get(canonical_form(h), "-") for h in c.maximal_subgraphs[i]]
    extras = []
    if inv.graph.loops():
        extras.append(f"loops {inv.graph.loops()}")
    if inv.graph.multi_edges():
        extras.append(f"multi {inv.graph.multi_edges()}")
    print(f"{i + 1:>2} {cl.verdict:<15} maximal subgraphs of inverse: {subs} {' '.join(extras)}")

# %%
print("selfinvertible:", [i + 1 for i in c.selfinvertible])
print("graph is a maximal subgraph of its own inverse:", [i + 1 for i in c.maximal_self])
print("mutual pairs:", [(i + 1, j + 1) for i, j in c.maximal_mutual])

# %% [markdown]
# Plain embedding (any spanning subgraph of the inverse skeleton, maximal
# or not) is a much weaker relation:

# %%
print("embeds in own inverse:", [i + 1 for i in c.self_contained])
print("mutually embedded pairs:", len(c.mutual_pairs))
