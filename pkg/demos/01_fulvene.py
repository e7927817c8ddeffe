# %% [markdown]
# # The fulvene graph and its inverse
#
# Fulvene is a 5-cycle 1-2-3-4-5 with a pendant vertex 6 hanging off 4.
# Its adjacency matrix has determinant -1, so the inverse is an integer
# matrix. That inverse cannot be signed to a nonnegative matrix, but it can
# be signed to a nonpositive one.

# %%
from invgraphs import linalg
from invgraphs.graph import SimpleGraph, to_dot, to_graph6
from invgraphs.invertibility import classify, inverse_graph, involution_check, signability

fulvene = SimpleGraph.from_edges(6, [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5), (4, 6)])
print("graph6:", to_graph6(fulvene))
print("det(A) =", linalg.determinant(fulvene.adjacency))

# %%
inv = linalg.is_integral(linalg.inverse_exact(fulvene.adjacency))
for row in inv:
    print(" ".join(f"{x:>3}" for x in row))

# %% [markdown]
# Diagonal entry (6,6) is -2. Signing never changes the diagonal, so no
# nonnegative signing exists.

# %%
print("nonnegative:", signability(inv, "nonnegative"))
print("nonpositive:", signability(inv, "nonpositive"))
print("verdict:", classify(fulvene).verdict)

# %% [markdown]
# The inverse graph is -D A^-1 D: eight simple edges plus a double loop at 6.

# %%
h = inverse_graph(fulvene)
print("sign", h.sign, "signing", h.signing)
print("loops", h.graph.loops(), "edges", h.graph.skeleton().edges())
print(to_dot(h.graph, "fulvene_inverse"))
print("inverting again recovers A:", involution_check(fulvene))
