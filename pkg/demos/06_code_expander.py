"""The bipartite graph of a code and its link to zero-error recovery."""

# %%
from listrec import ReedSolomonCode, code_graph, expansion_exhaustive, expansion_sampled, make_field, zero_error_bridge

F5 = make_field(5)
code = ReedSolomonCode(F5, 1, (0, 1, 2))
g = code_graph(code)
for k in (1, 2, 3):
    rep = expansion_exhaustive(g, k)
    print(f"k={k}: min |N(S)|={rep.min_neighborhood} of {k * g.n}, epsilon={rep.achieved_epsilon}")

# %%
print("sampled k=3:", expansion_sampled(g, 3, 500, seed=1).min_neighborhood)

# %%
# A k-set with at most ell values per coordinate is exactly a family of
# ell-lists capturing k codewords.
bridge = zero_error_bridge(code, 3, 2)
print("bridge consistent:", bridge.ok, "| (2, 2) recoverable:", bridge.recoverability.recoverable)
