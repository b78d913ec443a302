"""Exact list recovery of Reed-Solomon codes, checked against brute force."""

# %%
from fractions import Fraction

import numpy as np

from listrec import ListFamily, ReedSolomonCode, make_field, recover_rs, rs_encode, rs_enumerate

F = make_field(11)
code = ReedSolomonCode(F, 2, tuple(range(9)))
rng = np.random.default_rng(3)
lists = ListFamily.random(F, code.n, 3, rng)

# plant 4 + 3x + x^2 in every list but the last, where it is a miss
planted = rs_encode(code, (4, 3, 1))
rows = [A | {s} for A, s in zip(lists, planted)]
rows[-1] = frozenset({(planted[-1] + 1) % 11, (planted[-1] + 2) % 11})
lists = ListFamily(tuple(rows))
print("planted:", planted)
print("lists:", lists.as_sorted())

# %%
# rho = 1/9 allows one coordinate outside its list. The solver only
# interpolates through (d+1)-subsets of list entries.
res = recover_rs(code, lists, Fraction(1, 9))
print(res.count, "codewords, via", res.interpolations, "interpolations over", res.subsets, "subsets")
for coeffs, word in zip(res.coefficients, res.found):
    print(coeffs, word)

# %%
# Same answer from scanning all q^(d+1) codewords.
brute = {w for _, w in rs_enumerate(code) if sum(s not in A for s, A in zip(w, lists)) <= 1}
print("matches brute force:", brute == set(res.found))
