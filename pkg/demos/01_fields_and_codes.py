"""Finite fields and Reed-Solomon codes, from the ground up."""

# %%
# An element of F_{p^e} is stored as the integer sum c_j p^j of its
# coefficients in the polynomial basis.
from listrec import ReedSolomonCode, make_field, min_distance, pairwise_min_distance, rs_encode

F4 = make_field(2, 2)
print(F4, "elements:", [F4.element_str(a) for a in F4.elements()])
for a in F4.elements():
    print(" ".join(str(F4.mul(a, b)) for b in F4.elements()))

# %%
# The default modulus is the least irreducible one, so every run and every
# machine agrees on the same field.
F8 = make_field(2, 3)
terms = ["1" if j == 0 else f"x^{j}" for j, c in enumerate(F8.modulus) if c]
print(F8.modulus, "i.e.", " + ".join(terms))

# %%
# Reed-Solomon: evaluate a degree <= d polynomial on n distinct points.
F5 = make_field(5)
code = ReedSolomonCode(F5, 1, (0, 1, 2))
print("1 + 2x ->", rs_encode(code, (1, 2)))
print("distance n - d =", min_distance(code), "measured:", pairwise_min_distance(code))
