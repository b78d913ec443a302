"""Johnson-type bounds and the hypotheses of the random-puncturing theorem."""

# %%
from fractions import Fraction

from listrec import check_main_theorem, check_simple_theorem, johnson_recovery, theorem_params

# lists of size 5, distance 1 - 1/10 of the length, no errors
print("Johnson output bound:", johnson_recovery(Fraction(1, 10), 0, 5))

# %%
# gamma and sigma drive everything; gamma must stay positive.
p = theorem_params(1, Fraction(1, 10))
print("gamma =", p.gamma, "sigma =", p.sigma)

# %%
# A concrete instance: the table shows which hypotheses are met.
q = n = 10**6
d = 10**3
print(check_main_theorem(q, n, d, 4, n // 2, 1, 0, q ** (d + 1)).table())

# %%
print(check_simple_theorem(10**4, 10**8, 1, 0, Fraction(1, 50), code_size=10**12).table())
