"""Subfield lists: many low-degree polynomials take only prime-field values."""

# %%
from listrec import gr06_build, gr06_report, is_zero_error_recoverable

for p, e in [(3, 1), (5, 1), (2, 2), (3, 2)]:
    rep = gr06_report(gr06_build(p, e))
    print(f"p={p} e={e}: brute force {rep['count_enumerate']}, by Frobenius orbits {rep['count_function']},"
          f" q^(2^e)={rep['q_pow_2_pow_e']}, p^(2^e)={rep['p_pow_2_pow_e']}")

# %%
# Over F_4 the lists {0, 1} capture 16 codewords of the degree-3 code,
# so it is not (2, 15) zero-error list recoverable.
inst = gr06_build(2, 2)
res = is_zero_error_recoverable(inst.code, 2, 15)
print("recoverable:", res.recoverable, "captured:", len(res.captured))
