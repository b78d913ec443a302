"""Shared oracles and strategies.

The oracles here are deliberately naive and share no code with the
library beyond the data classes: digit-vector polynomial arithmetic for
fields, and full enumeration for codes.
"""

import itertools

from hypothesis import strategies as st

from listrec import ReedSolomonCode, make_field

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (13, 1)]


def naive_mul(p, modulus, a, b):
    """Schoolbook product of digit vectors, reduced by the modulus."""
    e = len(modulus) - 1
    da = [(a // p**j) % p for j in range(e)]
    db = [(b // p**j) % p for j in range(e)]
    prod = [0] * (2 * e)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * e - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * modulus[j]) % p
    return sum(prod[j] * p**j for j in range(e))


def naive_add(p, e, a, b):
    return sum((((a // p**j) + (b // p**j)) % p) * p**j for j in range(e))


def brute_codewords(code):
    """(coeffs, word) for every polynomial, by direct evaluation."""
    F = code.field
    p, e, mod = F.characteristic, F.extension_degree, F.modulus
    out = []
    for coeffs in itertools.product(range(F.order), repeat=code.degree + 1):
        word = []
        for x in code.eval_points:
            acc, xp = 0, 1
            for c in coeffs:
                acc = naive_add(p, e, acc, naive_mul(p, mod, c, xp))
                xp = naive_mul(p, mod, xp, x)
            word.append(acc)
        out.append((coeffs, tuple(word)))
    return out


def brute_recover(code, lists, rho):
    """Filter over full enumeration: the recovery oracle."""
    from fractions import Fraction
    budget = (Fraction(rho) * code.n).__floor__()
    return {
        w for _, w in brute_codewords(code)
        if sum(s not in A for s, A in zip(w, lists)) <= budget
    }


@st.composite
def rs_codes(draw, fields=((5, 1), (7, 1), (2, 2), (2, 3), (3, 2)), max_degree=2):
    p, e = draw(st.sampled_from(fields))
    F = make_field(p, e)
    n = draw(st.integers(min_value=2, max_value=F.order))
    pts = draw(st.permutations(list(F.elements())))[:n]
    d = draw(st.integers(min_value=0, max_value=min(max_degree, n - 1)))
    return ReedSolomonCode(F, d, tuple(pts))
