import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from listrec import (
    ExplicitCode,
    PunctureMap,
    ReedSolomonCode,
    distance_to_lists,
    hamming_distance,
    make_field,
    min_distance,
    pairwise_min_distance,
    puncture,
    random_puncture,
    rate,
    rs_encode,
    rs_enumerate,
)
from listrec.code import codeword_matrix
from listrec.errors import BadSize, EmptyList, EnumerationTooLarge, InvalidCode, LengthMismatch

from oracles import brute_codewords, rs_codes


def test_encode_examples(f4, f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2))
    assert rs_encode(code, (1, 2)) == (1, 3, 0)
    assert rs_encode(code, (0, 0)) == (0, 0, 0)
    c4 = ReedSolomonCode(f4, 1, (0, 1, 2, 3))
    assert rs_encode(c4, (0, 1)) == (0, 1, 2, 3)


def test_enumerate_counts(f5):
    words = list(rs_enumerate(ReedSolomonCode(f5, 1, (0, 1, 2))))
    assert len(words) == 25
    F2 = make_field(2)
    consts = {w for _, w in rs_enumerate(ReedSolomonCode(F2, 0, (0, 1)))}
    assert consts == {(0, 0), (1, 1)}


def test_enumerate_cap(f5):
    with pytest.raises(EnumerationTooLarge):
        list(rs_enumerate(ReedSolomonCode(f5, 2, (0, 1, 2)), cap=100))


def test_constants_over_f2_n3():
    F = make_field(2)
    with pytest.raises(InvalidCode):
        ReedSolomonCode(F, 0, (0, 1, 1))  # repeated points
    # three coordinates need three distinct points, so go explicit
    code = ExplicitCode(F, ((0, 0, 0), (1, 1, 1)))
    assert min_distance(code) == 3


@settings(max_examples=40, deadline=None)
@given(rs_codes())
def test_enumeration_matches_oracle(code):
    assert list(rs_enumerate(code)) == brute_codewords(code)
    M = codeword_matrix(code)
    assert [tuple(r) for r in M.tolist()] == [w for _, w in brute_codewords(code)]


@settings(max_examples=40, deadline=None)
@given(rs_codes())
def test_codewords_distinct(code):
    words = [w for _, w in rs_enumerate(code)]
    assert len(set(words)) == len(words) == code.size


def test_hamming_distance(f5):
    assert hamming_distance((1, 3, 0), (1, 3, 0)) == 0
    assert hamming_distance((1, 3, 0), (1, 0, 0)) == 1
    with pytest.raises(LengthMismatch):
        hamming_distance((1,), (1, 2))


def test_distance_to_lists(f5):
    assert distance_to_lists((1, 3, 0), [{1}, {1}, {1}]) == 2
    assert distance_to_lists((1, 3, 0), [{1}, {3}, {0, 4}]) == 0
    with pytest.raises(EmptyList):
        distance_to_lists((1, 3, 0), [{1}, set(), {1}])
    with pytest.raises(LengthMismatch):
        distance_to_lists((1, 3, 0), [{1}, {1}])


@given(st.data())
def test_distance_to_lists_matches_product_oracle(data):
    import itertools
    n = data.draw(st.integers(1, 4))
    lists = [data.draw(st.sets(st.integers(0, 6), min_size=1, max_size=3)) for _ in range(n)]
    c = data.draw(st.lists(st.integers(0, 6), min_size=n, max_size=n))
    best = min(hamming_distance(c, y) for y in itertools.product(*lists))
    assert distance_to_lists(c, lists) == best


def test_min_distance_examples(f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2))
    assert min_distance(code) == 2
    assert pairwise_min_distance(code) == 2
    assert min_distance(ReedSolomonCode(f5, 0, tuple(range(5)))) == 5


@settings(max_examples=30, deadline=None)
@given(rs_codes())
def test_min_distance_is_n_minus_d(code):
    if code.size < 2:
        return
    assert min_distance(code) == code.n - code.degree == pairwise_min_distance(code)


def test_puncture_examples(f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2))
    assert puncture(code, PunctureMap((0, 1, 2))) == code
    assert puncture(code, PunctureMap((0, 2))) == ReedSolomonCode(f5, 1, (0, 2))
    F2 = make_field(2)
    ex = puncture(ExplicitCode(F2, ((0, 0), (0, 1))), PunctureMap((0,)))
    assert ex.collided and ex.codewords == ((0,), (0,))
    assert min_distance(ex) == 0


def test_puncture_too_small(f5):
    with pytest.raises(BadSize):
        puncture(ReedSolomonCode(f5, 1, (0, 1, 2)), PunctureMap((1,)))
    with pytest.raises(BadSize):
        PunctureMap((2, 1))


@settings(max_examples=30, deadline=None)
@given(rs_codes(), st.data())
def test_puncture_commutes_with_encoding(code, data):
    m = data.draw(st.integers(code.degree + 1, code.n))
    kept = sorted(data.draw(st.permutations(range(code.n)))[:m])
    pc = puncture(code, PunctureMap(tuple(kept)))
    coeffs = data.draw(st.lists(st.integers(0, code.field.order - 1),
                                min_size=code.degree + 1, max_size=code.degree + 1))
    full = rs_encode(code, coeffs)
    assert rs_encode(pc, coeffs) == tuple(full[i] for i in kept)


def test_puncture_compose(f5):
    outer = PunctureMap((0, 2, 3, 4))
    inner = PunctureMap((1, 3))
    assert outer.compose(inner).kept == (2, 4)


def test_random_puncture_determinism(f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2, 3, 4))
    assert random_puncture(code, 3, 7) == random_puncture(code, 3, 7)
    pmap, same = random_puncture(code, 5, 123)
    assert pmap.kept == (0, 1, 2, 3, 4) and same == code


def test_random_puncture_marginals():
    F = make_field(11)
    code = ReedSolomonCode(F, 1, tuple(range(10)))
    rng = np.random.default_rng(2024)
    counts = np.zeros(10)
    trials = 10**4
    for _ in range(trials):
        pmap, _ = random_puncture(code, 3, rng)
        counts[list(pmap.kept)] += 1
    freq = counts / trials
    assert np.all(np.abs(freq - 0.3) <= 0.02)


def test_random_puncture_bad_size(f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2, 3, 4))
    for m in (0, 6):
        with pytest.raises(BadSize):
            random_puncture(code, m, 0)


def test_rate(f5):
    assert rate(ReedSolomonCode(f5, 1, (0, 1, 2, 3))) == Fraction(1, 2)
    assert rate(ReedSolomonCode(f5, 0, tuple(range(5)))) == Fraction(1, 5)
    F2 = make_field(2)
    full = ExplicitCode(F2, ((0, 0), (0, 1), (1, 0), (1, 1)))
    assert rate(full) == 1
    odd = ExplicitCode(F2, ((0, 0), (0, 1), (1, 0)))
    assert math.isclose(rate(odd), math.log(3, 2) / 2)


def test_explicit_code_validation(f5):
    with pytest.raises(InvalidCode):
        ExplicitCode(f5, ((0, 0), (0, 0)))
    with pytest.raises(InvalidCode):
        ExplicitCode(f5, ((0, 0), (0,)))
    with pytest.raises(InvalidCode):
        ExplicitCode(f5, ())
