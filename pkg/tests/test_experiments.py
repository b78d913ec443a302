import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from listrec import (
    ExperimentConfig,
    ExplicitCode,
    ListFamily,
    ReedSolomonCode,
    agreement_set,
    gr06_build,
    hypergeometric_empirical,
    hypergeometric_tail,
    make_field,
    recover_rs,
    run_experiment,
    witness_bound_check,
)
from listrec.code import codeword_matrix
from listrec.errors import AlphaOutOfRange, BadParameter
from listrec.experiments import hypergeometric_samples, trial_rng

from oracles import brute_codewords


# ---------- witness statistic ----------

def test_agreement_set_examples():
    assert agreement_set([(0, 1, 2)]).agreement_coords == frozenset()
    assert agreement_set([(0, 1), (0, 2)]).agreement_coords == {0}


def test_agreement_rs_pairs(f5):
    code = ReedSolomonCode(f5, 2, (0, 1, 2, 3, 4))
    words = [w for _, w in brute_codewords(code)]
    rng = np.random.default_rng(0)
    for _ in range(200):
        i, j = rng.choice(len(words), 2, replace=False)
        assert len(agreement_set([words[i], words[j]]).agreement_coords) <= code.degree


def test_witness_bound_singleton(f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2))
    b = witness_bound_check(code, agreement_set([(1, 3, 0)]))
    assert b.lhs == 0 and b.passed


def test_witness_bound_three_codewords(f5):
    code = ReedSolomonCode(f5, 1, (0, 1, 2))
    words = [w for _, w in brute_codewords(code)]
    rng = np.random.default_rng(5)
    for _ in range(50):
        pick = [words[i] for i in rng.choice(len(words), 3, replace=False)]
        b = witness_bound_check(code, agreement_set(pick))
        assert b.lhs <= 3 * 1 and b.passed and b.distance_verified


def test_witness_bound_equality_regime(f5):
    # lines through a shared point (0, 0): each pair agrees exactly at x = 0
    code = ReedSolomonCode(f5, 1, (0, 1, 2))
    members = [(0, a, 2 * a % 5) for a in (1, 2, 3)]
    b = witness_bound_check(code, agreement_set(members))
    assert b.lhs == 1
    # engineered pairs sharing distinct points fill T
    members = [(0, 1, 2), (0, 2, 4), (1, 1, 1), (2, 2, 2)]
    b = witness_bound_check(code, agreement_set(members))
    assert b.lhs == 3 and b.passed


def test_witness_bound_explicit_needs_d(f5):
    code = ExplicitCode(f5, ((0, 0), (1, 1)))
    with pytest.raises(BadParameter):
        witness_bound_check(code, agreement_set(code.codewords))
    assert witness_bound_check(code, agreement_set(code.codewords), d=0).passed


# ---------- hypergeometric tail ----------

def test_tail_formula():
    assert hypergeometric_tail(8, 1) == pytest.approx(math.exp(-2))
    assert hypergeometric_tail(8, 1) == pytest.approx(0.1353, abs=1e-4)
    with pytest.raises(AlphaOutOfRange):
        hypergeometric_tail(8, 0.999)
    assert hypergeometric_tail(10, 1) < hypergeometric_tail(5, 1)


def test_degenerate_samples():
    assert hypergeometric_empirical(50, 0, 10, 1, 1000, 0) == 0
    X = hypergeometric_samples(50, 7, 50, 100, 0)
    assert (X == 7).all()


def test_samples_match_exact_pmf():
    n, K, m = 30, 10, 6
    X = hypergeometric_samples(n, K, m, 200_000, 42)
    for k in range(m + 1):
        exact = math.comb(K, k) * math.comb(n - K, m - k) / math.comb(n, m)
        se = math.sqrt(exact * (1 - exact) / len(X))
        assert abs((X == k).mean() - exact) <= 5 * se + 1e-9


def test_tail_example():
    # n=100, K=20, m=10: mu = 2, threshold 2 mu
    emp = hypergeometric_empirical(100, 20, 10, 4, 10**5, 7)
    assert emp <= math.exp(-0.5)


def test_samples_deterministic():
    a = hypergeometric_samples(40, 10, 8, 1000, 3)
    b = hypergeometric_samples(40, 10, 8, 1000, 3)
    assert (a == b).all()


# ---------- harness ----------

def test_full_lists_sanity_path(f5):
    code = ReedSolomonCode(f5, 1, tuple(range(5)))
    cfg = ExperimentConfig(code, m=5, lists="file", list_family=ListFamily.full(f5, 5))
    res = run_experiment(cfg)
    (rec,) = res.records
    assert rec.count == 25
    assert rec.exceeds_theorem
    assert rec.exceeds_johnson in (True, None)


def test_gr06_puncturing_monotone():
    inst = gr06_build(2, 2)
    full = recover_rs(inst.code, inst.lists).count
    code = ExplicitCode(inst.field, tuple(map(tuple, codeword_matrix(inst.code).tolist())))
    for m in (1, 2, 3, 4):
        res = run_experiment(ExperimentConfig(code, m=m, trials=3, lists="gr06", seed=m))
        assert all(r.count >= full for r in res.records)


def test_random_lists_summary():
    F = make_field(13)
    code = ReedSolomonCode(F, 1, tuple(range(13)))
    cfg = ExperimentConfig(code, m=8, trials=20, seed=1, ell=3, rho=Fraction(1, 8))
    res = run_experiment(cfg)
    s = res.summary
    assert s["trials"] == 20
    assert 0 <= float(s["fraction_exceeding_theorem"]) <= 1
    assert s["hypotheses"]["all_satisfied"] is False


def test_sumset_lists_in_harness():
    F = make_field(101)
    code = ReedSolomonCode(F, 1, tuple(range(101)))
    res = run_experiment(ExperimentConfig(code, m=4, trials=2, lists="sumset", t=2))
    for r in res.records:
        assert r.count >= 1


def test_determinism(tmp_path, f5):
    code = ReedSolomonCode(f5, 1, tuple(range(5)))
    cfg = ExperimentConfig(code, m=4, trials=5, seed=9, ell=2)
    a, b = run_experiment(cfg), run_experiment(cfg)
    assert a.to_json() == b.to_json()
    assert a.to_csv() == b.to_csv()
    assert json.loads(a.to_json())["format"] == "listrec-experiment"


def test_trials_independent_of_count(f5):
    code = ReedSolomonCode(f5, 1, tuple(range(5)))
    few = run_experiment(ExperimentConfig(code, m=4, trials=2, seed=4, ell=2))
    many = run_experiment(ExperimentConfig(code, m=4, trials=6, seed=4, ell=2))
    assert few.records == many.records[:2]


def test_timing_only_when_requested(f5):
    code = ReedSolomonCode(f5, 1, tuple(range(5)))
    plain = run_experiment(ExperimentConfig(code, m=4, ell=2))
    assert "wall_time" not in plain.to_json()
    timed = run_experiment(ExperimentConfig(code, m=4, ell=2, timing=True))
    assert "wall_time" in timed.to_json()


def test_config_validation(f5):
    code = ReedSolomonCode(f5, 1, tuple(range(5)))
    with pytest.raises(BadParameter):
        ExperimentConfig(code, m=6, ell=2)
    with pytest.raises(BadParameter):
        ExperimentConfig(code, m=3)  # random lists need ell
    with pytest.raises(BadParameter):
        ExperimentConfig(code, m=3, ell=2, lists="nope")


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**31), st.integers(0, 100))
def test_trial_rng_reproducible(seed, trial):
    assert trial_rng(seed, trial).integers(1 << 30) == trial_rng(seed, trial).integers(1 << 30)
