import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from listrec import (
    ReedSolomonCode,
    gr06_build,
    gr06_count,
    gr06_report,
    make_field,
    random_sumset_points,
    recover_rs,
    sumset,
    sumset_build,
    sumset_interval,
    sumset_verify,
)
from listrec.adversarial import frobenius_orbits, subfield_count_by_orbits, sumset_guard, sumset_lists_for_points
from listrec.errors import GuardViolated, NotPrime, PointsInvalid, TTooLarge


# ---------- subfield lists ----------

def test_gr06_parameters():
    inst = gr06_build(3, 1)
    assert inst.field.order == 3 and inst.degree == 1
    assert all(A == frozenset(range(3)) for A in inst.lists)
    inst = gr06_build(2, 2)
    assert inst.degree == 3 and len(inst.lists) == 4
    assert all(A == {0, 1} for A in inst.lists)
    inst = gr06_build(2, 3)
    assert inst.degree == 7 and all(A == {0, 1} for A in inst.lists)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_gr06_prime_field_count(p):
    inst = gr06_build(p, 1)
    assert gr06_count(inst) == p**2 == gr06_count(inst, "function-count")


def _brute_subfield_polys(p, e):
    """Every coefficient vector, evaluated with the field directly."""
    F = make_field(p, e)
    q = F.order
    deg = (q - 1) // (p - 1)
    n = 0
    for coeffs in itertools.product(range(q), repeat=deg + 1):
        if all(F.poly_eval(coeffs, x) < p for x in F.elements()):
            n += 1
    return n


def test_gr06_f4_measured():
    inst = gr06_build(2, 2)
    assert _brute_subfield_polys(2, 2) == 16
    assert gr06_count(inst) == 16
    assert gr06_count(inst, "function-count") == 16
    rep = gr06_report(inst)
    assert rep["q_pow_2_pow_e"] == 256 and rep["p_pow_2_pow_e"] == 16


def test_gr06_counts_agree():
    inst = gr06_build(3, 2)
    assert gr06_count(inst) == gr06_count(inst, "function-count") == 3**4


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (2, 3), (2, 4)])
def test_gr06_solver_count(p, e):
    # the interpolation solver searches only list tuples, so it reaches
    # instances too large to enumerate
    inst = gr06_build(p, e)
    res = recover_rs(inst.code, inst.lists, 0)
    assert res.count == gr06_count(inst, "function-count") == p ** (2**e)


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)])
def test_orbits_partition_exponents(p, e):
    orbits = frobenius_orbits(p, e)
    flat = sorted(j for o in orbits for j in o)
    assert flat == list(range(p**e))
    for o in orbits:
        assert len(o) <= e and e % len(o) == 0 or o == (0,)


@pytest.mark.parametrize("p,e,deg", [(2, 2, 1), (2, 2, 2), (3, 2, 3), (2, 3, 2)])
def test_orbit_count_other_degrees(p, e, deg):
    F = make_field(p, e)
    code = ReedSolomonCode(F, deg, tuple(F.elements()))
    from listrec.code import codeword_matrix
    M = codeword_matrix(code)
    assert int((M < p).all(axis=1).sum()) == subfield_count_by_orbits(p, e, deg)


def test_gr06_lists_capture_puncturings():
    # any puncturing keeps at least the projections of the full-length hits
    # (degree q-1 leaves no room to puncture an RS code, so go explicit)
    from listrec import ExplicitCode, PunctureMap, puncture, recover_explicit
    from listrec.code import codeword_matrix
    inst = gr06_build(2, 2)
    full = recover_rs(inst.code, inst.lists).found
    code = ExplicitCode(inst.field, tuple(map(tuple, codeword_matrix(inst.code).tolist())))
    pm = PunctureMap((0, 2, 3))
    res = recover_explicit(puncture(code, pm), inst.lists.restrict(pm))
    assert {tuple(w[i] for i in pm.kept) for w in full} <= set(res.found)
    assert res.raw_count >= len(full)


# ---------- sumset lines ----------

def test_sumset_interval():
    F7 = make_field(7)
    assert sumset_interval(F7, 1, 3) == {1, 2, 3}
    assert sumset_interval(F7, 2, 3) == {2, 4, 6}
    with pytest.raises(TTooLarge):
        sumset_interval(F7, 1, 7)
    F = make_field(101)
    I3 = sumset_interval(F, 1, 3)
    assert sumset(F, I3, I3) == set(range(2, 7))


def test_sumset_m3_single_interval():
    q = 10007
    inst = sumset_build(q, (0, 1, 5), 3, enforce_guard=False)
    assert len(inst.A0) == 3
    F = inst.field
    assert inst.A0 == sumset_interval(F, F.inv(F.sub(1, 5)), 3)
    rep = sumset_verify(inst)
    assert rep.degenerate and rep.bound_2t_pow == 6


def test_sumset_explicit_a0():
    q = 10007
    inst = sumset_build(q, (0, 1, 2, 3), 3, enforce_guard=False)
    F = inst.field
    c1, c2 = F.inv(F.sub(1, 2)), F.inv(F.sub(1, 3))
    expect = {F.add(F.mul(c1, i), F.mul(c2, j)) for i in range(1, 4) for j in range(1, 4)}
    assert inst.A0 == expect
    assert inst.lists[0] == inst.A0 and inst.lists[1] == inst.A1


def test_sumset_report_m4():
    rng = np.random.default_rng(11)
    pts = random_sumset_points(10007, 4, rng)
    rep = sumset_verify(sumset_build(10007, pts, 3, enforce_guard=False))
    assert rep.A0_size <= 9 and rep.A1_size <= 9 and rep.family_size <= 81
    assert rep.containment and rep.size_bound_holds and rep.family_is_product
    assert rep.bound_2t_pow == 54
    assert rep.identity_holds
    assert not rep.guard_satisfied


def test_sumset_guard():
    assert sumset_guard(64 * 2**6, 3, 2)
    assert not sumset_guard(10007, 4, 3)
    with pytest.raises(GuardViolated):
        sumset_build(10007, (0, 1, 2, 3), 3)


def test_sumset_bad_inputs():
    with pytest.raises(NotPrime):
        sumset_build(10006, (0, 1, 2), 2, enforce_guard=False)
    with pytest.raises(PointsInvalid):
        sumset_build(101, (1, 0, 2), 2, enforce_guard=False)
    with pytest.raises(PointsInvalid):
        sumset_build(101, (0, 1, 1), 2, enforce_guard=False)
    with pytest.raises(TTooLarge):
        sumset_build(101, (0, 1, 2), 60, enforce_guard=False)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([101, 1009, 10007]), st.integers(3, 5), st.integers(2, 3), st.integers(0, 2**32 - 1))
def test_sumset_lines_are_recovered(q, m, t, seed):
    """The zero-error solver finds every line of the family inside the lists."""
    if 2 * t >= q:
        return
    pts = random_sumset_points(q, m, np.random.default_rng(seed))
    inst = sumset_build(q, pts, t, enforce_guard=False)
    code = ReedSolomonCode(inst.field, 1, inst.points)
    found = set(recover_rs(code, inst.lists, 0).coefficients)
    lines = {(b, slope) for slope, b in inst.slope_intercept()}  # (constant, linear) coefficients
    assert lines <= found
    rep = sumset_verify(inst)
    assert rep.containment and rep.size_bound_holds and rep.family_is_product


def test_sumset_lists_for_arbitrary_points():
    F = make_field(1009)
    pts = (5, 17, 100, 400)
    lists = sumset_lists_for_points(F, pts, 2)
    code = ReedSolomonCode(F, 1, pts)
    assert recover_rs(code, lists, 0).count >= len(lists[0]) * len(lists[1])
