"""Explicit list families that capture many Reed-Solomon codewords.

Two constructions:

* Subfield lists. The Reed-Solomon code of degree (q-1)/(p-1) on all of
  F_q, q = p^e, with every list equal to the prime subfield F_p. The
  captured codewords are exactly the F_p-valued functions in the code.

* Sumset lines. Over a prime field with evaluation points
  s_0 = 0, s_1 = 1, s_2, ..., s_{m-1}, take
  A0 = sum_j (1 - s_j)^{-1} [t] and A1 = sum_j s_j^{-1} [t] (j = 2..m-1)
  and all lines through a point of {0} x A0 and a point of {1} x A1.
  Every line lies in the lists formed by its own values, and those lists
  stay small because each is a sum of few scaled intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

import numpy as np

from .code import ENUMERATION_CAP, ReedSolomonCode, codeword_matrix, min_distance
from .errors import (
    BadParameter,
    ContainmentBroken,
    EnumerationTooLarge,
    GuardViolated,
    NotPrime,
    PointsInvalid,
    TTooLarge,
)
from .gf import FieldSpec, is_prime, make_field
from .listrecovery import ListFamily
from .theorem import johnson_recovery_or_none


# ---------- subfield lists ----------

@dataclass(frozen=True)
class SubfieldInstance:
    field: FieldSpec
    code: ReedSolomonCode
    lists: ListFamily

    @property
    def degree(self) -> int:
        return self.code.degree


def gr06_build(p: int, e: int) -> SubfieldInstance:
    F = make_field(p, e)
    q = F.order
    degree = (q - 1) // (p - 1)
    code = ReedSolomonCode(F, degree, tuple(F.elements()))
    lists = ListFamily.constant(F.subfield_elements(), q)
    return SubfieldInstance(F, code, lists)


def gr06_codewords(instance: SubfieldInstance, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """Brute force: every codeword whose symbols all lie in the prime subfield (rows)."""
    M = codeword_matrix(instance.code, cap)
    return M[(M < instance.field.characteristic).all(axis=1)]


def frobenius_orbits(p: int, e: int) -> list[tuple[int, ...]]:
    """Orbits of j -> p*j on the monomial exponents {0, ..., q-1} of functions F_q -> F_q.

    Exponents are reduced with x^q = x, so p*j maps to ((p*j - 1) mod (q-1)) + 1
    for j >= 1 and 0 stays fixed.
    """
    q = p**e
    seen = [False] * q
    orbits = []
    for j in range(q):
        if seen[j]:
            continue
        orbit = []
        k = j
        while not seen[k]:
            seen[k] = True
            orbit.append(k)
            k = 0 if k == 0 else (p * k - 1) % (q - 1) + 1
        orbits.append(tuple(orbit))
    return orbits


def subfield_count_by_orbits(p: int, e: int, degree: int) -> int:
    """Number of degree-<=``degree`` polynomials on F_q taking only F_p values.

    Such a polynomial satisfies f^p = f as a function, i.e. its
    coefficients satisfy f_{p j} = f_j^p along each Frobenius orbit. An
    orbit of size s inside [0, degree] contributes a free coefficient in
    F_{p^s}; any other orbit must vanish.
    """
    count = 1
    for orbit in frobenius_orbits(p, e):
        if max(orbit) <= degree:
            count *= p ** len(orbit)
    return count


def gr06_count(
    instance: SubfieldInstance,
    method: Literal["enumerate", "function-count"] = "enumerate",
    cap: int = ENUMERATION_CAP,
) -> int:
    if method == "enumerate":
        return int(len(gr06_codewords(instance, cap)))
    if method == "function-count":
        F = instance.field
        return subfield_count_by_orbits(F.characteristic, F.extension_degree, instance.degree)
    raise BadParameter(f"unknown method {method!r}")


def gr06_report(instance: SubfieldInstance, cap: int = ENUMERATION_CAP) -> dict:
    """Measured counts next to the two candidate closed forms and the Johnson predictions."""
    F = instance.field
    p, e, q = F.characteristic, F.extension_degree, F.order
    by_orbits = gr06_count(instance, "function-count")
    try:
        brute: Optional[int] = gr06_count(instance, "enumerate", cap)
    except EnumerationTooLarge:
        brute = None
    code = instance.code
    eps = 1 - Fraction(min_distance(code), code.n)
    out = {
        "p": p,
        "e": e,
        "q": q,
        "degree": instance.degree,
        "list_size": p,
        "code_size": code.size,
        "count_enumerate": brute,
        "count_function": by_orbits,
        "q_pow_2_pow_e": q ** (2**e),
        "p_pow_2_pow_e": p ** (2**e),
        "relative_distance_deficit": str(eps),
        "johnson_L_at_ell_p_minus_1": None,
        "johnson_L_at_ell_p": None,
    }
    for key, ell in (("johnson_L_at_ell_p_minus_1", p - 1), ("johnson_L_at_ell_p", p)):
        if ell >= 1:
            L = johnson_recovery_or_none(eps, 0, ell)
            out[key] = None if L is None else str(L)
    return out


# ---------- sumset lines ----------

def sumset(F: FieldSpec, A, B) -> frozenset[int]:
    return frozenset(F.add(a, b) for a in A for b in B)


def sumset_interval(F: FieldSpec, scalar: int, t: int) -> frozenset[int]:
    """``scalar * {1, ..., t}`` with integers embedded as multiples of 1."""
    if t >= F.order:
        raise TTooLarge(f"t = {t} must be < q = {F.order}")
    if t < 1:
        raise BadParameter(f"t must be positive, got {t}")
    p = F.characteristic
    return frozenset(F.mul(scalar, j % p) for j in range(1, t + 1))


@dataclass(frozen=True)
class SumsetInstance:
    field: FieldSpec
    points: tuple[int, ...]
    t: int
    A0: frozenset[int]
    A1: frozenset[int]
    line_family: tuple[tuple[int, int], ...]  # (value at 1, value at 0) = (a, b)
    lists: ListFamily
    guard_satisfied: bool

    @property
    def m(self) -> int:
        return len(self.points)

    def slope_intercept(self) -> list[tuple[int, int]]:
        """The lines as ``(slope, intercept)``: Y = (a - b) X + b."""
        F = self.field
        return [(F.sub(a, b), b) for a, b in self.line_family]

    def line_value(self, line: tuple[int, int], x: int) -> int:
        a, b = line
        F = self.field
        return F.add(F.mul(a, x), F.mul(b, F.sub(1, x)))


def sumset_guard(q: int, m: int, t: int) -> bool:
    """``t^m <= sqrt(q) / 8``, i.e. ``64 t^(2m) <= q``."""
    return 64 * t ** (2 * m) <= q


def random_sumset_points(q: int, m: int, rng: np.random.Generator) -> tuple[int, ...]:
    """(0, 1, s_2, ..., s_{m-1}) with the s_j distinct and uniform in [2, q)."""
    if not 3 <= m <= q:
        raise PointsInvalid(f"need 3 <= m <= q, got m = {m}")
    rest = rng.choice(np.arange(2, q), size=m - 2, replace=False)
    return (0, 1) + tuple(int(s) for s in rest)


def _scaled_sum(F: FieldSpec, scalars: Sequence[int], t: int) -> frozenset[int]:
    acc = frozenset([0])
    for c in scalars:
        acc = sumset(F, acc, sumset_interval(F, c, t))
    return acc


def sumset_build(q: int, points: Sequence[int], t: int, enforce_guard: bool = True) -> SumsetInstance:
    """Assemble A0, A1, the line family and the per-point value lists.

    With ``enforce_guard`` the construction refuses parameters outside
    ``64 t^(2m) <= q``; either way the instance records whether it holds.
    """
    if not is_prime(q):
        raise NotPrime(q)
    F = make_field(q)
    pts = tuple(int(s) for s in points)
    m = len(pts)
    if m < 3:
        raise PointsInvalid("need at least three points")
    if pts[0] != 0 or pts[1] != 1:
        raise PointsInvalid("points must start with s_0 = 0, s_1 = 1")
    if len(set(pts)) != m or any(not 0 <= s < q for s in pts):
        raise PointsInvalid(f"points must be distinct elements of F_{q}")
    if t < 2 or 2 * t >= q:
        raise TTooLarge(f"need 2 <= t and 2t < q, got t = {t}")
    guard = sumset_guard(q, m, t)
    if enforce_guard and not guard:
        raise GuardViolated(f"64 * t^(2m) = {64 * t ** (2 * m)} > q = {q}")

    rest = pts[2:]
    A0 = _scaled_sum(F, [F.inv(F.sub(1, s)) for s in rest], t)
    A1 = _scaled_sum(F, [F.inv(s) for s in rest], t)
    a = np.asarray(sorted(A1), dtype=np.int64)
    b = np.asarray(sorted(A0), dtype=np.int64)
    lines = tuple((int(x), int(y)) for x in a for y in b)
    lists = []
    for s in pts:
        # value at X = s of the line through (0, b) and (1, a)
        vals = (a[:, None] * s + b[None, :] * ((1 - s) % q)) % q
        lists.append(frozenset(np.unique(vals).tolist()))
    return SumsetInstance(F, pts, t, A0, A1, lines, ListFamily(tuple(lists)), guard)


def _collisions(F: FieldSpec, scalars: Sequence[int], t: int, cap: int) -> Optional[int]:
    """Ordered pairs of distinct coefficient vectors in [t]^k with equal weighted sums."""
    k = len(scalars)
    if t**k > cap:
        return None
    q = F.order
    sums = np.zeros(1, dtype=np.int64)
    for c in scalars:
        sums = ((sums[:, None] + np.arange(1, t + 1)[None, :] * c) % q).ravel()
    _, counts = np.unique(sums, return_counts=True)
    return int((counts * (counts - 1)).sum())


@dataclass(frozen=True)
class SumsetReport:
    m: int
    t: int
    A0_size: int
    A1_size: int
    family_size: int
    list_sizes: tuple[int, ...]
    bound_2t_pow: int
    family_pow: int
    collision_count_A0: Optional[int]
    collision_count_A1: Optional[int]
    containment: bool
    size_bound_holds: bool
    family_is_product: bool
    identity_holds: Optional[bool]
    guard_satisfied: bool
    degenerate: bool

    @property
    def ell(self) -> int:
        return max(self.list_sizes)

    @property
    def ell_pow(self) -> float:
        """``ell^(1 + 1/(2m))``, the order of codewords the construction promises."""
        return self.ell ** (1 + 1 / (2 * self.m))

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["list_sizes"] = list(self.list_sizes)
        d["ell"] = self.ell
        d["ell_pow"] = self.ell_pow
        return d


def sumset_verify(inst: SumsetInstance, cap: int = ENUMERATION_CAP) -> SumsetReport:
    F, pts, t, m = inst.field, inst.points, inst.t, inst.m
    # (a) containment, re-evaluated with scalar arithmetic
    for line in inst.line_family:
        for s, A in zip(pts, inst.lists):
            if inst.line_value(line, s) not in A:
                raise ContainmentBroken(f"line {line} leaves list at point {s}")
    if inst.lists[0] != inst.A0 or inst.lists[1] != inst.A1:
        raise ContainmentBroken("lists at 0 and 1 must equal A0 and A1")
    bound = 2 * t ** (2 * m - 5) if m >= 3 else 0
    sizes = tuple(len(A) for A in inst.lists)
    size_ok = all(sz <= bound for sz in sizes[2:])
    distinct_lines = len(set(inst.slope_intercept()))
    product = distinct_lines == len(inst.A0) * len(inst.A1) == len(inst.line_family)

    # sumset identity: A_i = {2..2t} + sum_{j != i} ((1-s_i)/(1-s_j))[t] + (s_i/s_j)[t]
    identity: Optional[bool] = None
    if t ** (2 * max(m - 3, 0)) * 2 * t <= cap:
        identity = True
        two_t = frozenset(range(2, 2 * t + 1))
        for i in range(2, m):
            si = pts[i]
            scal = []
            for j in range(2, m):
                if j != i:
                    sj = pts[j]
                    scal.append(F.div(F.sub(1, si), F.sub(1, sj)))
                    scal.append(F.div(si, sj))
            expected = sumset(F, two_t, _scaled_sum(F, scal, t))
            if expected != inst.lists[i]:
                identity = False
                break

    rest = pts[2:]
    return SumsetReport(
        m=m,
        t=t,
        A0_size=len(inst.A0),
        A1_size=len(inst.A1),
        family_size=len(inst.line_family),
        list_sizes=sizes,
        bound_2t_pow=bound,
        family_pow=t ** (2 * m - 4),
        collision_count_A0=_collisions(F, [F.inv(F.sub(1, s)) for s in rest], t, cap),
        collision_count_A1=_collisions(F, [F.inv(s) for s in rest], t, cap),
        containment=True,
        size_bound_holds=size_ok,
        family_is_product=product,
        identity_holds=identity,
        guard_satisfied=inst.guard_satisfied,
        degenerate=m <= 3,
    )


def sumset_lists_for_points(F: FieldSpec, points: Sequence[int], t: int) -> ListFamily:
    """Sumset lists for arbitrary distinct evaluation points of a prime field.

    The points are moved by the affine map x -> (x - points[0]) / (points[1] - points[0])
    so the first two become 0 and 1. Lines stay lines under this map, so the
    lists built for the normalized points also capture the lines on the
    original points.
    """
    if not F.is_prime_field:
        raise BadParameter("the sumset construction needs a prime field")
    u0, u1 = points[0], points[1]
    scale = F.inv(F.sub(u1, u0))
    normalized = [F.mul(F.sub(x, u0), scale) for x in points]
    return sumset_build(F.order, normalized, t, enforce_guard=False).lists
