"""Exact list recovery.

Given per-coordinate input lists ``A_1, ..., A_n`` and an error fraction
``rho``, list recovery asks for every codeword ``c`` with
``#{i : c[i] not in A_i} <= rho * n``. The threshold is compared exactly:
``rho`` is held as a :class:`~fractions.Fraction`.

For Reed-Solomon codes :func:`recover_rs` enumerates interpolation
anchors. A codeword within the radius agrees with the lists on at least
``n - floor(rho n) >= d + 1`` coordinates, so some (d+1)-subset of
coordinates consists only of agreements and the codeword is the
interpolant of its values there. With ``rho n < 1`` every coordinate
agrees and one subset (the one with the smallest lists) suffices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from ._util import Rational, as_fraction, max_errors
from .code import (
    ENUMERATION_CAP,
    Code,
    Codeword,
    ExplicitCode,
    PunctureMap,
    ReedSolomonCode,
    codeword_matrix,
    distance_to_lists,
)
from .errors import (
    BadParameter,
    EmptyList,
    LengthMismatch,
    RadiusTooLarge,
    SearchSpaceTooLarge,
    WorkCapExceeded,
)
from .gf import FieldSpec

#: Default bound on interpolations performed by :func:`recover_rs`.
WORK_CAP = 10**7
#: Default bound on list families searched by :func:`is_zero_error_recoverable`.
FAMILY_CAP = 10**6

_MEMBER_TABLE_LIMIT = 2**24
_CHUNK = 2**15


@dataclass(frozen=True)
class ListFamily:
    """Input lists ``A_0, ..., A_{n-1}``, each a nonempty frozenset of symbols."""

    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        lists = tuple(frozenset(int(s) for s in A) for A in self.lists)
        if any(not A for A in lists):
            raise EmptyList("every input list must be nonempty")
        object.__setattr__(self, "lists", lists)

    @property
    def ell(self) -> int:
        return max(len(A) for A in self.lists)

    def __len__(self):
        return len(self.lists)

    def __getitem__(self, i):
        return self.lists[i]

    def __iter__(self):
        return iter(self.lists)

    def check(self, F: FieldSpec) -> "ListFamily":
        for A in self.lists:
            for s in A:
                F.check(s)
        return self

    def restrict(self, pmap: PunctureMap) -> "ListFamily":
        return ListFamily(tuple(self.lists[i] for i in pmap.kept))

    def contains(self, c: Sequence[int]) -> bool:
        return all(s in A for s, A in zip(c, self.lists))

    def as_sorted(self) -> list[list[int]]:
        return [sorted(A) for A in self.lists]

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "ListFamily":
        return cls(tuple(frozenset(F.elements()) for _ in range(n)))

    @classmethod
    def constant(cls, symbols: Iterable[int], n: int) -> "ListFamily":
        A = frozenset(symbols)
        return cls(tuple(A for _ in range(n)))

    @classmethod
    def random(cls, F: FieldSpec, n: int, ell: int, rng: np.random.Generator) -> "ListFamily":
        """Independent uniformly random ``ell``-subsets of the field, one per coordinate."""
        if not 1 <= ell <= F.order:
            raise BadParameter(f"need 1 <= ell <= q, got {ell}")
        return cls(
            tuple(frozenset(int(s) for s in rng.choice(F.order, size=ell, replace=False)) for _ in range(n))
        )

    @classmethod
    def of_values(cls, words: Sequence[Sequence[int]]) -> "ListFamily":
        """The per-coordinate value sets ``{c[i] : c in words}``."""
        return cls(tuple(frozenset(col) for col in zip(*words)))


def _as_family(lists, n: int) -> ListFamily:
    fam = lists if isinstance(lists, ListFamily) else ListFamily(tuple(lists))
    if len(fam) != n:
        raise LengthMismatch(f"{len(fam)} lists for block length {n}")
    return fam


@dataclass(frozen=True)
class RecoveryResult:
    """Codewords within the radius, in canonical order.

    For Reed-Solomon codes ``coefficients[j]`` is the polynomial of
    ``found[j]`` and the order is lexicographic in coefficients; for
    explicit codes the order is the code's own.
    """

    found: tuple[Codeword, ...]
    rho: Fraction
    output_cap: Optional[int] = None
    coefficients: Optional[tuple[tuple[int, ...], ...]] = None
    interpolations: int = 0
    subsets: int = 0
    raw_count: Optional[int] = None  # explicit codes: captured entries counting repeats

    @property
    def count(self) -> int:
        return len(self.found)

    @property
    def exceeded_cap(self) -> bool:
        return self.output_cap is not None and self.count > self.output_cap

    def to_dict(self) -> dict:
        out = {
            "rho": str(self.rho),
            "output_cap": self.output_cap,
            "count": self.count,
            "exceeded_cap": self.exceeded_cap,
            "codewords": [list(c) for c in self.found],
            "work": {"interpolations": self.interpolations, "subsets": self.subsets},
        }
        if self.coefficients is not None:
            out["coefficients"] = [list(c) for c in self.coefficients]
        if self.raw_count is not None:
            out["raw_count"] = self.raw_count
        return out


def recover_explicit(
    code: ExplicitCode, lists, rho: Rational = 0, output_cap: Optional[int] = None
) -> RecoveryResult:
    """Filter the codewords by distance to the product of ``lists``."""
    fam = _as_family(lists, code.n)
    rho = as_fraction(rho)
    if not 0 <= rho < 1:
        raise BadParameter(f"rho must lie in [0, 1), got {rho}")
    budget = max_errors(rho, code.n)
    hits = [w for w in code.codewords if distance_to_lists(w, fam) <= budget]
    found = tuple(dict.fromkeys(hits))
    return RecoveryResult(found, rho, output_cap, raw_count=len(hits))


def _lagrange_basis(F: FieldSpec, xs: Sequence[int]) -> list[list[int]]:
    """Coefficient vectors of the Lagrange basis polynomials on ``xs``."""
    basis = []
    for k, xk in enumerate(xs):
        num, den = [1], 1
        for j, xj in enumerate(xs):
            if j != k:
                num = F.poly_mul(num, [F.neg(xj), 1])
                den = F.mul(den, F.sub(xk, xj))
        scale = F.inv(den)
        basis.append([F.mul(c, scale) for c in num])
    return basis


def _elementary_symmetric(values: Sequence[int], k: int) -> int:
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


class _MissCounter:
    """Counts, per row of a codeword block, the coordinates outside the lists."""

    def __init__(self, F: FieldSpec, fam: ListFamily):
        n = len(fam)
        self.n = n
        if n * F.order <= _MEMBER_TABLE_LIMIT:
            table = np.zeros((n, F.order), dtype=bool)
            for i, A in enumerate(fam):
                table[i, sorted(A)] = True
            self.table = table
            self.rows = np.arange(n)[None, :]
        else:
            self.table = None
            self.arrays = [np.asarray(sorted(A), dtype=np.int64) for A in fam]

    def __call__(self, words: np.ndarray) -> np.ndarray:
        if self.table is not None:
            return self.n - self.table[self.rows, words].sum(axis=1)
        hits = sum(np.isin(words[:, i], arr).astype(np.int64) for i, arr in enumerate(self.arrays))
        return self.n - hits


def recover_rs(
    code: ReedSolomonCode,
    lists,
    rho: Rational = 0,
    output_cap: Optional[int] = None,
    work_cap: int = WORK_CAP,
) -> RecoveryResult:
    """All Reed-Solomon codewords within ``rho * n`` of the product of ``lists``.

    Raises :class:`RadiusTooLarge` when fewer than ``d + 1`` agreements are
    guaranteed (exactness could not be certified) and
    :class:`WorkCapExceeded` before doing more than ``work_cap``
    interpolations.
    """
    F = code.field
    n, d = code.n, code.degree
    fam = _as_family(lists, n).check(F)
    rho = as_fraction(rho)
    if not 0 <= rho < 1:
        raise BadParameter(f"rho must lie in [0, 1), got {rho}")
    budget = max_errors(rho, n)
    if n - budget < d + 1:
        raise RadiusTooLarge(f"only {n - budget} agreements guaranteed, need d+1 = {d + 1}")

    sizes = [len(A) for A in fam]
    if budget == 0:
        anchor = tuple(sorted(sorted(range(n), key=lambda i: (sizes[i], i))[: d + 1]))
        subsets: Iterable[tuple[int, ...]] = [anchor]
        work = 1
        for i in anchor:
            work *= sizes[i]
        n_subsets = 1
    else:
        subsets = itertools.combinations(range(n), d + 1)
        work = _elementary_symmetric(sizes, d + 1)
        n_subsets = _elementary_symmetric([1] * n, d + 1)
    if work > work_cap:
        raise WorkCapExceeded(f"{work} interpolations exceeds cap {work_cap}")

    misses = _MissCounter(F, fam)
    pts = code.eval_points
    sorted_lists = fam.as_sorted()
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    for T in subsets:
        basis = _lagrange_basis(F, [pts[i] for i in T])
        coef = np.asarray(basis, dtype=np.int64)  # (d+1, d+1): row k = basis poly k
        evals = np.asarray([[F.poly_eval(b, x) for x in pts] for b in basis], dtype=np.int64)
        tuples = itertools.product(*(sorted_lists[i] for i in T))
        while True:
            block = list(itertools.islice(tuples, _CHUNK))
            if not block:
                break
            Y = np.asarray(block, dtype=np.int64)
            words = np.zeros((len(Y), n), dtype=np.int64)
            for k in range(d + 1):
                words = F.vadd(words, F.vmul(Y[:, k : k + 1], evals[k][None, :]))
            ok = misses(words) <= budget
            if not ok.any():
                continue
            Yk, Wk = Y[ok], words[ok]
            coeffs = np.zeros((len(Yk), d + 1), dtype=np.int64)
            for k in range(d + 1):
                coeffs = F.vadd(coeffs, F.vmul(Yk[:, k : k + 1], coef[k][None, :]))
            for c, w in zip(coeffs.tolist(), Wk.tolist()):
                found.setdefault(tuple(c), tuple(w))
    keys = sorted(found)
    return RecoveryResult(
        found=tuple(found[k] for k in keys),
        rho=rho,
        output_cap=output_cap,
        coefficients=tuple(keys),
        interpolations=work,
        subsets=n_subsets,
    )


def recover(code: Code, lists, rho: Rational = 0, output_cap: Optional[int] = None, **kw) -> RecoveryResult:
    if isinstance(code, ReedSolomonCode):
        return recover_rs(code, lists, rho, output_cap, **kw)
    return recover_explicit(code, lists, rho, output_cap)


@dataclass(frozen=True)
class ZeroErrorResult:
    """Outcome of a zero-error search; ``witness`` captures more than ``L`` codewords."""

    recoverable: bool
    ell: int
    L: int
    witness: Optional[ListFamily] = None
    captured: tuple[Codeword, ...] = ()
    families_searched: int = 0
    exhaustive: bool = True

    def __bool__(self):
        return self.recoverable

    def to_dict(self) -> dict:
        return {
            "recoverable": self.recoverable,
            "ell": self.ell,
            "L": self.L,
            "exhaustive": self.exhaustive,
            "families_searched": self.families_searched,
            "witness": None if self.witness is None else self.witness.as_sorted(),
            "captured": [list(c) for c in self.captured],
        }


def _distinct_rows(code: Code) -> list[Codeword]:
    return list(dict.fromkeys(map(tuple, codeword_matrix(code).tolist())))


def is_zero_error_recoverable(
    code: Code,
    ell: int,
    L: int,
    candidates: Optional[Iterable] = None,
    cap: int = FAMILY_CAP,
    code_cap: int = ENUMERATION_CAP,
) -> ZeroErrorResult:
    """Decide (ell, L) zero-error list recoverability.

    Without ``candidates`` the search is exhaustive. Only lists drawn from
    the symbols actually occurring in each column are tried: any list of
    size <= ell meets the column in at most ell symbols, and some such
    candidate contains that intersection, so nothing is missed. The
    search is a depth-first walk over coordinates that abandons a branch
    once at most ``L`` codewords survive. The first family found (in
    lexicographic order) is returned as the witness.
    """
    if ell < 1 or L < 0:
        raise BadParameter(f"need ell >= 1 and L >= 0, got ell={ell}, L={L}")
    words = _distinct_rows(code)
    n = code.n

    if candidates is not None:
        searched = 0
        for fam in candidates:
            fam = _as_family(fam, n)
            if fam.ell > ell:
                raise BadParameter(f"candidate family has a list larger than ell={ell}")
            searched += 1
            hit = tuple(w for w in words if fam.contains(w))
            if len(hit) > L:
                return ZeroErrorResult(False, ell, L, fam, hit, searched, exhaustive=False)
        return ZeroErrorResult(True, ell, L, families_searched=searched, exhaustive=False)

    if len(words) <= L:
        return ZeroErrorResult(True, ell, L, families_searched=0)

    # per coordinate: candidate lists with their codeword bitmasks
    options: list[list[tuple[tuple[int, ...], int]]] = []
    total = 1
    for i in range(n):
        by_symbol: dict[int, int] = {}
        for j, w in enumerate(words):
            by_symbol[w[i]] = by_symbol.get(w[i], 0) | (1 << j)
        symbols = sorted(by_symbol)
        if len(symbols) <= ell:
            choices = [tuple(symbols)]
        else:
            choices = list(itertools.combinations(symbols, ell))
        opts = []
        for ch in choices:
            mask = 0
            for s in ch:
                mask |= by_symbol[s]
            opts.append((ch, mask))
        options.append(opts)
        total *= len(opts)
    if total > cap:
        raise SearchSpaceTooLarge(f"{total} candidate families exceeds cap {cap}")

    searched = 0
    chosen: list[tuple[int, ...]] = []

    def walk(i: int, mask: int) -> Optional[int]:
        nonlocal searched
        if i == n:
            searched += 1
            return mask
        for ch, m in options[i]:
            sub = mask & m
            if sub.bit_count() <= L:
                searched += 1
                continue
            chosen.append(ch)
            res = walk(i + 1, sub)
            if res is not None:
                return res
            chosen.pop()
        return None

    full = (1 << len(words)) - 1
    hit_mask = walk(0, full)
    if hit_mask is None:
        return ZeroErrorResult(True, ell, L, families_searched=searched)
    witness = ListFamily(tuple(frozenset(ch) for ch in chosen))
    hit = tuple(w for j, w in enumerate(words) if hit_mask >> j & 1)
    return ZeroErrorResult(False, ell, L, witness, hit, searched)
