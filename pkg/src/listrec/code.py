"""Codes, puncturing and distances.

A codeword is a plain tuple of field-element indices. Two kinds of code
are supported: :class:`ReedSolomonCode` (polynomials of degree <= d
evaluated on distinct points) and :class:`ExplicitCode` (a list of
codewords). Coordinates are 0-indexed throughout the library.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import (
    BadSize,
    EmptyList,
    EnumerationTooLarge,
    IndexOutOfRange,
    InvalidCode,
    LengthMismatch,
    WrongCoefficientCount,
)
from .gf import FieldSpec

Codeword = tuple[int, ...]

#: Default bound on the number of codewords (or codeword pairs) enumerated.
ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class ReedSolomonCode:
    """Evaluations of all polynomials of degree <= ``degree`` on ``eval_points``."""

    field: FieldSpec
    degree: int
    eval_points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(self.field.check(x) for x in self.eval_points)
        object.__setattr__(self, "eval_points", pts)
        if len(set(pts)) != len(pts):
            raise InvalidCode("evaluation points must be distinct")
        if not 0 <= self.degree < len(pts):
            raise InvalidCode(f"need 0 <= d < n, got d={self.degree}, n={len(pts)}")

    @property
    def n(self) -> int:
        return len(self.eval_points)

    @property
    def dimension(self) -> int:
        return self.degree + 1

    @property
    def size(self) -> int:
        return self.field.order ** (self.degree + 1)


@dataclass(frozen=True)
class ExplicitCode:
    """A code given by its list of codewords.

    ``collided`` is set by :func:`puncture` when distinct original codewords
    project to the same word; only then may ``codewords`` contain repeats.
    """

    field: FieldSpec
    codewords: tuple[Codeword, ...]
    collided: bool = False

    def __post_init__(self):
        words = tuple(tuple(self.field.check(s) for s in w) for w in self.codewords)
        object.__setattr__(self, "codewords", words)
        if not words:
            raise InvalidCode("an explicit code needs at least one codeword")
        if len({len(w) for w in words}) != 1:
            raise InvalidCode("codewords must share one block length")
        if not self.collided and len(set(words)) != len(words):
            raise InvalidCode("codewords must be distinct")

    @property
    def n(self) -> int:
        return len(self.codewords[0])

    @property
    def size(self) -> int:
        return len(self.codewords)


Code = Union[ReedSolomonCode, ExplicitCode]


@dataclass(frozen=True)
class PunctureMap:
    """The kept coordinates, strictly increasing."""

    kept: tuple[int, ...]

    def __post_init__(self):
        kept = tuple(int(i) for i in self.kept)
        object.__setattr__(self, "kept", kept)
        if not kept:
            raise BadSize("a puncturing must keep at least one coordinate")
        if any(b <= a for a, b in zip(kept, kept[1:])):
            raise BadSize(f"kept indices must be strictly increasing: {kept}")

    @property
    def m(self) -> int:
        return len(self.kept)

    def compose(self, inner: "PunctureMap") -> "PunctureMap":
        """The map that keeps ``inner`` positions of what ``self`` keeps."""
        if inner.kept[-1] >= self.m:
            raise IndexOutOfRange(f"index {inner.kept[-1]} >= {self.m}")
        return PunctureMap(tuple(self.kept[i] for i in inner.kept))


# ---------- Reed-Solomon encoding ----------

def rs_encode(code: ReedSolomonCode, coeffs: Sequence[int]) -> Codeword:
    if len(coeffs) != code.degree + 1:
        raise WrongCoefficientCount(f"expected {code.degree + 1} coefficients, got {len(coeffs)}")
    F = code.field
    coeffs = [F.check(c) for c in coeffs]
    return tuple(F.poly_eval(coeffs, x) for x in code.eval_points)


def rs_enumerate(
    code: ReedSolomonCode, cap: int = ENUMERATION_CAP
) -> Iterator[tuple[tuple[int, ...], Codeword]]:
    """Yield ``(coeffs, codeword)`` for every polynomial, coefficients in lexicographic order."""
    if code.size > cap:
        raise EnumerationTooLarge(f"q^(d+1) = {code.size} exceeds cap {cap}")
    F = code.field
    for coeffs in itertools.product(F.elements(), repeat=code.degree + 1):
        yield coeffs, tuple(F.poly_eval(coeffs, x) for x in code.eval_points)


def iter_codewords(code: Code, cap: int = ENUMERATION_CAP) -> Iterator[Codeword]:
    if isinstance(code, ExplicitCode):
        yield from code.codewords
    else:
        for _, w in rs_enumerate(code, cap):
            yield w


def codeword_matrix(code: Code, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """All codewords as rows of an int64 array (enumeration order)."""
    if isinstance(code, ExplicitCode):
        return np.asarray(code.codewords, dtype=np.int64)
    if code.size > cap:
        raise EnumerationTooLarge(f"q^(d+1) = {code.size} exceeds cap {cap}")
    F = code.field
    q, k = F.order, code.degree + 1
    # coefficient rows in lexicographic order, then Horner over all points at once
    idx = np.arange(q**k, dtype=np.int64)
    coeffs = np.stack([(idx // q ** (k - 1 - j)) % q for j in range(k)], axis=1)
    x = np.asarray(code.eval_points, dtype=np.int64)[None, :]
    acc = np.zeros((q**k, code.n), dtype=np.int64)
    for j in reversed(range(k)):
        acc = F.vadd(F.vmul(acc, x), coeffs[:, j : j + 1])
    return acc


# ---------- distances ----------

def hamming_distance(c1: Sequence[int], c2: Sequence[int]) -> int:
    if len(c1) != len(c2):
        raise LengthMismatch(f"{len(c1)} != {len(c2)}")
    return sum(a != b for a, b in zip(c1, c2))


def distance_to_lists(c: Sequence[int], lists: Sequence) -> int:
    """Number of coordinates ``i`` with ``c[i]`` outside ``lists[i]``.

    This equals the Hamming distance from ``c`` to the nearest point of
    the product set ``lists[0] x ... x lists[n-1]``.
    """
    if len(c) != len(lists):
        raise LengthMismatch(f"codeword length {len(c)} != {len(lists)} lists")
    misses = 0
    for s, A in zip(c, lists):
        if not A:
            raise EmptyList("every input list must be nonempty")
        if s not in A:
            misses += 1
    return misses


def min_distance(code: Code, cap: int = ENUMERATION_CAP) -> int:
    """Minimum distance: n - d for Reed-Solomon, exact pairwise scan otherwise."""
    if isinstance(code, ReedSolomonCode):
        return code.n - code.degree
    words = code.codewords
    if len(words) ** 2 > cap:
        raise EnumerationTooLarge(f"{len(words)}^2 pairs exceeds cap {cap}")
    if len(words) == 1 or code.collided:
        return code.n if len(words) == 1 else 0
    M = np.asarray(words, dtype=np.int64)
    best = code.n
    for i in range(len(M) - 1):
        d = (M[i + 1 :] != M[i]).sum(axis=1).min()
        best = min(best, int(d))
    return best


def pairwise_min_distance(code: Code, pair_cap: int = 10**8) -> int:
    """Exhaustive minimum distance over all codeword pairs (any code kind)."""
    M = codeword_matrix(code)
    if len(M) ** 2 > pair_cap:
        raise EnumerationTooLarge(f"{len(M)}^2 pairs exceeds cap {pair_cap}")
    if len(M) == 1:
        return M.shape[1]
    best = M.shape[1]
    for i in range(len(M) - 1):
        best = min(best, int((M[i + 1 :] != M[i]).sum(axis=1).min()))
    return best


# ---------- puncturing ----------

def puncture(code: Code, pmap: PunctureMap) -> Code:
    if pmap.kept[-1] >= code.n or pmap.kept[0] < 0:
        raise IndexOutOfRange(f"kept indices must lie in [0, {code.n})")
    if isinstance(code, ReedSolomonCode):
        pts = tuple(code.eval_points[i] for i in pmap.kept)
        if code.degree >= len(pts):
            raise BadSize(f"puncturing to m={len(pts)} <= d={code.degree} leaves no RS code")
        return ReedSolomonCode(code.field, code.degree, pts)
    words = tuple(tuple(w[i] for i in pmap.kept) for w in code.codewords)
    collided = code.collided or len(set(words)) != len(words)
    return ExplicitCode(code.field, words, collided=collided)


def as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_puncture(code: Code, m: int, seed) -> tuple[PunctureMap, Code]:
    """Uniform random ``m``-subset of coordinates by partial Fisher-Yates.

    ``seed`` is an int, a SeedSequence or a numpy Generator (which is
    advanced in place).
    """
    n = code.n
    if not 1 <= m <= n:
        raise BadSize(f"need 1 <= m <= n = {n}, got {m}")
    rng = as_generator(seed)
    perm = list(range(n))
    for i in range(m):
        j = int(rng.integers(i, n))
        perm[i], perm[j] = perm[j], perm[i]
    pmap = PunctureMap(tuple(sorted(perm[:m])))
    return pmap, puncture(code, pmap)


def rate(code: Code) -> Union[Fraction, float]:
    """log|C| / (n log q); exact as a Fraction when |C| is a power of q."""
    if isinstance(code, ReedSolomonCode):
        return Fraction(code.degree + 1, code.n)
    q, size = code.field.order, len(set(code.codewords))
    k, power = 0, 1
    while power < size:
        power *= q
        k += 1
    if power == size:
        return Fraction(k, code.n)
    return math.log(size) / (code.n * math.log(q))
