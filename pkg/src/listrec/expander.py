"""The bipartite graph of a code and its unbalanced-expansion parameters.

Left vertices are codewords, right vertices are pairs ``(i, symbol)``
and codeword ``c`` is joined to ``(i, c[i])`` for each coordinate, so
every left vertex has degree ``n``. For a set ``S`` of codewords,
``|N(S)| = sum_i |{c[i] : c in S}|``; a small neighborhood means small
per-coordinate value sets, which is exactly a list family capturing all
of ``S``. :func:`zero_error_bridge` checks that correspondence against
the zero-error solver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from ._util import Rational, as_fraction
from .code import ENUMERATION_CAP, Code, Codeword, as_generator, codeword_matrix
from .errors import BadParameter, SearchSpaceTooLarge
from .listrecovery import ListFamily, ZeroErrorResult, is_zero_error_recoverable

#: Default bound on the number of k-sets examined exhaustively.
SET_CAP = 10**7

_CHUNK = 2**14


@dataclass(frozen=True)
class BipartiteCodeGraph:
    """G(C). Codeword ``j`` of ``codewords`` is left vertex ``j``."""

    codewords: tuple[Codeword, ...]

    @property
    def n(self) -> int:
        return len(self.codewords[0])

    @property
    def left(self) -> range:
        return range(len(self.codewords))

    def neighbors(self, j: int) -> tuple[tuple[int, int], ...]:
        return tuple(enumerate(self.codewords[j]))

    @cached_property
    def right(self) -> frozenset[tuple[int, int]]:
        """Right vertices with at least one neighbor."""
        return frozenset(e for j in self.left for e in self.neighbors(j))

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.codewords, dtype=np.int64)

    def neighborhood(self, S: Iterable[int]) -> frozenset[tuple[int, int]]:
        return frozenset(e for j in S for e in self.neighbors(j))

    def edges(self) -> Iterable[tuple[int, int, int]]:
        for j, w in enumerate(self.codewords):
            for i, s in enumerate(w):
                yield j, i, s


def code_graph(code: Code, cap: int = ENUMERATION_CAP) -> BipartiteCodeGraph:
    return BipartiteCodeGraph(tuple(map(tuple, codeword_matrix(code, cap).tolist())))


@dataclass(frozen=True)
class ExpansionReport:
    k: int
    d: int
    min_neighborhood: int
    worst_set: tuple[int, ...]
    mode: str  # "exhaustive" or "sampled"
    sets_examined: int
    trials: Optional[int] = None

    @property
    def achieved_epsilon(self) -> Fraction:
        """Smallest eps with ``|N(S)| >= d k (1 - eps)`` over the examined sets."""
        return 1 - Fraction(self.min_neighborhood, self.d * self.k)

    @property
    def is_certificate(self) -> bool:
        return self.mode == "exhaustive"

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "min_neighborhood": self.min_neighborhood,
            "achieved_epsilon": str(self.achieved_epsilon),
            "worst_set": list(self.worst_set),
            "mode": self.mode,
            "certificate": self.is_certificate,
            "sets_examined": self.sets_examined,
            "trials": self.trials,
        }


def _column_distinct(M: np.ndarray, sets: np.ndarray) -> np.ndarray:
    """For each row of ``sets`` (left-vertex ids), distinct symbols per coordinate."""
    block = np.sort(M[sets], axis=1)  # (rows, k, n)
    return 1 + (np.diff(block, axis=1) != 0).sum(axis=1)


def _ksets(N: int, k: int) -> Iterable[np.ndarray]:
    it = itertools.combinations(range(N), k)
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            return
        yield np.asarray(chunk, dtype=np.int64)


def _check_k(graph: BipartiteCodeGraph, k: int):
    if not 1 <= k <= len(graph.codewords):
        raise BadParameter(f"need 1 <= k <= |L| = {len(graph.codewords)}, got {k}")


def expansion_exhaustive(graph: BipartiteCodeGraph, k: int, cap: int = SET_CAP) -> ExpansionReport:
    """Exact minimum of ``|N(S)|`` over all k-sets; ties go to the lexicographically first set."""
    _check_k(graph, k)
    N = len(graph.codewords)
    total = math.comb(N, k)
    if total > cap:
        raise SearchSpaceTooLarge(f"C({N}, {k}) = {total} exceeds cap {cap}")
    M = graph.matrix
    best, worst = None, None
    for sets in _ksets(N, k):
        sizes = _column_distinct(M, sets).sum(axis=1)
        j = int(np.argmin(sizes))
        if best is None or sizes[j] < best:
            best, worst = int(sizes[j]), tuple(int(x) for x in sets[j])
    return ExpansionReport(k, graph.n, best, worst, "exhaustive", total)


def expansion_sampled(graph: BipartiteCodeGraph, k: int, trials: int, seed) -> ExpansionReport:
    """Minimum of ``|N(S)|`` over ``trials`` uniformly random k-sets.

    The result is an estimate, not a certificate: the true minimum can
    only be smaller than what was seen.
    """
    _check_k(graph, k)
    if trials < 1:
        raise BadParameter("trials must be >= 1")
    rng = as_generator(seed)
    N = len(graph.codewords)
    sets = np.sort(np.stack([rng.choice(N, size=k, replace=False) for _ in range(trials)]), axis=1)
    sizes = _column_distinct(graph.matrix, sets).sum(axis=1)
    j = int(np.argmin(sizes))
    return ExpansionReport(k, graph.n, int(sizes[j]), tuple(int(x) for x in sets[j]), "sampled", trials, trials)


def corollary_params(epsilon: Rational, alpha: Rational, m: int) -> tuple[int, int, Fraction]:
    """``(k, d, eps) = (floor(alpha / epsilon^2), m, alpha)`` for a puncturing of size m."""
    eps, alpha = as_fraction(epsilon), as_fraction(alpha)
    if not 0 < alpha < 1:
        raise BadParameter(f"need 0 < alpha < 1, got {alpha}")
    if eps <= 0:
        raise BadParameter(f"need epsilon > 0, got {eps}")
    return math.floor(alpha / eps**2), m, alpha


@dataclass(frozen=True)
class BridgeReport:
    """Expansion of G(C) at set size k against (ell, k-1) zero-error recoverability.

    A k-set whose per-coordinate value sets have size <= ell is the same
    thing as a family of size-ell lists capturing k codewords.
    """

    k: int
    ell: int
    expansion: ExpansionReport
    worst_lists_ell: int
    worst_set_captured: bool
    worst_set_confirmed: bool
    recoverability: ZeroErrorResult
    min_max_column: int
    equivalence_holds: bool
    witness_set: Optional[tuple[int, ...]] = None
    witness_neighborhood: Optional[int] = None
    witness_deficiency_ok: Optional[bool] = None

    @property
    def ok(self) -> bool:
        flags = [self.worst_set_captured, self.worst_set_confirmed, self.equivalence_holds]
        if self.witness_deficiency_ok is not None:
            flags.append(self.witness_deficiency_ok)
        return all(flags)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "ell": self.ell,
            "expansion": self.expansion.to_dict(),
            "worst_lists_ell": self.worst_lists_ell,
            "worst_set_captured": self.worst_set_captured,
            "worst_set_confirmed": self.worst_set_confirmed,
            "recoverability": self.recoverability.to_dict(),
            "min_max_column": self.min_max_column,
            "equivalence_holds": self.equivalence_holds,
            "witness_set": None if self.witness_set is None else list(self.witness_set),
            "witness_neighborhood": self.witness_neighborhood,
            "witness_deficiency_ok": self.witness_deficiency_ok,
            "ok": self.ok,
        }


def zero_error_bridge(code: Code, k: int, ell: int, cap: int = SET_CAP) -> BridgeReport:
    """Cross-check the expander search and the zero-error solver on one code.

    * the worst k-set's value lists capture the whole set, and the solver
      agrees that lists of that size capture more than k-1 codewords;
    * (ell, k-1) recoverability holds iff every k-set has a coordinate
      with more than ell distinct values;
    * a solver witness restricted to k captured codewords has at most
      ell values per coordinate and a neighborhood between the exhaustive
      minimum and what the witness lists allow.
    """
    graph = code_graph(code)
    words = list(dict.fromkeys(graph.codewords))
    graph = BipartiteCodeGraph(tuple(words))
    exp = expansion_exhaustive(graph, k, cap)
    worst = [words[j] for j in exp.worst_set]
    worst_fam = ListFamily.of_values(worst)
    captured = all(worst_fam.contains(w) for w in worst)
    confirmed = not is_zero_error_recoverable(code, worst_fam.ell, k - 1).recoverable

    M = graph.matrix
    min_max = min(int(_column_distinct(M, sets).max(axis=1).min()) for sets in _ksets(len(words), k))
    rec = is_zero_error_recoverable(code, ell, k - 1)
    equivalence = rec.recoverable == (min_max > ell)

    wset = wnb = wok = None
    if not rec.recoverable:
        index = {w: j for j, w in enumerate(words)}
        wset = tuple(sorted(index[w] for w in rec.captured[:k]))
        wnb = len(graph.neighborhood(wset))
        allowed = sum(min(len(A), k) for A in rec.witness)
        cols = _column_distinct(M, np.asarray([wset], dtype=np.int64))[0]
        wok = bool(exp.min_neighborhood <= wnb <= allowed and cols.max() <= ell)
    return BridgeReport(k, ell, exp, worst_fam.ell, captured, confirmed, rec, min_max,
                        equivalence, wset, wnb, wok)
