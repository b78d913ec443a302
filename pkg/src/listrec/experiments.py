"""Witness statistics, hypergeometric tails and the random-puncturing harness."""

from __future__ import annotations

import csv
import hashlib
import io
import itertools
import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ._util import as_fraction, fraction_str
from .adversarial import sumset_lists_for_points
from .code import (
    Code,
    Codeword,
    PunctureMap,
    ReedSolomonCode,
    min_distance,
    random_puncture,
)
from .errors import AlphaOutOfRange, BadParameter, CapExceeded, ListRecError
from .listrecovery import ListFamily, recover
from .theorem import check_main_theorem, johnson_recovery_or_none

FORMAT_VERSION = 1


# ---------- the witness statistic ----------

@dataclass(frozen=True)
class WitnessSet:
    members: tuple[Codeword, ...]
    agreement_coords: frozenset[int]


def agreement_set(members: Sequence[Sequence[int]]) -> WitnessSet:
    """Coordinates where at least two of ``members`` agree."""
    words = tuple(dict.fromkeys(tuple(w) for w in members))
    if len({len(w) for w in words}) > 1:
        raise BadParameter("members must share one length")
    coords = set()
    for c1, c2 in itertools.combinations(words, 2):
        coords.update(i for i, (a, b) in enumerate(zip(c1, c2)) if a == b)
    return WitnessSet(words, frozenset(coords))


@dataclass(frozen=True)
class WitnessBound:
    lhs: int
    rhs: Fraction
    passed: bool
    strict_rhs: int
    strict_passed: bool
    distance_verified: bool
    d_at_least_n_over_q: bool


def witness_bound_check(code: Code, witness: WitnessSet, d: Optional[int] = None) -> WitnessBound:
    """``|T(C')| <= (n/q + d) * C(|C'|, 2)`` and the cruder ``< d |C'|^2``.

    Valid whenever the code has distance at least ``n - n/q - d``. For a
    Reed-Solomon code ``d`` defaults to its degree (distance n - d). For an
    explicit code the distance is computed when feasible; otherwise
    ``distance_verified`` is False and the check is still reported.
    """
    n, q = code.n, code.field.order
    if d is None:
        if not isinstance(code, ReedSolomonCode):
            raise BadParameter("d is required for explicit codes")
        d = code.degree
    try:
        dist = min_distance(code)
        verified = dist >= n - Fraction(n, q) - d
    except CapExceeded:
        verified = False
    k = len(witness.members)
    lhs = len(witness.agreement_coords)
    rhs = (Fraction(n, q) + d) * math.comb(k, 2)
    strict = d * k * k
    return WitnessBound(lhs, rhs, lhs <= rhs, strict, lhs < strict, verified, d >= Fraction(n, q))


# ---------- hypergeometric tail ----------

def hypergeometric_tail(mu: float, alpha: float) -> float:
    """Upper bound ``exp(-alpha mu / 4)`` on ``P(X >= (1 + alpha) mu)``, valid for alpha >= 1."""
    if alpha < 1:
        raise AlphaOutOfRange(f"the tail bound needs alpha >= 1, got {alpha}")
    if mu <= 0:
        raise BadParameter(f"need mu > 0, got {mu}")
    return math.exp(-alpha * mu / 4)


def hypergeometric_samples(n: int, K: int, m: int, trials: int, seed) -> np.ndarray:
    """``|S cap [K]|`` for ``trials`` uniform m-subsets S of [n]."""
    if not (0 <= K <= n and 0 <= m <= n and trials >= 1):
        raise BadParameter(f"need 0 <= K, m <= n and trials >= 1 (n={n}, K={K}, m={m})")
    if m == 0 or K == 0:
        return np.zeros(trials, dtype=np.int64)
    if m == n:
        return np.full(trials, K, dtype=np.int64)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    out = np.empty(trials, dtype=np.int64)
    chunk = max(1, 2**22 // n)
    for start in range(0, trials, chunk):
        rows = min(chunk, trials - start)
        # the m smallest of n iid uniforms index a uniform m-subset
        subset = np.argpartition(rng.random((rows, n)), m - 1, axis=1)[:, :m]
        out[start : start + rows] = (subset < K).sum(axis=1)
    return out


def hypergeometric_empirical(n: int, K: int, m: int, threshold: float, trials: int, seed) -> float:
    """Empirical ``P(X >= threshold)`` from seeded m-subset sampling."""
    X = hypergeometric_samples(n, K, m, trials, seed)
    return float((X >= threshold).mean())


# ---------- the puncturing harness ----------

LIST_MODES = ("random", "gr06", "sumset", "file")


@dataclass(frozen=True)
class ExperimentConfig:
    code: Code
    m: int
    trials: int = 1
    seed: int = 0
    alpha: Fraction = Fraction(1)
    rho: Fraction = Fraction(0)
    epsilon: Optional[Fraction] = None
    lists: str = "random"
    ell: Optional[int] = None
    t: int = 2
    list_family: Optional[ListFamily] = None
    output: Optional[str] = None
    format: str = "json"
    timing: bool = False

    def __post_init__(self):
        for name in ("alpha", "rho"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.epsilon is not None:
            object.__setattr__(self, "epsilon", as_fraction(self.epsilon))
        if self.trials < 1:
            raise BadParameter("trials must be >= 1")
        if not 1 <= self.m <= self.code.n:
            raise BadParameter(f"need 1 <= m <= n = {self.code.n}")
        if self.lists not in LIST_MODES:
            raise BadParameter(f"list mode must be one of {LIST_MODES}, got {self.lists!r}")
        if self.lists == "random" and not self.ell:
            raise BadParameter("random lists need ell")
        if self.lists == "file" and (self.list_family is None or len(self.list_family) != self.code.n):
            raise BadParameter("file lists need one list per coordinate of the full code")
        if self.format not in ("json", "csv"):
            raise BadParameter(f"format must be json or csv, got {self.format!r}")

    def describe(self) -> dict:
        code = self.code
        desc = {
            "field": f"{code.field.characteristic}^{code.field.extension_degree}",
            "kind": "rs" if isinstance(code, ReedSolomonCode) else "explicit",
            "n": code.n,
            "m": self.m,
            "trials": self.trials,
            "seed": self.seed,
            "alpha": fraction_str(self.alpha),
            "rho": fraction_str(self.rho),
            "epsilon": None if self.epsilon is None else fraction_str(self.epsilon),
            "lists": self.lists,
            "ell": self.ell,
            "t": self.t if self.lists == "sumset" else None,
        }
        if isinstance(code, ReedSolomonCode):
            desc["degree"] = code.degree
        else:
            desc["size"] = code.size
        return desc


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    kept: tuple[int, ...]
    list_digest: str
    ell: int
    count: int
    johnson_prediction: Optional[Fraction]
    theorem_prediction: Fraction
    wall_time: float = field(default=0.0, compare=False)

    @property
    def exceeds_theorem(self) -> bool:
        return self.count > self.theorem_prediction

    @property
    def exceeds_johnson(self) -> Optional[bool]:
        return None if self.johnson_prediction is None else self.count > self.johnson_prediction

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "trial": self.trial,
            "kept": [i + 1 for i in self.kept],
            "list_digest": self.list_digest,
            "ell": self.ell,
            "count": self.count,
            "theorem_prediction": fraction_str(self.theorem_prediction),
            "johnson_prediction": None if self.johnson_prediction is None else fraction_str(self.johnson_prediction),
            "exceeds_theorem": self.exceeds_theorem,
            "exceeds_johnson": self.exceeds_johnson,
        }
        if timing:
            d["wall_time"] = self.wall_time
        return d


CSV_COLUMNS = (
    "trial", "kept", "list_digest", "ell", "count", "theorem_prediction",
    "johnson_prediction", "exceeds_theorem", "exceeds_johnson",
)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list[TrialRecord]
    summary: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "format": "listrec-experiment",
            "version": FORMAT_VERSION,
            "config": self.config.describe(),
            "trials": [r.to_dict(self.config.timing) for r in self.records],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# listrec-experiment v{FORMAT_VERSION}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            d = r.to_dict()
            d["kept"] = " ".join(map(str, d["kept"]))
            w.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
        return buf.getvalue()

    def write(self, path: Optional[str] = None, fmt: Optional[str] = None) -> str:
        fmt = fmt or self.config.format
        text = self.to_json() if fmt == "json" else self.to_csv()
        path = path or self.config.output
        if path:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        return text


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, derived from (master seed, trial index)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def list_digest(fam: ListFamily) -> str:
    text = ";".join(",".join(map(str, A)) for A in fam.as_sorted())
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _trial_lists(cfg: ExperimentConfig, pmap: PunctureMap, punctured: Code, rng) -> ListFamily:
    F = cfg.code.field
    if cfg.lists == "random":
        return ListFamily.random(F, pmap.m, cfg.ell, rng)
    if cfg.lists == "gr06":
        return ListFamily.constant(F.subfield_elements(), pmap.m)
    if cfg.lists == "file":
        return cfg.list_family.restrict(pmap)
    if not isinstance(punctured, ReedSolomonCode) or pmap.m < 3:
        raise BadParameter("sumset lists need a Reed-Solomon code punctured to m >= 3")
    return sumset_lists_for_points(F, punctured.eval_points, cfg.t)


def _johnson(punctured: Code, rho: Fraction, ell: int) -> Optional[Fraction]:
    try:
        dist = min_distance(punctured)
    except CapExceeded:
        return None
    eps = 1 - Fraction(dist, punctured.n)
    return johnson_recovery_or_none(eps, rho, ell)


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Puncture, build lists, solve exactly; one record per trial.

    Output depends only on the configuration: each trial draws from its
    own generator seeded by (seed, trial index). Wall times are kept on
    the records but written out only when ``cfg.timing`` is set.
    """
    records = []
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        start = time.perf_counter()
        pmap, punctured = random_puncture(cfg.code, cfg.m, rng)
        fam = _trial_lists(cfg, pmap, punctured, rng)
        res = recover(punctured, fam, cfg.rho)
        # puncturing does not dedupe explicit codes; count original codewords
        count = res.raw_count if res.raw_count is not None else res.count
        records.append(TrialRecord(
            trial=trial,
            kept=pmap.kept,
            list_digest=list_digest(fam),
            ell=fam.ell,
            count=count,
            johnson_prediction=_johnson(punctured, cfg.rho, fam.ell),
            theorem_prediction=fam.ell * (1 + cfg.alpha),
            wall_time=time.perf_counter() - start,
        ))
    return ExperimentResult(cfg, records, summarize(cfg, records))


def summarize(cfg: ExperimentConfig, records: Sequence[TrialRecord]) -> dict:
    counts = [r.count for r in records]
    with_j = [r for r in records if r.johnson_prediction is not None]
    summary = {
        "trials": len(records),
        "max_count": max(counts),
        "min_count": min(counts),
        "mean_count": repr(sum(counts) / len(counts)),
        "fraction_exceeding_theorem": repr(sum(r.exceeds_theorem for r in records) / len(records)),
        "johnson_defined_trials": len(with_j),
        "fraction_exceeding_johnson": (
            repr(sum(bool(r.exceeds_johnson) for r in with_j) / len(with_j)) if with_j else None
        ),
        "hypotheses": None,
    }
    code = cfg.code
    if isinstance(code, ReedSolomonCode) and code.degree >= 1:
        ell = max(r.ell for r in records)
        try:
            report = check_main_theorem(code.field.order, code.n, code.degree, ell, cfg.m,
                                        cfg.alpha, cfg.rho, code.size)
            summary["hypotheses"] = {
                "all_satisfied": report.all_satisfied,
                "failed": [i.name for i in report.inequalities if not i.satisfied],
            }
        except ListRecError as exc:  # parameters outside the theorem's range are data here
            summary["hypotheses"] = {"error": f"{type(exc).__name__}: {exc}"}
    return summary
