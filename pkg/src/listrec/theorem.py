"""Johnson bounds and the parameter calculus of the random-puncturing theorem.

Everything that can be compared exactly is held as a Fraction. The one
check involving ``sqrt`` and ``log |C|`` uses floats, with natural
logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from ._util import Rational, as_fraction, fraction_str
from .errors import BadEpsilon, BadParameter, DenominatorNonpositive, RhoTooLarge

Number = Union[Fraction, float, int]


@dataclass(frozen=True)
class JohnsonDecodingBound:
    """Radius ``1 - 1/q - eps`` with nominal list size ``1/eps``.

    The true list bound is O(1/eps) with an unspecified constant;
    ``list_bound`` is only the nominal value.
    """

    radius: Fraction
    list_bound: Fraction
    required_distance: Fraction
    constant_unspecified: bool = True


def johnson_decoding(q: int, n: int, epsilon: Rational) -> JohnsonDecodingBound:
    eps = as_fraction(epsilon)
    if not 0 < eps < 1:
        raise BadEpsilon(f"need 0 < epsilon < 1, got {eps}")
    radius = 1 - Fraction(1, q) - eps
    if radius < 0:
        raise BadEpsilon(f"radius 1 - 1/q - epsilon = {radius} is negative")
    return JohnsonDecodingBound(radius, 1 / eps, n * (1 - Fraction(1, q) - eps * eps))


def johnson_recovery(epsilon: Rational, rho: Rational, ell: int) -> Fraction:
    """Output list size ``ell / ((1 - rho)^2 - eps * ell)`` for relative distance ``1 - eps``.

    Demands ``ell < (1 - rho)^2 / eps`` strictly: at equality the bound is
    infinite and :class:`DenominatorNonpositive` is raised.
    """
    eps, rho = as_fraction(epsilon), as_fraction(rho)
    if eps < 0 or not 0 <= rho < 1 or ell < 1:
        raise BadParameter(f"need eps >= 0, 0 <= rho < 1, ell >= 1 (got {eps}, {rho}, {ell})")
    den = (1 - rho) ** 2 - eps * ell
    if den <= 0:
        raise DenominatorNonpositive(f"(1-rho)^2 - eps*ell = {den} <= 0")
    return Fraction(ell) / den


def johnson_recovery_or_none(epsilon: Rational, rho: Rational, ell: int) -> Optional[Fraction]:
    try:
        return johnson_recovery(epsilon, rho, ell)
    except DenominatorNonpositive:
        return None


@dataclass(frozen=True)
class TheoremParams:
    alpha: Fraction
    rho: Fraction
    gamma: Fraction
    sigma: Fraction
    epsilon: Optional[Fraction] = None
    ell: Optional[int] = None
    m: Optional[int] = None

    @property
    def output_list_size(self) -> Optional[Fraction]:
        """The guaranteed output size ``ell * (1 + alpha)``."""
        return None if self.ell is None else self.ell * (1 + self.alpha)

    def to_dict(self) -> dict:
        fs = lambda x: None if x is None else fraction_str(x)
        return {
            "alpha": fs(self.alpha),
            "rho": fs(self.rho),
            "gamma": fs(self.gamma),
            "sigma": fs(self.sigma),
            "epsilon": fs(self.epsilon),
            "ell": self.ell,
            "m": self.m,
        }


def gamma_of(alpha: Rational, rho: Rational) -> Fraction:
    return (1 + as_fraction(alpha)) * (1 - as_fraction(rho)) ** 2 - 1


def sigma_of(rho: Rational) -> Fraction:
    rho = as_fraction(rho)
    return (1 - rho) / (2 - rho)


def rho_threshold(alpha: Rational) -> float:
    """``1 - (1 + alpha)^(-1/2)``; rho must stay strictly below it."""
    return 1 - (1 + float(as_fraction(alpha))) ** -0.5


def theorem_params(
    alpha: Rational, rho: Rational, epsilon: Optional[Rational] = None, m: Optional[int] = None
) -> TheoremParams:
    """gamma, sigma and (given epsilon) the input list size ``floor(sigma^2 gamma / eps^2)``."""
    alpha, rho = as_fraction(alpha), as_fraction(rho)
    if not 0 < alpha <= 1:
        raise BadParameter(f"need 0 < alpha <= 1, got {alpha}")
    if not 0 <= rho < 1:
        raise BadParameter(f"need 0 <= rho < 1, got {rho}")
    gamma = gamma_of(alpha, rho)
    if gamma <= 0:
        raise RhoTooLarge(f"gamma = {gamma} <= 0: rho = {rho} >= 1 - (1+alpha)^(-1/2)")
    sigma = sigma_of(rho)
    eps = ell = None
    if epsilon is not None:
        eps = as_fraction(epsilon)
        if eps <= 0:
            raise BadEpsilon(f"need epsilon > 0, got {eps}")
        ell = math.floor(sigma**2 * gamma / eps**2)
    return TheoremParams(alpha, rho, gamma, sigma, eps, ell, m)


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: Number
    relation: str
    rhs: Number
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": _num_str(self.lhs),
            "relation": self.relation,
            "rhs": _num_str(self.rhs),
            "satisfied": self.satisfied,
        }


def _num_str(x: Number) -> str:
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _ineq(name: str, lhs, relation: str, rhs) -> Inequality:
    ok = {"<=": lhs <= rhs, "<": lhs < rhs, ">=": lhs >= rhs, ">": lhs > rhs}[relation]
    return Inequality(name, lhs, relation, rhs, bool(ok))


@dataclass(frozen=True)
class HypothesisReport:
    params: TheoremParams
    inequalities: tuple[Inequality, ...]
    failure_probability_bound: Optional[float]
    extras: dict = field(default_factory=dict)

    @property
    def all_satisfied(self) -> bool:
        return all(i.satisfied for i in self.inequalities)

    def __getitem__(self, name: str) -> Inequality:
        for i in self.inequalities:
            if i.name == name:
                return i
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "inequalities": [i.to_dict() for i in self.inequalities],
            "all_satisfied": self.all_satisfied,
            "failure_probability_bound": self.failure_probability_bound,
            "extras": {k: _num_str(v) if isinstance(v, (Fraction, float)) else v for k, v in self.extras.items()},
        }

    def table(self) -> str:
        rows = [(i.name, _num_str(i.lhs), i.relation, _num_str(i.rhs), "pass" if i.satisfied else "FAIL")
                for i in self.inequalities]
        widths = [max(len(r[j]) for r in rows) for j in range(5)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        fp = self.failure_probability_bound
        lines.append(f"failure probability bound: {'n/a' if fp is None else repr(fp)}")
        return "\n".join(lines)


def check_main_theorem(
    q: int, n: int, d: int, ell: int, m: int, alpha: Rational, rho: Rational, code_size: int
) -> HypothesisReport:
    """Evaluate the four hypotheses for a puncturing of size ``m``.

    ``code_size`` may be a huge int (e.g. ``q**(d+1)``); its natural log is
    taken exactly enough by :func:`math.log`. The failure bound
    ``exp(-sigma m / 64)`` is reported only when every hypothesis holds.
    """
    params = theorem_params(alpha, rho, m=m)
    g, s = params.gamma, params.sigma
    log_c = math.log(code_size)
    ineqs = (
        _ineq("d >= n/q", Fraction(d), ">=", Fraction(n, q)),
        _ineq("4/gamma <= ell", 4 / g, "<=", Fraction(ell)),
        _ineq("ell <= sigma*gamma*n/(800*d)", Fraction(ell), "<=", s * g * n / (800 * d)),
        _ineq("sigma*m >= 1280*sqrt(ell/gamma)*log|C|", float(s * m), ">=",
              1280 * math.sqrt(float(ell / g)) * log_c),
        _ineq("m < n", m, "<", n),
    )
    params = TheoremParams(params.alpha, params.rho, g, s, None, ell, m)
    report = HypothesisReport(params, ineqs, None,
                              {"output_list_size": ell * (1 + params.alpha), "log_code_size": log_c})
    if report.all_satisfied:
        report = HypothesisReport(params, ineqs, math.exp(-float(s) * m / 64), report.extras)
    return report


def check_simple_theorem(
    q: int,
    n: int,
    alpha: Rational,
    rho: Rational,
    epsilon: Rational,
    c_constant: Rational = 1,
    code_size: Optional[int] = None,
) -> HypothesisReport:
    """Check the epsilon window and report the implied list size and rate.

    The absolute constant ``c`` in ``epsilon < min(c, gamma sigma / 2)`` is
    not pinned down by the theorem; it is an input defaulting to 1. With
    ``code_size`` the puncture size ``m = ceil(1280 log|C| / eps)``, the
    check ``m < n`` and the resulting rate are added.
    """
    params = theorem_params(alpha, rho, epsilon)
    eps, g, s = params.epsilon, params.gamma, params.sigma
    c = as_fraction(c_constant)
    ineqs = [
        # q^(-1/2) < eps  <=>  1/q < eps^2 for eps > 0, compared exactly
        Inequality("q^(-1/2) < epsilon", q**-0.5, "<", float(eps), Fraction(1, q) < eps * eps),
        _ineq("epsilon < c", eps, "<", c),
        _ineq("epsilon < gamma*sigma/2", eps, "<", g * s / 2),
    ]
    extras: dict = {
        "ell": params.ell,
        "output_list_size": params.ell * (1 + params.alpha),
        "nominal_rate_eps_over_log_q": float(eps) / math.log(q),
        "rate_constant_unspecified": True,
    }
    fail = None
    m = None
    if code_size is not None:
        log_c = math.log(code_size)
        m = math.ceil(1280 * log_c / float(eps))
        ineqs.append(_ineq("m < n", m, "<", n))
        extras["m"] = m
        extras["rate"] = log_c / (m * math.log(q))
    params = TheoremParams(params.alpha, params.rho, g, s, eps, params.ell, m)
    if m is not None and all(i.satisfied for i in ineqs):
        fail = math.exp(-float(s) * m / 64)
    return HypothesisReport(params, tuple(ineqs), fail, extras)
