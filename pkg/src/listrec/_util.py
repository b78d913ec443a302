from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction, str, float]


def as_fraction(x: Rational) -> Fraction:
    """Exact rational from an int, Fraction, ``"a/b"`` / decimal string, or float.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"{x} is not finite")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def max_errors(rho: Rational, n: int) -> int:
    """Largest integer e with e <= rho * n, computed exactly."""
    return math.floor(as_fraction(rho) * n)
