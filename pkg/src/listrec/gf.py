"""Finite fields F_q, q = p^e, with elements encoded as integers.

An element of F_{p^e} is a polynomial c_0 + c_1 x + ... + c_{e-1} x^{e-1}
over F_p, reduced modulo a monic irreducible ``modulus``. It is stored as
the integer ``sum(c_j * p**j)``, so 0 and 1 are the additive and
multiplicative identities and the prime subfield is ``{0, 1, ..., p-1}``.

>>> F = make_field(2, 2)
>>> F.modulus            # x^2 + x + 1, low degree first
(1, 1, 1)
>>> F.mul(2, 3)          # x * (x + 1) = x^2 + x = 1
1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    InvalidElement,
    NotIrreducible,
    NotPrime,
    OrderOverflow,
)

#: Largest supported field order.
MAX_ORDER = 2**31
#: Extension fields up to this order use log/antilog tables for multiplication.
LOG_TABLE_LIMIT = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------- polynomials over F_p (coefficient lists, low degree first) ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over F_p."""
    r = _trim(list(a))
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for j in range(dm + 1):
            r[shift + j] = (r[shift + j] - lead * m[j]) % p
        _trim(r)
    return r


def _has_root(poly: Sequence[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over F_p.

    Checks for roots, then trial-divides by every monic polynomial of
    degree 2..deg/2. With q = p^deg capped by ``MAX_ORDER`` there are at
    most about sqrt(MAX_ORDER) divisors to try.
    """
    e = len(poly) - 1
    if e < 1 or poly[-1] != 1:
        return False
    if e == 1:
        return True
    if _has_root(poly, p):
        return False
    for k in range(2, e // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if low[0] == 0:
                continue  # divisible by x, already excluded by the root test
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``e`` over F_p.

    Coefficient tuples ``(c_0, ..., c_{e-1}, 1)`` are compared low degree
    first.
    """
    if e == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=e):
        if low[0] == 0:
            continue
        cand = low + (1,)
        if is_irreducible(cand, p):
            return cand
    raise NotIrreducible(f"no irreducible polynomial of degree {e} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^e}. Construct with :func:`make_field`."""

    characteristic: int
    extension_degree: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        p, e = self.characteristic, self.extension_degree
        if not is_prime(p):
            raise NotPrime(p)
        if e < 1:
            raise OrderOverflow(f"extension degree must be >= 1, got {e}")
        if p**e > MAX_ORDER:
            raise OrderOverflow(f"{p}^{e} exceeds {MAX_ORDER}")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != e + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
            raise NotIrreducible(f"modulus {mod} is not monic of degree {e} over F_{p}")
        if e > 1 and not is_irreducible(mod, p):
            raise NotIrreducible(mod)

    # ---------- basic data ----------

    @property
    def order(self) -> int:
        return self.characteristic**self.extension_degree

    q = order

    @property
    def is_prime_field(self) -> bool:
        return self.extension_degree == 1

    def __repr__(self):
        if self.is_prime_field:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.extension_degree}, modulus={self.modulus})"

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise InvalidElement(f"{a!r} is not an element of {self!r}")
        return int(a)

    def elements(self) -> range:
        return range(self.order)

    def subfield_elements(self) -> list[int]:
        """The prime subfield {0, 1, 2*1, ..., (p-1)*1}."""
        p = self.characteristic
        sub = list(range(p))
        for a in sub:
            assert self.pow(a, p) == a, "Frobenius must fix the prime subfield"
        return sub

    def digits(self, a: int) -> list[int]:
        p = self.characteristic
        out = []
        for _ in range(self.extension_degree):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        p = self.characteristic
        acc = 0
        for c in reversed(digits):
            acc = acc * p + (c % p)
        return acc

    def element_str(self, a: int) -> str:
        if self.is_prime_field:
            return str(a)
        terms = []
        for j, c in enumerate(self.digits(a)):
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"

    # ---------- scalar arithmetic ----------

    def add(self, a: int, b: int) -> int:
        p = self.characteristic
        if self.is_prime_field:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        for _ in range(self.extension_degree):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.characteristic
        if self.is_prime_field:
            return (-a) % p
        if p == 2:
            return a
        return self.from_digits([-c for c in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a * b) % self.characteristic
        if a == 0 or b == 0:
            return 0
        if self.order <= LOG_TABLE_LIMIT:
            log = self._tables[1]
            return self._tables[0][log[a] + log[b]]
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        if self.is_prime_field:
            return pow(a, -1, self.characteristic)
        if self.order <= LOG_TABLE_LIMIT:
            exp, log = self._tables
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if self.is_prime_field:
            return pow(a, k, self.characteristic)
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def _poly_mul(self, a: int, b: int) -> int:
        p = self.characteristic
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (len(da) + len(db) - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_poly_mod(prod, self.modulus, p))

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        """(exp, log) tables for an extension field; exp has length 2(q-1)."""
        q = self.order
        factors = _prime_factors(q - 1)

        def pw(a, k):
            r = 1
            while k:
                if k & 1:
                    r = self._poly_mul(r, a)
                a = self._poly_mul(a, a)
                k >>= 1
            return r

        g = next(
            c for c in range(2, q) if all(pw(c, (q - 1) // f) != 1 for f in factors)
        )
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, g)
        exp[q - 1:] = exp[: q - 1]
        return exp, log

    # ---------- vectorized arithmetic on integer arrays ----------

    @cached_property
    def _np_tables(self):
        exp, log = self._tables
        return np.asarray(exp, dtype=np.int64), np.asarray(log, dtype=np.int64)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.characteristic
        if self.is_prime_field:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        scale = 1
        for _ in range(self.extension_degree):
            out += ((a // scale % p + b // scale % p) % p) * scale
            scale *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        p = self.characteristic
        if self.is_prime_field:
            return (-a) % p
        if p == 2:
            return a.copy()
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.extension_degree):
            out += ((-(a // scale % p)) % p) * scale
            scale *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.is_prime_field:
            return (a * b) % self.characteristic
        if self.order > LOG_TABLE_LIMIT:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        exp, log = self._np_tables
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    # ---------- polynomials with coefficients in this field ----------

    def poly_eval(self, coeffs: Sequence[int], x: int) -> int:
        """Horner evaluation of ``sum(coeffs[j] * x**j)``."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = self.add(out[i + j], self.mul(x, y))
        return out


def make_field(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated F_{p^e}.

    Without ``modulus`` an extension field uses :func:`least_irreducible`,
    so repeated calls give identical fields.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if e < 1 or p**e > MAX_ORDER:
        raise OrderOverflow(f"{p}^{e} is outside [p, {MAX_ORDER}]")
    if modulus is None:
        modulus = least_irreducible(p, e)
    return FieldSpec(p, e, tuple(modulus))
