"""Arithmetic in GF(2^m) with bit-pattern elements.

An element is an int in [0, 2^m); bit k is the coefficient of x^k in the
polynomial basis determined by the reduction polynomial.  The default
reduction polynomial for each degree is the lowest irreducible when read
as an integer bitmask, overridable per field or process-wide through the
``VBF_DEFAULT_POLY_TABLE`` environment variable (a JSON file mapping the
degree, as a string, to a polynomial bitmask).
"""

from __future__ import annotations

import json
import os
from functools import lru_cache

import numpy as np

_MIN_DEGREE = 2
_MAX_DEGREE = 32
_TABLE_LIMIT = 24  # largest m for which we will materialize 2^m-entry tables


# ---------------------------------------------------------------- GF(2)[x]

def _poly_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod(a: int, p: int) -> int:
    dp = p.bit_length()
    da = a.bit_length()
    while da >= dp:
        a ^= p << (da - dp)
        da = a.bit_length()
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def is_irreducible(p: int) -> bool:
    """True iff p is an irreducible polynomial over GF(2).

    Checks that x^(2^k) - x is coprime with p for every k below the degree
    and that x^(2^m) = x holds modulo p; any proper factor of p would have
    degree below m and hence divide one of the x^(2^k) - x.
    """
    m = p.bit_length() - 1
    if m < 1:
        return False
    if m == 1:
        return True  # x and x+1
    t = 2  # the polynomial x
    for _ in range(1, m):
        t = _poly_mod(_poly_mul(t, t), p)
        if _poly_gcd(t ^ 2, p) != 1:
            return False
    t = _poly_mod(_poly_mul(t, t), p)
    return t == 2


@lru_cache(maxsize=None)
def _scan_lowest_irreducible(m: int) -> int:
    for p in range((1 << m) + 1, 1 << (m + 1), 2):
        if is_irreducible(p):
            return p
    raise AssertionError(f"no irreducible of degree {m}")  # unreachable


def default_poly(m: int) -> int:
    """The reduction polynomial used when none is given: the lowest-valued
    irreducible bitmask of degree m, unless the JSON table named by
    VBF_DEFAULT_POLY_TABLE supplies an entry for this degree."""
    if not _MIN_DEGREE <= m <= _MAX_DEGREE:
        raise ValueError(f"field degree must be in [{_MIN_DEGREE}, {_MAX_DEGREE}], got {m}")
    path = os.environ.get("VBF_DEFAULT_POLY_TABLE")
    if path:
        with open(path) as fh:
            table = json.load(fh)
        entry = table.get(str(m))
        if entry is not None:
            return entry if isinstance(entry, int) else int(entry, 0)
    return _scan_lowest_irreducible(m)


def _factorize(n: int) -> list[int]:
    """Distinct prime factors by trial division (n < 2^32 here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------- the field

class Field:
    """GF(2^m) under a fixed irreducible reduction polynomial."""

    def __init__(self, m: int, poly: int | None = None):
        if not _MIN_DEGREE <= m <= _MAX_DEGREE:
            raise ValueError(f"field degree must be in [{_MIN_DEGREE}, {_MAX_DEGREE}], got {m}")
        if poly is None:
            poly = default_poly(m)
        if poly.bit_length() - 1 != m:
            raise ValueError(f"reduction polynomial 0x{poly:x} does not have degree {m}")
        if not is_irreducible(poly):
            raise ValueError(f"reduction polynomial 0x{poly:x} is reducible")
        self.m = m
        self.poly = poly
        self.size = 1 << m
        self.order = self.size - 1  # multiplicative group order
        self._generator: int | None = None
        self._trace_mask: int | None = None
        self._log: np.ndarray | None = None
        self._exp: np.ndarray | None = None
        self._trace_tab: np.ndarray | None = None

    # -- scalar arithmetic ------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        p, m = self.poly, self.m
        top = 1 << m
        r = 0
        while y:
            if y & 1:
                r ^= x
            x <<= 1
            if x & top:
                x ^= p
            y >>= 1
        return r

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv() or inverse_exponent()")
        if e == 0:
            return 1
        if x == 0:
            return 0
        e %= self.order
        if e == 0:
            return 1
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(x, self.order - 1)

    @property
    def generator(self) -> int:
        if self._generator is None:
            primes = _factorize(self.order)
            g = 2
            while True:
                if all(self.pow(g, self.order // q) != 1 for q in primes):
                    self._generator = g
                    break
                g += 1
        return self._generator

    # -- traces -----------------------------------------------------------

    def _basis_trace_mask(self) -> int:
        if self._trace_mask is None:
            mask = 0
            for k in range(self.m):
                e = 1 << k
                t = e
                acc = e
                for _ in range(self.m - 1):
                    t = self.mul(t, t)
                    acc ^= t
                mask |= acc << k  # acc is 0 or 1
            self._trace_mask = mask
        return self._trace_mask

    def trace(self, x: int) -> int:
        """Absolute trace GF(2^m) -> GF(2)."""
        return (x & self._basis_trace_mask()).bit_count() & 1

    def subfield_trace(self, x: int, n: int) -> int:
        """Relative trace onto the subfield GF(2^n), n | m: the sum of the
        orbit of x under the n-th Frobenius power."""
        if n < 1 or self.m % n != 0:
            raise ValueError(f"{n} does not divide the field degree {self.m}")
        t = x
        acc = x
        for _ in range(self.m // n - 1):
            for _ in range(n):
                t = self.mul(t, t)
            acc ^= t
        return acc

    # -- exponent arithmetic ----------------------------------------------

    def inverse_exponent(self, e: int) -> int:
        """d with e*d = 1 (mod 2^m - 1), so x -> x^d undoes x -> x^e."""
        try:
            return pow(e, -1, self.order)
        except ValueError:
            raise ValueError(
                f"exponent {e} shares a factor with 2^{self.m}-1 = {self.order}"
            ) from None

    # -- vectorized arithmetic --------------------------------------------

    def _logexp(self) -> tuple[np.ndarray, np.ndarray]:
        if self._log is None:
            if self.m > _TABLE_LIMIT:
                raise ValueError(f"log/exp tables would need 2^{self.m} entries; m > {_TABLE_LIMIT} is evaluation-only")
            g = self.generator
            exp = np.empty(self.order, dtype=np.uint32)
            log = np.zeros(self.size, dtype=np.int64)
            acc = 1
            for i in range(self.order):
                exp[i] = acc
                log[acc] = i
                acc = self.mul(acc, g)
            self._log, self._exp = log, exp
        return self._log, self._exp

    def mul_many(self, x, y) -> np.ndarray:
        log, exp = self._logexp()
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        nz = (x != 0) & (y != 0)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.uint32)
        idx = (log[x] + log[y]) % self.order
        np.copyto(out, exp[idx], where=nz)
        return out

    def pow_many(self, x, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if e == 0:
            return np.ones(x.shape, dtype=np.uint32)
        log, exp = self._logexp()
        nz = x != 0
        out = np.zeros(x.shape, dtype=np.uint32)
        idx = (log[x] * (e % self.order)) % self.order
        np.copyto(out, exp[idx], where=nz)
        return out

    def inv_many(self, x) -> np.ndarray:
        return self.pow_many(x, self.order - 1)

    def trace_table(self) -> np.ndarray:
        """uint8 array t with t[x] = trace(x)."""
        if self._trace_tab is None:
            if self.m > _TABLE_LIMIT:
                raise ValueError(f"trace table would need 2^{self.m} entries; m > {_TABLE_LIMIT} is evaluation-only")
            mask = self._basis_trace_mask()
            xs = np.arange(self.size, dtype=np.uint32)
            self._trace_tab = (np.bitwise_count(xs & np.uint32(mask)) & 1).astype(np.uint8)
        return self._trace_tab

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self) -> int:
        return hash((Field, self.m, self.poly))

    def __repr__(self) -> str:
        return f"Field(m={self.m}, poly=0x{self.poly:x})"
