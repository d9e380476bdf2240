"""Exact integer kernels: sieving, p-adic valuations, digit sums and
primes in residue classes."""

from __future__ import annotations

import bisect
import math
import threading
from fractions import Fraction
from functools import total_ordering

import gmpy2
import numpy as np


@total_ordering
class _Infinity:
    """Valuation of zero.  Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("lagsieve.INFINITY")


INFINITY = _Infinity()


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def val_p(m: int, p: int) -> int:
    """Exponent of the prime ``p`` in the nonzero integer ``m``.

    >>> val_p(17550, 3)
    3
    """
    _check_prime(p)
    if m == 0:
        raise ValueError("val_p(0) is infinite; use valuation()")
    if p == 2:
        m = abs(m)
        return (m & -m).bit_length() - 1
    return int(gmpy2.remove(m, p)[1])


def _val_unchecked(m: int, p: int):
    """Valuation for a prime the caller has already checked."""
    if m == 0:
        return INFINITY
    if p == 2:
        m = abs(m)
        return (m & -m).bit_length() - 1
    return int(gmpy2.remove(m, p)[1])


def valuation(m: int, p: int):
    """Like :func:`val_p` but returns :data:`INFINITY` for ``m == 0``."""
    if m == 0:
        _check_prime(p)
        return INFINITY
    return val_p(m, p)


def digit_sum(l: int, p: int) -> int:
    if l < 0:
        raise ValueError("digit_sum needs l >= 0")
    s = 0
    while l:
        l, r = divmod(l, p)
        s += r
    return s


def legendre_val_factorial(l: int, p: int) -> int:
    """nu_p(l!) via base-p digit sums."""
    if l < 0:
        raise ValueError("l must be >= 0")
    return (l - digit_sum(l, p)) // (p - 1)


class PrimeSieve:
    """Eratosthenes sieve up to ``limit``; immutable once built."""

    def __init__(self, limit: int):
        self.limit = max(int(limit), 2)
        flags = np.ones(self.limit + 1, dtype=bool)
        flags[:2] = False
        flags[4::2] = False
        for q in range(3, math.isqrt(self.limit) + 1, 2):
            if flags[q]:
                flags[q * q :: 2 * q] = False
        flags.setflags(write=False)
        self._flags = flags
        self.primes = np.flatnonzero(flags).astype(np.int64)
        self.primes.setflags(write=False)
        self._plist = self.primes.tolist()

    def __contains__(self, n: int) -> bool:
        if n > self.limit:
            raise ValueError(f"{n} exceeds sieve limit {self.limit}")
        return n >= 0 and bool(self._flags[n])

    def __iter__(self):
        return iter(self._plist)

    def __len__(self):
        return len(self._plist)

    def between(self, lo: int, hi: int) -> list[int]:
        """Primes p with lo < p <= hi."""
        if hi > self.limit:
            raise ValueError(f"{hi} exceeds sieve limit {self.limit}")
        i = bisect.bisect_right(self._plist, lo)
        j = bisect.bisect_right(self._plist, hi)
        return self._plist[i:j]


_sieve_lock = threading.Lock()
_sieve: PrimeSieve | None = None


def sieve(limit: int) -> PrimeSieve:
    """Shared sieve covering at least ``limit``; grows by doubling."""
    global _sieve
    with _sieve_lock:
        if _sieve is None or _sieve.limit < limit:
            size = 1 << 16
            while size < limit:
                size <<= 1
            _sieve = PrimeSieve(size)
        return _sieve


def primes_up_to(n: int) -> list[int]:
    return sieve(n).between(1, n)


def factorize(m: int) -> dict[int, int]:
    """Trial division over the sieve; fine for products of small shifted terms."""
    m = abs(m)
    if m == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    if m == 1:
        return out
    bound = math.isqrt(m)
    for q in sieve(min(bound, 1 << 22)):
        if q * q > m:
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            out[q] = e
    if m > 1:
        if m > (1 << 44) and not is_prime(m):
            raise ValueError("cofactor too large for trial division")
        out[m] = out.get(m, 0) + 1
    return out


def prime_divisors(m: int) -> list[int]:
    return sorted(factorize(m))


def largest_prime_factor(m: int) -> int:
    """P(m), with the convention P(1) = 1."""
    if m < 1:
        raise ValueError("largest_prime_factor needs m >= 1")
    if m == 1:
        return 1
    return max(factorize(m))


def _floor_mul(x: Fraction, ratio: Fraction) -> int:
    return math.floor(x * ratio)


def primes_in_ap_interval(x, ratio, r: int, q: int) -> list[int]:
    """Primes p = r (mod q) with x < p <= ratio * x, ascending.

    ``x`` and ``ratio`` are taken as exact rationals (strings such as
    ``"1.048"`` are fine).
    """
    x, ratio = Fraction(x), Fraction(ratio)
    if x <= 0 or ratio <= 1:
        raise ValueError("need x > 0 and ratio > 1")
    if math.gcd(r, q) != 1:
        raise ValueError("residue must be coprime to modulus")
    hi = _floor_mul(x, ratio)
    lo = math.floor(x)
    return [p for p in sieve(hi).between(lo, hi) if p % q == r % q]


def residue_class_primes(limit: int, r: int, q: int) -> np.ndarray:
    ps = sieve(limit).primes
    ps = ps[ps <= limit]
    return ps[ps % q == r % q]


def max_gap_in_residue_class(limit: int, r: int, q: int) -> int:
    ps = residue_class_primes(limit, r, q)
    if len(ps) < 2:
        raise ValueError(f"fewer than two primes = {r} mod {q} up to {limit}")
    return int(np.diff(ps).max())


def interval_coverage_failures(
    x_lo: int, x_hi: int, ratio, classes=((1, 1),), *, closed: bool = True
) -> list[int]:
    """Integers x in [x_lo, x_hi] for which some residue class (r, q) has no
    prime p with x < p <= ratio*x (or p < ratio*x when ``closed`` is false).
    """
    ratio = Fraction(ratio)
    num, den = ratio.numerator, ratio.denominator
    if x_lo < 1 or ratio <= 1:
        raise ValueError("need x_lo >= 1 and ratio > 1")
    xs = np.arange(x_lo, x_hi + 1, dtype=np.int64)
    limit = (x_hi * num) // den + 1
    bad = np.zeros(len(xs), dtype=bool)
    for r, q in classes:
        ps = residue_class_primes(limit, r, q)
        idx = np.searchsorted(ps, xs, side="right")
        has = idx < len(ps)
        nxt = np.where(has, ps[np.minimum(idx, len(ps) - 1)], 0)
        if closed:
            ok = has & (nxt * den <= xs * num)
        else:
            ok = has & (nxt * den < xs * num)
        bad |= ~ok
    return [int(x) for x in xs[bad]]
