"""Smooth numbers, the x + y = z S-unit search and bounded exponential equations."""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .arith import is_prime, largest_prime_factor, val_p

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

# exponent caps used for the 13-smooth x + y = z solutions
SUNIT_CAPS = {2: 12, 3: 7, 5: 5, 7: 4, 11: 3, 13: 3}


def _primes_upto(max_prime: int) -> list[int]:
    if not is_prime(max_prime) or max_prime > 13:
        raise ValueError("max_prime must be a prime <= 13")
    return [p for p in SMALL_PRIMES if p <= max_prime]


def smooth_numbers(max_prime: int, limit: int) -> list[int]:
    """All max_prime-smooth naturals <= limit in increasing order.

    >>> smooth_numbers(5, 30)[-4:]
    [24, 25, 27, 30]
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    primes = _primes_upto(max_prime)
    out = []
    heap = [1]
    seen = {1}
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for p in primes:
            w = v * p
            if w <= limit and w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)
    return out


def _ords(m: int, primes) -> dict[int, int]:
    return {p: val_p(m, p) for p in primes}


@dataclass(frozen=True, order=True)
class SolutionTriple:
    z: int
    x: int
    y: int = field(compare=False)

    def __post_init__(self):
        if not self.valid(13):
            raise ValueError(f"invalid triple {self.x} + {self.y} = {self.z}")

    def valid(self, max_prime: int = 13) -> bool:
        return (
            0 < self.x <= self.y
            and self.x + self.y == self.z
            and math.gcd(self.x, self.y) == 1
            and largest_prime_factor(self.x * self.y * self.z) <= max_prime
        )

    def ords(self) -> dict[int, int]:
        return _ords(self.x * self.y * self.z, SMALL_PRIMES)

    def within_caps(self, caps=SUNIT_CAPS) -> bool:
        o = self.ords()
        return all(o[p] <= c for p, c in caps.items())

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z,
                "ords": {str(p): e for p, e in self.ords().items()}}


def sunit_solutions(max_prime: int, limit: int) -> list[SolutionTriple]:
    """x + y = z with x <= y, gcd(x, y) = 1, xyz max_prime-smooth, z <= limit,
    sorted by (z, x)."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    S = np.array(smooth_numbers(max_prime, limit), dtype=np.int64)
    out = []
    for zi in range(1, len(S)):
        z = int(S[zi])
        xs = S[: np.searchsorted(S, z // 2, side="right")]
        ys = z - xs
        pos = np.searchsorted(S, ys)
        pos[pos >= len(S)] = len(S) - 1
        hit = S[pos] == ys
        for x in xs[hit]:
            x = int(x)
            if math.gcd(x, z) == 1:
                out.append(SolutionTriple(z, x, z - x))
    out.sort()
    return out


def capped_solutions(triples, caps=SUNIT_CAPS) -> list[SolutionTriple]:
    return [t for t in triples if t.within_caps(caps)]


# ---------------------------------------------------------------- equations

@dataclass(frozen=True)
class ExpEquation:
    """lhs_mult * prod p^e_p - rhs_mult * prod q^f_q = target, each
    exponent between 0 and its cap."""

    lhs: dict
    rhs: dict
    target: int
    lhs_mult: int = 1
    rhs_mult: int = 1

    def __post_init__(self):
        for caps in (self.lhs, self.rhs):
            for p, c in caps.items():
                if c < 0:
                    raise ValueError(f"negative cap for {p}")

    def evaluate(self, lhs_exp: dict, rhs_exp: dict) -> int:
        left = self.lhs_mult * math.prod(p**e for p, e in lhs_exp.items())
        right = self.rhs_mult * math.prod(q**f for q, f in rhs_exp.items())
        return left - right


@dataclass(frozen=True)
class ExpSolution:
    lhs: tuple[tuple[int, int], ...]
    rhs: tuple[tuple[int, int], ...]

    def lhs_dict(self) -> dict:
        return dict(self.lhs)

    def rhs_dict(self) -> dict:
        return dict(self.rhs)


def _assignments(caps: dict):
    primes = sorted(caps)
    for combo in itertools.product(*(range(caps[p] + 1) for p in primes)):
        yield dict(zip(primes, combo))


def solve_exp_equation(eq: ExpEquation) -> list[ExpSolution]:
    """Every exponent assignment within the caps satisfying the equation."""
    rhs_values: dict[int, list[dict]] = {}
    for r in _assignments(eq.rhs):
        val = eq.rhs_mult * math.prod(q**f for q, f in r.items())
        rhs_values.setdefault(val, []).append(r)
    out = []
    for l in _assignments(eq.lhs):
        left = eq.lhs_mult * math.prod(p**e for p, e in l.items())
        for r in rhs_values.get(left - eq.target, ()):
            out.append(ExpSolution(tuple(sorted(l.items())), tuple(sorted(r.items()))))
    out.sort(key=lambda s: (s.lhs, s.rhs))
    return out


# the equations arising from the alpha-by-alpha case analysis for linear factors
ALPHA24_EQ = ExpEquation(lhs={3: 7, 5: 5}, rhs={2: 12}, target=1)
ALPHA24_EQ_FIVE = ExpEquation(lhs={3: 7}, rhs={2: 12}, target=1, rhs_mult=5)
ALPHA26_EQ = ExpEquation(lhs={5: 5}, rhs={2: 12, 3: 2}, target=13)
ALPHA44_EQ = ExpEquation(lhs={5: 5, 7: 4}, rhs={2: 12}, target=11, rhs_mult=3)
ALPHA48_EQ = ExpEquation(lhs={5: 5}, rhs={2: 12}, target=3, rhs_mult=7)
ALPHA49_EQ = ExpEquation(lhs={3: 7}, rhs={2: 12}, target=49, rhs_mult=5)


def alpha24_equation_n_values() -> set[int]:
    """n = 3 * 2^(c+3) for each solution of 3^a 5^b - 2^c = 1 (the branch
    n = 2^k * 3 with 2^3 || n + 24)."""
    return {3 * 2 ** (dict(s.rhs)[2] + 3) for s in solve_exp_equation(ALPHA24_EQ)}


def alpha24_five_n_values() -> set[int]:
    """n = 15 * 2^(c+3) for each solution of 3^a - 5 * 2^c = 1."""
    return {15 * 2 ** (dict(s.rhs)[2] + 3) for s in solve_exp_equation(ALPHA24_EQ_FIVE)}


def alpha24_system_n_values(two_cap: int = 15) -> set[int]:
    """All n = 2^a * 3 * 5^g (g <= 1, a <= two_cap) with n + 24 5-smooth."""
    out = set()
    for a in range(two_cap + 1):
        for g in (0, 1):
            n = 2**a * 3 * 5**g
            if largest_prime_factor(n + 24) <= 5:
                out.add(n)
    return out


def alpha44_n_values() -> set[int]:
    return {3 * 2 ** (dict(s.rhs)[2] + 2) for s in solve_exp_equation(ALPHA44_EQ)}


def s_m_set(M: int, limit: int) -> set[int]:
    """{n <= limit : P(n(n+1)) <= M}."""
    if M < 2:
        raise ValueError("M must be >= 2")
    if limit < 1:
        return set()
    size = limit + 2
    # largest prime factor sieve
    lpf = np.ones(size, dtype=np.int64)
    for p in range(2, size):
        if lpf[p] == 1:
            lpf[p::p] = p
    smooth = lpf <= M
    ns = np.nonzero(smooth[1:limit + 1] & smooth[2:limit + 2])[0] + 1
    return {int(n) for n in ns}


__all__ = [
    "smooth_numbers", "SolutionTriple", "sunit_solutions", "capped_solutions",
    "ExpEquation", "ExpSolution", "solve_exp_equation", "s_m_set",
    "alpha24_equation_n_values", "alpha24_five_n_values", "alpha24_system_n_values",
    "alpha44_n_values", "ALPHA24_EQ", "ALPHA26_EQ", "ALPHA44_EQ", "ALPHA48_EQ",
    "ALPHA49_EQ", "SUNIT_CAPS",
]
