"""Factor witnesses for the exceptional pairs and an independent factor oracle."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .arith import factorize
from .polygon import monic_linear_constraint_poly
from .polys import AlphaParam, IntPoly, build_psi, fixed_coefficients


class ScopeExceeded(Exception):
    """A search was asked to run beyond its configured scope."""


@dataclass(frozen=True)
class FactorWitness:
    n: int
    alpha: AlphaParam
    coeffs: tuple[int, ...]
    factor: IntPoly
    verified: bool = False

    @property
    def polynomial(self) -> IntPoly:
        return build_psi(self.n, self.alpha, self.coeffs)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": str(self.alpha),
            "factor": self.factor.to_list(),
            "coeffs": [str(c) for c in self.coeffs],
            "verified": self.verified,
        }


def _verified_witness(n, alpha, coeffs, factor) -> FactorWitness:
    if abs(coeffs[0]) != 1 or abs(coeffs[-1]) != 1:
        raise ValueError("witness needs |a_0| = |a_n| = 1")
    ok = build_psi(n, alpha, coeffs).divides(factor)
    if not ok:
        raise AssertionError("constructed witness failed exact division")
    return FactorWitness(n, alpha, tuple(coeffs), factor, True)


def solve_linear_small(weights: Sequence[int], target: int) -> list[int] | None:
    """Integer x with sum x_i * weights[i] = target, or None.

    Variables are fixed one at a time, each taken as the balanced residue
    modulo gcd(previous weights)/gcd(all so far); the variable with the
    largest weight absorbs the remainder.  Zero weights get x_i = 0.
    """
    m = len(weights)
    x = [0] * m
    idx = [i for i in range(m) if weights[i] != 0]
    if not idx:
        return x if target == 0 else None
    # absorber first in the prefix order, processed last
    idx.sort(key=lambda i: abs(weights[i]), reverse=True)
    prefix_g = []
    g = 0
    for i in idx:
        g = math.gcd(g, weights[i])
        prefix_g.append(g)
    if target % prefix_g[-1]:
        return None
    rem = target
    for pos in range(len(idx) - 1, 0, -1):
        i = idx[pos]
        gj, gprev = prefix_g[pos], prefix_g[pos - 1]
        mod = gprev // gj
        if mod == 1:
            continue
        w = weights[i] // gj
        t = (rem // gj) * pow(w, -1, mod) % mod
        if t > mod // 2:
            t -= mod
        x[i] = t
        rem -= t * weights[i]
    first = idx[0]
    q, r = divmod(rem, weights[first])
    assert r == 0
    x[first] = q
    return x


def _sign_pairs(sign_a0, sign_an):
    s0s = (1, -1) if sign_a0 is None else (sign_a0,)
    sns = (1, -1) if sign_an is None else (sign_an,)
    return [(s0, sn) for s0 in s0s for sn in sns]


def linear_coeffs_for_root(n: int, alpha: AlphaParam, root: int, s0: int, sn: int):
    """Coefficients a_j with psi(root) = 0, or None."""
    base = fixed_coefficients(n, alpha)
    B = [c * root**j for j, c in enumerate(base)]
    target = -(s0 * B[0] + sn * B[n])
    sol = solve_linear_small(B[1:n], target)
    if sol is None:
        return None
    return [s0] + sol + [sn]


def linear_witness(
    n: int, alpha: AlphaParam, b: int, sign_a0: int | None = None, sign_an: int | None = None
) -> FactorWitness | None:
    """Coefficients making x + b a factor of psi_n^(alpha)."""
    if b == 0:
        raise ValueError("b must be nonzero")
    for s0, sn in _sign_pairs(sign_a0, sign_an):
        coeffs = linear_coeffs_for_root(n, alpha, -b, s0, sn)
        if coeffs is not None:
            return _verified_witness(n, alpha, coeffs, IntPoly([b, 1]))
    return None


def quadratic_witness(
    n: int, alpha: AlphaParam, q0: int, *, max_n: int = 1024,
    sign_a0: int | None = None, sign_an: int | None = None,
) -> FactorWitness | None:
    """Coefficients making x^2 + q0 a factor of psi_n^(alpha).

    Modulo x^2 + q0 the even and odd powers reduce to the two remainder
    coefficients, so the system splits into two independent equations.
    """
    if q0 == 0:
        raise ValueError("q0 must be nonzero")
    if n > max_n:
        raise ScopeExceeded(f"n={n} exceeds quadratic search scope {max_n}")
    if n < 2:
        return None
    base = fixed_coefficients(n, alpha)
    W = [c * (-q0) ** (j // 2) for j, c in enumerate(base)]
    for s0, sn in _sign_pairs(sign_a0, sign_an):
        coeffs = [0] * (n + 1)
        coeffs[0], coeffs[n] = s0, sn
        ok = True
        for parity in (0, 1):
            free = [j for j in range(parity, n + 1, 2) if j not in (0, n)]
            target = -sum(coeffs[j] * W[j] for j in (0, n) if j % 2 == parity)
            sol = solve_linear_small([W[j] for j in free], target)
            if sol is None:
                ok = False
                break
            for j, v in zip(free, sol):
                coeffs[j] = v
        if ok:
            return _verified_witness(n, alpha, coeffs, IntPoly([q0, 0, 1]))
    return None


def mirror_witness(w: FactorWitness) -> FactorWitness:
    """Witness for the mirrored factor via (-1)^n psi(-x)."""
    if not w.verified:
        raise ValueError("mirror_witness needs a verified witness")
    n = w.n
    coeffs = [c if (n - j) % 2 == 0 else -c for j, c in enumerate(w.coeffs)]
    factor = w.factor.compose_neg()
    if factor.leading < 0:
        factor = -factor
    return _verified_witness(n, w.alpha, coeffs, factor)


# ---------------------------------------------------------------- root search

def _divisors(m: int) -> list[int]:
    fac = factorize(m)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def cauchy_bound(p: IntPoly) -> int:
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) // lead + 1


def _require_unit_lead(p: IntPoly) -> None:
    if p.is_zero() or abs(p.leading) != 1:
        raise ValueError("leading coefficient must be +-1")


def rational_roots(p: IntPoly) -> list[int]:
    """All integer roots of p (|leading| = 1 makes every rational root integral)."""
    _require_unit_lead(p)
    if p[0] == 0:
        raise ValueError("constant term must be nonzero; strip powers of x first")
    bound = cauchy_bound(p)
    roots = []
    for d in _divisors(p[0]):
        if d > bound:
            break
        for r in (d, -d):
            if p(r) == 0:
                roots.append(r)
    return sorted(roots)


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _quartic_quadratic_factors(p: IntPoly) -> list[IntPoly]:
    """Monic quadratic divisors of a monic quartic via the divisor pairs of
    its constant term."""
    _, p1, p2, p3, _ = p.coeffs
    c = p[0]
    found = set()
    for d in _divisors(c):
        for A0 in (d, -d):
            B0 = c // A0
            # x^4+p3x^3+p2x^2+p1x+c = (x^2+A1x+A0)(x^2+B1x+B0)
            # A1+B1 = p3, A0+B0+A1B1 = p2, A0B1+A1B0 = p1
            if B0 != A0:
                num = p1 - A0 * p3
                den = B0 - A0
                if num % den:
                    continue
                cands = [num // den]
            else:
                if p1 != A0 * p3:
                    continue
                # A1 (p3 - A1) = p2 - 2 A0  ->  A1^2 - p3 A1 + (p2 - 2A0) = 0
                disc = p3 * p3 - 4 * (p2 - 2 * A0)
                s = _isqrt_exact(disc)
                if s is None or (p3 + s) % 2:
                    continue
                cands = [(p3 + s) // 2, (p3 - s) // 2]
            for A1 in cands:
                B1 = p3 - A1
                if A0 + B0 + A1 * B1 == p2 and A0 * B1 + A1 * B0 == p1:
                    found.add((A0, A1))
    return [IntPoly([a0, a1, 1]) for a0, a1 in sorted(found)]


def _primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


_FILTER_PRIMES = (1_000_003, 998_244_353)


def _gcd_degree_mod(f: list[int], g: list[int], ell: int) -> int:
    """Degree of gcd(f, g) over F_ell (-1 for the zero polynomial)."""

    def red(a):
        a = [c % ell for c in a]
        while a and a[-1] == 0:
            a.pop()
        return a

    a, b = red(f), red(g)
    while b:
        inv = pow(b[-1], -1, ell)
        while len(a) >= len(b):
            q = a[-1] * inv % ell
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - q * c) % ell
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _int_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (ascending coefficients)
    by the primitive pseudo-remainder sequence."""

    def trim(a):
        while a and a[-1] == 0:
            a.pop()
        return a

    a, b = _primitive(trim(list(f))), _primitive(trim(list(g)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = list(a)
        lb = b[-1]
        while len(r) >= len(b):
            lr = r[-1]
            shift = len(r) - len(b)
            r = [c * lb for c in r]
            for i, c in enumerate(b):
                r[shift + i] -= lr * c
            r = trim(r)
            if not r:
                break
        a, b = b, _primitive(r)
    return a


def _scan_quadratics(p: IntPoly, c0: int, bound: int) -> list[IntPoly]:
    out = []
    for c1 in range(-2 * bound, 2 * bound + 1):
        q = IntPoly([c0, c1, 1])
        if p.divides(q):
            out.append(q)
    return out


def bounded_quadratic_factors(p: IntPoly, *, scan_limit: int = 200_000) -> list[IntPoly]:
    """All monic quadratic divisors of p (|leading| = 1, p(0) != 0)."""
    _require_unit_lead(p)
    if p[0] == 0:
        raise ValueError("constant term must be nonzero")
    if p.leading < 0:
        p = -p
    if p.degree < 2:
        return []
    if p.degree == 2:
        return [p]
    if p.degree == 4:
        return _quartic_quadratic_factors(p)
    bound = cauchy_bound(p)
    found: set[IntPoly] = set()
    m = p.degree
    for d in _divisors(p[0]):
        if d > bound * bound:
            break
        for c0 in (d, -d):
            # roots r, s of x^2 + c1 x + c0 are both roots of p and of x^m p(c0/x)
            rev = [p.coeffs[m - i] * c0 ** (m - i) for i in range(m + 1)]
            # a common quadratic survives reduction mod any prime
            if any(_gcd_degree_mod(list(p.coeffs), rev, ell) < 2 for ell in _FILTER_PRIMES):
                continue
            G = _int_gcd(list(p.coeffs), rev)
            if len(G) < 2:
                continue
            if len(G) == 3 and G[2] == 1:
                q = IntPoly(G)
                if q[0] == c0 and p.divides(q):
                    found.add(q)
                    continue
            # otherwise scan c1 up to the root bound of the common factor
            lim = min(bound, 2 + max(abs(c) for c in G[:-1]) // abs(G[-1]))
            if 4 * lim + 1 > scan_limit:
                raise ScopeExceeded(f"quadratic scan of width {4 * lim + 1} exceeds limit")
            found.update(_scan_quadratics(p, c0, lim))
    return sorted(found, key=lambda q: (q[0], q[1]))


def brute_force_factor_oracle(p: IntPoly, k_max: int) -> dict[int, list[IntPoly]]:
    """Monic factors of degree <= k_max.

    Degrees 1 and 2 come from :func:`rational_roots` and
    :func:`bounded_quadratic_factors`; higher degrees (only for deg p <= 12)
    from combining sympy's irreducible factors.
    """
    _require_unit_lead(p)
    if k_max > p.degree // 2:
        raise ScopeExceeded("k_max must be <= degree/2")
    if k_max >= 3 and p.degree > 12:
        raise ScopeExceeded("degree >= 3 search limited to polynomials of degree <= 12")
    if p.leading < 0:
        p = -p
    shift = 0
    while p[shift] == 0:
        shift += 1
    out: dict[int, list[IntPoly]] = {}
    core = IntPoly(p.coeffs[shift:])
    if k_max >= 1:
        lin = [IntPoly([-r, 1]) for r in rational_roots(core)] if core.degree >= 1 else []
        if shift:
            lin.append(IntPoly([0, 1]))
        out[1] = sorted(set(lin), key=lambda q: q.coeffs)
    if k_max >= 2:
        out[2] = _all_factors_of_degree(p, 2) if shift else bounded_quadratic_factors(core)
    for k in range(3, k_max + 1):
        out[k] = _all_factors_of_degree(p, k)
    return out


def _all_factors_of_degree(p: IntPoly, k: int) -> list[IntPoly]:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Integer(c) * x**j for j, c in enumerate(p.coeffs))
    _, facs = sympy.factor_list(expr, x)
    pieces = []
    for f, e in facs:
        cs = sympy.Poly(f, x).all_coeffs()[::-1]
        q = IntPoly([int(c) for c in cs])
        if q.leading < 0:
            q = -q
        pieces.append((q, e))
    found = set()
    ranges = [range(e + 1) for _, e in pieces]
    for combo in itertools.product(*ranges):
        deg = sum(q.degree * c for (q, _), c in zip(pieces, combo))
        if deg != k:
            continue
        prod = IntPoly([1])
        for (q, _), c in zip(pieces, combo):
            for _ in range(c):
                prod = prod * q
        found.add(prod)
    return sorted(found, key=lambda q: q.coeffs)


# ---------------------------------------------------------------- exclusions

def linear_root_candidates(n: int, alpha: AlphaParam) -> list[int] | None:
    """Nonzero integers b that may still be roots of some admissible psi,
    after restricting nu_p(b) by the monic-linear polygon condition.

    Returns None when the candidate set is too large to enumerate.
    """
    from .polys import build_g

    g = build_g(n, alpha)
    const = g[0]
    fac = factorize(const)
    allowed = {}
    for p, e in fac.items():
        ok = monic_linear_constraint_poly(g, p)
        allowed[p] = sorted(ok) if ok is not None else list(range(e + 1))
    count = math.prod(len(v) for v in allowed.values())
    if count > 200_000:
        return None
    cands = []
    for combo in itertools.product(*allowed.values()):
        b = 1
        for p, e in zip(allowed, combo):
            b *= p**e
        cands.extend((b, -b))
    return sorted(cands, key=lambda v: (abs(v), v))


def linear_root_exclusion(n: int, alpha: AlphaParam):
    """(conclusive, candidates): conclusive when no candidate root admits
    integer coefficients for either sign pattern of (a_0, a_n)."""
    cands = linear_root_candidates(n, alpha)
    if cands is None:
        return False, None
    for r in cands:
        for s0, sn in ((1, 1), (1, -1)):
            if linear_coeffs_for_root(n, alpha, r, s0, sn) is not None:
                return False, cands
    return True, cands


def even_quartic_exclusion(c2: int, c0: int) -> tuple[bool, bool]:
    """For x^4 + a*c2*x^2 + s*c0 with a any integer and s = +-1: whether
    factors of degree 1 and of degree 2 are impossible for every choice.

    A linear factor x - r of an even polynomial brings x + r along, so
    degree-1 exclusion follows from degree-2 exclusion.
    """
    deg2_possible = False
    deg1_possible = False
    for s in (1, -1):
        C = s * c0
        for d in _divisors(c0):
            for A0 in (d, -d):
                B0 = C // A0
                # (x^2 + A0)(x^2 + B0): needs c2 | A0 + B0
                if (A0 + B0) % c2 == 0:
                    deg2_possible = True
                    if _isqrt_exact(-A0) is not None or _isqrt_exact(-B0) is not None:
                        deg1_possible = True
        root = _isqrt_exact(C)
        if root is not None:
            # (x^2 + A1 x + A0)(x^2 - A1 x + A0), A0 = +-root, A1 != 0:
            # a*c2 = 2*A0 - A1^2
            for A0 in (root, -root):
                for t in range(1, abs(c2) + 1):
                    if (2 * A0 - t * t) % c2 == 0:
                        deg2_possible = True
                        break
    return (not deg1_possible, not deg2_possible)


__all__ = [
    "FactorWitness", "ScopeExceeded", "linear_witness", "quadratic_witness",
    "mirror_witness", "rational_roots", "bounded_quadratic_factors",
    "brute_force_factor_oracle", "linear_root_exclusion", "even_quartic_exclusion",
    "solve_linear_small", "linear_root_candidates", "linear_coeffs_for_root", "cauchy_bound",
]
