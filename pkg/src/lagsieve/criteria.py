"""Prime-divisibility irreducibility criteria and Galois-group criteria.

Each ``*_check`` returns a certificate whose conditions can be recomputed
from scratch with :func:`revalidate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import factorize, sieve, val_p
from .polygon import LemmaTag
from .polys import AlphaParam


@dataclass(frozen=True)
class ExclusionCertificate:
    lemma_tag: LemmaTag
    n: int
    alpha: AlphaParam
    k: int
    prime_witness: int
    checked_conditions: tuple[tuple[str, bool], ...]
    excluded_degrees: frozenset[int] = field(default_factory=frozenset)

    @property
    def valid(self) -> bool:
        return all(ok for _, ok in self.checked_conditions)

    @property
    def u0(self) -> Fraction:
        return Fraction(self.alpha.value) / self.k

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma_tag.value,
            "n": self.n,
            "alpha": str(self.alpha),
            "k": self.k,
            "prime": self.prime_witness,
            "excluded_degrees": sorted(self.excluded_degrees),
        }


def _prime_factors_of_product(terms) -> list[int]:
    out: set[int] = set()
    for t in terms:
        if t:
            out.update(factorize(t))
    return sorted(out)


def _vprod(terms, p: int) -> int:
    return sum(val_p(t, p) for t in terms)


# ---------------------------------------------------------------- integer alpha

def glemma_conditions(n: int, alpha: int, k: int, p: int) -> list[tuple[str, bool]]:
    u0 = Fraction(alpha, k)
    top = [(n - k + i) * (alpha + n - k + i) for i in range(1, k + 1)]
    low = [alpha + i for i in range(1, k + 1)]
    return [
        ("p >= k+2", p >= k + 2),
        ("p | prod (n-k+i)(alpha+n-k+i)", any(t % p == 0 for t in top)),
        ("p !| prod (alpha+i)", all(t % p for t in low)),
        (
            "p >= min(2u0, k+u0) or (p > 2k and p^2-p >= alpha)",
            p >= min(2 * u0, k + u0) or (p > 2 * k and p * p - p >= alpha),
        ),
    ]


def glemma_check(n: int, alpha: int, k: int) -> ExclusionCertificate | None:
    """Smallest prime p >= k+2 certifying no factor of degree k."""
    if alpha <= 0 or not 1 <= k <= n // 2:
        raise ValueError("need alpha > 0 and 1 <= k <= n/2")
    cands = _prime_factors_of_product(
        [(n - k + i) * (alpha + n - k + i) for i in range(1, k + 1)]
    )
    for p in cands:
        if p < k + 2:
            continue
        conds = glemma_conditions(n, alpha, k, p)
        if all(ok for _, ok in conds):
            return ExclusionCertificate(
                LemmaTag.GLEMMA, n, AlphaParam(alpha), k, p, tuple(conds), frozenset({k})
            )
    return None


def glemma1_exceptional(n: int, alpha: int, k: int, p: int) -> bool:
    return k == 1 and p == 3 and alpha in (24, 25) and val_p(n, 3) == 1


def glemma1_conditions(n: int, alpha: int, k: int, p: int) -> list[tuple[str, bool]]:
    conds = [
        ("k in {1,2}", k in (1, 2)),
        ("0 < alpha <= 50", 0 < alpha <= 50),
        ("p >= 2k+1", p >= 2 * k + 1),
        ("p | prod (n-k+i)", any((n - k + i) % p == 0 for i in range(1, k + 1))),
    ]
    for j in range(1, k + 1):
        lhs = _vprod([alpha + i for i in range(1, j + 1)], p)
        rhs = _vprod([n - i for i in range(j)], p)
        conds.append((f"nu_p(Delta_{j}) <= nu_p(n...(n-{j - 1}))", lhs <= rhs))
    conds.append(("not the k=1, p=3, alpha in {24,25} exception",
                  not glemma1_exceptional(n, alpha, k, p)))
    return conds


def glemma1_check(n: int, alpha: int, k: int) -> ExclusionCertificate | None:
    if k not in (1, 2) or not 0 < alpha <= 50:
        raise ValueError("need k in {1, 2} and 0 < alpha <= 50")
    if n - k + 1 < 1:
        return None
    for p in _prime_factors_of_product([n - k + i for i in range(1, k + 1)]):
        if p < 2 * k + 1:
            continue
        conds = glemma1_conditions(n, alpha, k, p)
        if all(ok for _, ok in conds):
            return ExclusionCertificate(
                LemmaTag.GLEMMA1, n, AlphaParam(alpha), k, p, tuple(conds), frozenset({k})
            )
    return None


# ---------------------------------------------------------------- alpha = u + 1/2

def half_irred_conditions(u: int, n: int, k: int, p: int) -> list[tuple[str, bool]]:
    top = [(1 + 2 * u + 2 * (n - l)) * (n - l) for l in range(k)]
    low = [1 + 2 * u + 2 * l for l in range(1, k + 1)]
    # p > 1 + sqrt(2(u+1))  <=>  p > 1 and (p-1)^2 > 2(u+1)
    return [
        ("p | prod (1+2u+2(n-l))(n-l)", any(t % p == 0 for t in top)),
        ("p !| prod (1+2u+2l)", all(t % p for t in low)),
        ("p > 2k", p > 2 * k),
        ("p > 1+sqrt(2(u+1))", p > 1 and (p - 1) ** 2 > 2 * (u + 1)),
    ]


def half_irred_check(u: int, n: int, k: int) -> ExclusionCertificate | None:
    """Prime excluding factors of degree 2k-1 and 2k of psi(x^2), alpha = u+1/2.

    When n is odd and k = (n-1)/2 the certificate also excludes degree n.
    """
    if k < 1 or 2 * k > n:
        raise ValueError("need 1 <= k <= n/2")
    cands = _prime_factors_of_product(
        [(1 + 2 * u + 2 * (n - l)) * (n - l) for l in range(k)]
    )
    for p in cands:
        conds = half_irred_conditions(u, n, k, p)
        if all(ok for _, ok in conds):
            degs = {2 * k - 1, 2 * k}
            if n % 2 == 1 and k == (n - 1) // 2:
                degs.add(n)
            return ExclusionCertificate(
                LemmaTag.HALF_IRRED, n, AlphaParam.half(u), k, p, tuple(conds), frozenset(degs)
            )
    return None


def revalidate(cert: ExclusionCertificate) -> bool:
    """Recompute every condition of a certificate from its inputs."""
    n, k, p = cert.n, cert.k, cert.prime_witness
    if cert.lemma_tag is LemmaTag.GLEMMA:
        conds = glemma_conditions(n, cert.alpha.u, k, p)
    elif cert.lemma_tag is LemmaTag.GLEMMA1:
        conds = glemma1_conditions(n, cert.alpha.u, k, p)
    elif cert.lemma_tag is LemmaTag.HALF_IRRED:
        conds = half_irred_conditions(cert.alpha.u, n, k, p)
    else:
        raise ValueError(f"no revalidation for {cert.lemma_tag}")
    return all(ok for _, ok in conds) and tuple(conds) == cert.checked_conditions


# ---------------------------------------------------------------- Galois side

def _script_terms(u: int, n: int) -> list[int]:
    """t_i = 1 + 2(u+i) for i = 1..n (index 0 unused)."""
    return [0] + [1 + 2 * (u + i) for i in range(1, n + 1)]


def hajir_conditions(n: int, u: int, p: int) -> list[tuple[str, bool]]:
    window = 2 * p > n and p < n - 2
    if not window:
        return [("n/2 < p < n-2", False)]
    terms = _script_terms(u, n)
    vals = [0] + [val_p(t, p) for t in terms[1:]]
    # ord_p(c_j) = sum_{i > j} vals[i]
    suffix = [0] * (n + 2)
    for i in range(n, 0, -1):
        suffix[i] = suffix[i + 1] + vals[i]

    def ord_c(j):
        return suffix[j + 1]

    return [
        ("n/2 < p < n-2", True),
        ("ord_p(c_j) >= 0", True),
        ("ord_p(c_0) = 1", ord_c(0) == 1),
        ("ord_p(c_j) >= 1 for j <= n-p", all(ord_c(j) >= 1 for j in range(0, n - p + 1))),
        ("ord_p(c_p) = 0", ord_c(p) == 0),
    ]


def hajir_check(n: int, u: int, p: int) -> bool:
    """Galois group of the script-L polynomial contains A_n (given irreducibility)."""
    return all(ok for _, ok in hajir_conditions(n, u, p))


def lemma_pr_prime_search(u: int, n: int) -> int | None:
    """Smallest prime p in (n/2, n-2) exactly dividing
    prod_{l=n-p+1}^{p} (1+2(u+l)) to the first power."""
    if n <= 1:
        raise ValueError("need n > 1")
    for p in sieve(n).between(n // 2, n - 3):
        if 2 * p <= n:
            continue
        total = 0
        for l in range(n - p + 1, p + 1):
            t = 1 + 2 * (u + l)
            if t % p == 0:
                total += val_p(t, p)
                if total > 1:
                    break
        if total == 1:
            return p
    return None


def galois_large_n_primes(n: int) -> tuple[int, int]:
    """(P1, P2): least and largest primes in the open interval (2n/3, n-2)."""
    ps = [p for p in sieve(n).between((2 * n) // 3, n - 3) if 3 * p > 2 * n]
    if not ps:
        raise ValueError(f"no prime in (2n/3, n-2) for n={n}")
    return ps[0], ps[-1]


def galois_large_n_check(n: int) -> bool:
    p1, p2 = galois_large_n_primes(n)
    return 3 * p2 - p1 > 2 * n


@lru_cache(maxsize=None)
def _odd_mask(m: int) -> int:
    mask = 0
    for q, e in factorize(m).items():
        if e % 2:
            mask |= 1 << q
    return mask


def bsq_scan(u_max: int, n_max: int) -> list[tuple[int, int]]:
    """(u, n) with 1 <= n <= n_max, 1 <= u <= max(u_max, floor(4n/3)) and
    b a rational square.

    Uses running parity masks per u; :func:`lagsieve.polys.square_class_b`
    is the direct route.
    """
    if u_max < 1 or n_max < 1:
        raise ValueError("bounds must be >= 1")
    found = []
    u_top = max(u_max, (4 * n_max) // 3)
    two = _odd_mask(2)
    for u in range(1, u_top + 1):
        odd_acc = 0
        even_acc = 0
        for n in range(1, n_max + 1):
            if n % 2:
                if n >= 3:
                    odd_acc ^= _odd_mask(n)
            else:
                even_acc ^= _odd_mask(2 * u + 1 + 2 * n)
            if u > max(u_max, (4 * n) // 3):
                continue
            mask = odd_acc ^ even_acc
            if n % 4 in (2, 3):
                mask ^= two
            if mask == 0:
                found.append((u, n))
    found.sort(key=lambda t: (t[1], t[0]))
    return found
