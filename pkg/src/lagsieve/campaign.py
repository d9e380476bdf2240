"""Sweeps over (n, alpha) ranges and the reports they produce."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .arith import max_gap_in_residue_class, sieve
from .criteria import (
    galois_large_n_check,
    glemma1_check,
    glemma_check,
    lemma_pr_prime_search,
    bsq_scan,
)
from .polygon import (
    LemmaTag,
    cached_g,
    constant_primes,
    dumas_exclusion_poly,
    newton_polygon,
    rightmost_slope,
)
from .polys import AlphaParam, IntPoly, build_psi, laguerre_reference, substitute_square
from .tables import (
    HALF_HIGH_DEGREE_EXCEPTIONS,
    OMEGA,
    OMEGA1,
    OMEGA1_DEGREE4,
    OMEGA_QUADRATIC,
    T0,
    TABLE1,
    TABLE1_QUADRATIC,
    TABLE2,
    TABLE2_UNRESOLVED,
    in_T,
    t_applies,
)
from .witness import (
    ScopeExceeded,
    bounded_quadratic_factors,
    even_quartic_exclusion,
    linear_root_exclusion,
    linear_witness,
    mirror_witness,
    quadratic_witness,
    rational_roots,
)

SCHEMA = "lagsieve/1"
THEOREM1_K_CAP = 25


@dataclass
class SweepReport:
    theorem_tag: str
    domain: dict
    verdicts: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self, full: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "theorem": self.theorem_tag,
            "domain": self.domain,
            "summary": self.summary,
            "mismatches": self.mismatches,
            "notes": self.notes,
        }
        if full:
            out["verdicts"] = self.verdicts
        else:
            out["flagged"] = [v for v in self.verdicts if v.get("status") != "irreducible"]
        return out

    def to_json(self, full: bool = True) -> str:
        return json.dumps(self.to_dict(full), sort_keys=True, indent=1, default=str)


def _runs(per_degree: dict[int, tuple]) -> list[dict]:
    """Merge consecutive degrees carrying the same certificate."""
    out: list[dict] = []
    for d in sorted(per_degree):
        cert = per_degree[d]
        if out and out[-1]["hi"] == d - 1 and out[-1]["cert"] == list(cert):
            out[-1]["hi"] = d
        else:
            out.append({"lo": d, "hi": d, "cert": list(cert)})
    return out


def _count(summary: dict, tag: str) -> None:
    summary[tag] = summary.get(tag, 0) + 1


def filaseta_window(g: IntPoly, p: int) -> tuple[int, int] | None:
    """Degrees (lo, hi) that prime p excludes through Filaseta's criterion
    with l = k - 1, or None."""
    m = g.degree
    if g[m] % p == 0:
        return None
    cs = g.coeffs
    j0 = next(j for j in range(m + 1) if cs[j] % p)
    lo = max(m - j0, 0) + 1
    if lo > m // 2:
        return None
    slope = rightmost_slope(g, p)
    if slope <= 0:
        return None
    hi = min(m // 2, math.ceil(1 / slope) - 1)
    return (lo, hi) if lo <= hi else None


class _LazyWindows:
    """Filaseta windows per prime, computed on first use."""

    def __init__(self, g: IntPoly, primes: list[int]):
        self._g, self._primes, self._done = g, primes, None

    def __iter__(self):
        if self._done is None:
            self._done = []
            for p in self._primes:
                w = filaseta_window(self._g, p)
                if w:
                    self._done.append((p, w))
        return iter(self._done)


# ---------------------------------------------------------------- Theorem 1

def _theorem1_pair(n: int, alpha: int, summary: dict) -> tuple[dict, list[int]]:
    A = AlphaParam(alpha)
    g = cached_g(n, A)
    primes = constant_primes(n, A)
    windows = _LazyWindows(g, primes)
    per_degree: dict[int, tuple] = {}
    open_degrees: list[int] = []
    for k in range(1, min(n // 2, THEOREM1_K_CAP) + 1):
        cert = None
        c = glemma_check(n, alpha, k)
        if c:
            cert = (LemmaTag.GLEMMA.value, c.prime_witness)
        if cert is None and k <= 2:
            c = glemma1_check(n, alpha, k)
            if c:
                cert = (LemmaTag.GLEMMA1.value, c.prime_witness)
        if cert is None:
            for p, (lo, hi) in windows:
                if lo <= k <= hi:
                    cert = (LemmaTag.FILASETA.value, p)
                    break
        if cert is None:
            for p in primes:
                if dumas_exclusion_poly(g, p, k).conclusive:
                    cert = (LemmaTag.DUMAS_ALL.value, p)
                    break
        if cert is None and k == 1 and (n, alpha) not in OMEGA:
            ok, _ = linear_root_exclusion(n, A)
            if ok:
                cert = (LemmaTag.LINEAR_ROOTS.value, None)
        if cert is None and k >= 2 and t_applies(alpha, k) and not in_T(n, alpha, k):
            cert = (LemmaTag.CITED_T.value, None)
        if cert is None:
            open_degrees.append(k)
            _count(summary, "open")
        else:
            per_degree[k] = cert
            _count(summary, cert[0])
    return {
        "n": n, "alpha": alpha,
        "status": "flagged" if open_degrees else "irreducible",
        "open_degrees": open_degrees,
        "certificates": _runs(per_degree),
    }, open_degrees


def theorem1_expected(n_max: int, alphas=range(11, 51)) -> set[tuple[int, int, int]]:
    exp = {(n, a, 1) for n, a in OMEGA if n <= n_max and a in alphas}
    exp |= {(n, a, 2) for n, a in OMEGA_QUADRATIC if n <= n_max and a in alphas}
    return exp


def verify_theorem1(n_max: int = 130, alphas=range(11, 51), n_min: int = 2) -> SweepReport:
    """Run the exclusion cascade over 11 <= alpha <= 50, n_min <= n <= n_max."""
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    alphas = range(alphas.start, alphas.stop) if isinstance(alphas, range) else alphas
    report = SweepReport(
        "theorem1",
        {"n": [n_min, n_max], "alpha": [min(alphas), max(alphas)], "k_cap": THEOREM1_K_CAP},
    )
    flagged = set()
    for n in range(n_min, n_max + 1):
        for alpha in alphas:
            verdict, open_deg = _theorem1_pair(n, alpha, report.summary)
            report.verdicts.append(verdict)
            flagged.update((n, alpha, k) for k in open_deg)
    expected = theorem1_expected(n_max, alphas)
    _mismatch(report, flagged, expected, ("n", "alpha", "k"))
    return report


def _mismatch(report: SweepReport, flagged: set, expected: set, keys) -> None:
    for t in sorted(flagged - expected):
        report.mismatches.append({"kind": "unexpected-flag", **dict(zip(keys, t))})
    for t in sorted(expected - flagged):
        report.mismatches.append({"kind": "expected-flag-excluded", **dict(zip(keys, t))})
    report.summary["flagged"] = len(flagged)
    report.summary["pairs"] = len(report.verdicts)
    report.summary["cited"] = sum(
        v for k, v in report.summary.items() if isinstance(k, str) and k.startswith("cited")
    )


def power_of_two_single_edge(r_values=range(6, 12), alphas=range(11, 51)) -> list[tuple[int, int]]:
    """(n, alpha) with n = 2^r whose 2-adic polygon is not the single edge
    (0,0)-(n, n-1)."""
    bad = []
    for r in r_values:
        n = 1 << r
        for alpha in alphas:
            np_ = newton_polygon(cached_g(n, AlphaParam(alpha)), 2)
            if list(np_.vertices) != [(0, 0), (n, n - 1)]:
                bad.append((n, alpha))
    return bad


# ---------------------------------------------------------------- Theorem 2

def half_irred_primes(u: int, n: int) -> dict[int, int]:
    """For each k in [1, n/2], the smallest prime satisfying the half-integer
    prime criterion, computed from residues rather than by factoring."""
    best: dict[int, int] = {}
    kmax = n // 2
    if kmax < 1:
        return best
    for p in sieve(2 * n + 2 * u + 1).between(2, 2 * n + 2 * u + 1):
        p = int(p)
        if (p - 1) ** 2 <= 2 * (u + 1):
            continue
        inv2 = pow(2, -1, p)
        # first l >= 0 with p | (n - l) or p | (1 + 2u + 2(n - l))
        first = min(n % p, (1 + 2 * u + 2 * n) * inv2 % p)
        # first l >= 1 with p | (1 + 2u + 2l)
        bad = (-(1 + 2 * u)) * inv2 % p or p
        lo, hi = first + 1, min(bad - 1, (p - 1) // 2, kmax)
        for k in range(lo, hi + 1):
            if k not in best:
                best[k] = p
    return best


def half_irred_degrees(u: int, n: int) -> dict[int, tuple[int, int]]:
    """degree l -> (k, p) for degrees covered by the half-integer criterion."""
    out: dict[int, tuple[int, int]] = {}
    for k, p in sorted(half_irred_primes(u, n).items()):
        for l in (2 * k - 1, 2 * k):
            if l >= 3 and l not in out:
                out[l] = (k, p)
        if n % 2 == 1 and k == (n - 1) // 2 and n >= 3:
            out.setdefault(n, (k, p))
    return out


def _theorem2_pair(u: int, n: int, summary: dict) -> tuple[dict, list[int]]:
    A = AlphaParam.half(u)
    G = substitute_square(cached_g(n, A))
    primes = constant_primes(n, A)
    windows = _LazyWindows(G, primes)
    half = half_irred_degrees(u, n)
    quartic = even_quartic_exclusion(G[2], G[0]) if n == 2 else None
    per_degree: dict[int, tuple] = {}
    open_degrees: list[int] = []
    for l in range(1, n + 1):
        cert = None
        if l in half:
            k, p = half[l]
            cert = (LemmaTag.HALF_IRRED.value, p, k)
        if cert is None:
            for p, (lo, hi) in windows:
                if lo <= l <= hi:
                    cert = (LemmaTag.FILASETA.value, p)
                    break
        if cert is None:
            for p in primes:
                if dumas_exclusion_poly(G, p, l).conclusive:
                    cert = (LemmaTag.DUMAS_ALL.value, p)
                    break
        if cert is None and quartic is not None and quartic[l - 1]:
            cert = (LemmaTag.EVEN_QUARTIC.value, None)
        if cert is None:
            if l <= 2 and (u, n) not in T0:
                cert = (LemmaTag.CITED_T0.value, None)
            elif l >= 3 and (u, n) not in HALF_HIGH_DEGREE_EXCEPTIONS.get(l, ()):
                cert = (LemmaTag.CITED_S.value, None)
        if cert is None:
            open_degrees.append(l)
            _count(summary, "open")
        else:
            per_degree[l] = cert
            _count(summary, cert[0])
    return {
        "u": u, "n": n,
        "status": "flagged" if open_degrees else "irreducible",
        "open_degrees": open_degrees,
        "certificates": _runs(per_degree),
    }, open_degrees


def theorem2_expected(n_max: int, us=range(1, 46), n_min: int = 2) -> set[tuple[int, int, int]]:
    exp = {(u, n, 2) for u, n in OMEGA1 if n_min <= n <= n_max and u in us}
    exp |= {(u, n, 4) for u, n in OMEGA1_DEGREE4 if n_min <= n <= n_max and u in us}
    return exp


def verify_theorem2(n_max: int = 130, us=range(1, 46), n_min: int = 2) -> SweepReport:
    """Degrees 1..n of psi_n(x^2) with alpha = u + 1/2.

    n = 1 is left out by default: there psi is +-x^2 +- (2u+3), which
    splits whenever 2u+3 is a square.
    """
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    report = SweepReport("theorem2", {"u": [min(us), max(us)], "n": [n_min, n_max]})
    flagged = set()
    for u in us:
        for n in range(n_min, n_max + 1):
            verdict, open_deg = _theorem2_pair(u, n, report.summary)
            report.verdicts.append(verdict)
            flagged.update((u, n, l) for l in open_deg)
    report.verdicts.sort(key=lambda v: (v["u"], v["n"]))
    _mismatch(report, flagged, theorem2_expected(n_max, us, n_min), ("u", "n", "degree"))
    if n_min > 1:
        split = [u for u in us if math.isqrt(2 * u + 3) ** 2 == 2 * u + 3]
        report.notes.append(f"n=1 not swept; x^2 - (2u+3) splits for u in {split}")
    return report


def n1_reducible_cases(us=range(1, 46)) -> list[tuple[int, IntPoly]]:
    """(u, factor) for which psi_1(x^2), alpha = u + 1/2, has a linear factor."""
    out = []
    for u in us:
        for s0 in (1, -1):
            P = substitute_square(build_psi(1, AlphaParam.half(u), [s0, 1]))
            for r in rational_roots(P):
                if r > 0:
                    out.append((u, IntPoly([-r, 1])))
    return out


def quartic_oracle_sweep(u: int, a_bound: int = 10**4) -> list[tuple[int, int, IntPoly]]:
    """Factors of degree 1 or 2 of psi_2(x^2) for every a_1 with |a_1| <= a_bound.

    Returns (a_0, a_1, factor) for each factor found; empty means irreducible
    over the whole range.
    """
    A = AlphaParam.half(u)
    found = []
    for s0 in (1, -1):
        for a1 in range(-a_bound, a_bound + 1):
            P = substitute_square(build_psi(2, A, [s0, a1, 1]))
            for r in rational_roots(P):
                found.append((s0, a1, IntPoly([-r, 1])))
            for q in bounded_quadratic_factors(P):
                found.append((s0, a1, q))
    return found


def exclude_degree(n: int, alpha: AlphaParam, k: int) -> tuple | None:
    """Certificate excluding a factor of degree k for every admissible twist.

    Integer alpha works on psi itself; alpha = u + 1/2 on psi(x^2), where k
    ranges up to n.  Returns None when no computed certificate applies.
    """
    if alpha.d == 1 and alpha.a == 0:
        if not 1 <= k <= n // 2:
            raise ValueError("need 1 <= k <= n/2")
        if alpha.u > 0:
            c = glemma_check(n, alpha.u, k)
            if c:
                return (LemmaTag.GLEMMA.value, c.prime_witness)
            if k <= 2 and alpha.u <= 50:
                c = glemma1_check(n, alpha.u, k)
                if c:
                    return (LemmaTag.GLEMMA1.value, c.prime_witness)
        g = cached_g(n, alpha)
    elif alpha.d == 2 and alpha.a == 1:
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n for psi(x^2)")
        half = half_irred_degrees(alpha.u, n)
        if k in half:
            kk, p = half[k]
            return (LemmaTag.HALF_IRRED.value, p, kk)
        g = substitute_square(cached_g(n, alpha))
    else:
        if not 1 <= k <= n // 2:
            raise ValueError("need 1 <= k <= n/2")
        g = cached_g(n, alpha)
    primes = constant_primes(n, alpha)
    for p in primes:
        w = filaseta_window(g, p)
        if w and w[0] <= k <= w[1]:
            return (LemmaTag.FILASETA.value, p)
    for p in primes:
        if dumas_exclusion_poly(g, p, k).conclusive:
            return (LemmaTag.DUMAS_ALL.value, p)
    if alpha.d == 2 and alpha.a == 1 and n == 2 and even_quartic_exclusion(g[2], g[0])[k - 1]:
        return (LemmaTag.EVEN_QUARTIC.value, None)
    if k == 1 and alpha.d == 1 and alpha.a == 0:
        ok, _ = linear_root_exclusion(n, alpha)
        if ok:
            return (LemmaTag.LINEAR_ROOTS.value, None)
    return None


# ---------------------------------------------------------------- tables

def _row(kind, b, pair, ok, detail):
    return {"table": kind, "b": b, "pair": list(pair), "verified": ok, "detail": detail}


def half_quadratic_witness(u: int, n: int, b: int, *, max_n: int = 1024):
    """Witness and mirror for x^2 + b and x^2 - b dividing psi_n(x^2), alpha = u + 1/2."""
    if n > max_n:
        raise ScopeExceeded(f"n={n} exceeds witness scope {max_n}")
    w = linear_witness(n, AlphaParam.half(u), b)
    if w is None:
        return None
    m = mirror_witness(w)
    for wit, q in ((w, IntPoly([b, 0, 1])), (m, IntPoly([-b, 0, 1]))):
        if not substitute_square(wit.polynomial).divides(q):
            raise AssertionError("x^2 witness failed exact division")
    return w, m


def search_half_quadratic(u: int, n: int, candidates=None, *, max_n: int = 1024):
    if n > max_n:
        raise ScopeExceeded(f"n={n} exceeds witness scope {max_n}")
    for b in candidates if candidates is not None else sorted(TABLE2):
        res = half_quadratic_witness(u, n, b, max_n=max_n)
        if res:
            return b, res
    return None


def verify_tables() -> SweepReport:
    report = SweepReport("tables", {"tables": ["linear", "quadratic", "half-quadratic"]})
    for b, pairs in sorted(TABLE1.items()):
        for n, alpha in pairs:
            w = linear_witness(n, AlphaParam(alpha), b)
            ok = w is not None and mirror_witness(w).verified
            report.verdicts.append(_row("linear", b, (n, alpha), ok,
                                        w.to_dict() if w else None))
    for q0, pairs in sorted(TABLE1_QUADRATIC.items()):
        for n, alpha in pairs:
            wp = quadratic_witness(n, AlphaParam(alpha), q0)
            wm = quadratic_witness(n, AlphaParam(alpha), -q0)
            ok = wp is not None and wm is not None
            report.verdicts.append(_row("quadratic", q0, (n, alpha), ok,
                                        wp.to_dict() if wp else None))
    for b, pairs in sorted(TABLE2.items()):
        for u, n in pairs:
            res = half_quadratic_witness(u, n, b)
            report.verdicts.append(_row("half-quadratic", b, (u, n), res is not None,
                                        res[0].to_dict() if res else None))
    for u, n in sorted(TABLE2_UNRESOLVED):
        try:
            search_half_quadratic(u, n)
            detail = "unexpectedly searched"
        except ScopeExceeded as exc:
            detail = f"scope exceeded: {exc}"
        report.verdicts.append(_row("half-quadratic", None, (u, n), None, detail))
    for row in report.verdicts:
        if row["verified"] is False:
            report.mismatches.append({"kind": "unverified-row", "table": row["table"],
                                      "b": row["b"], "pair": row["pair"]})
    counts = {}
    for row in report.verdicts:
        key = f"{row['table']}:{'scope-exceeded' if row['verified'] is None else row['verified']}"
        counts[key] = counts.get(key, 0) + 1
    report.summary = counts
    return report


# ---------------------------------------------------------------- Galois

def residual_pairs(n_max: int = 130, u_min: int = 1, n_min: int = 1, u_floor: int = 45):
    """(u, n) in the Galois sweep with no prime from the single-valuation search.

    n = 1 has an empty prime window and counts as residual.
    """
    out = []
    for n in range(n_min, n_max + 1):
        for u in range(u_min, max(u_floor, (4 * n) // 3) + 1):
            if n <= 1 or lemma_pr_prime_search(u, n) is None:
                out.append((u, n))
    return out


def ten_three_identity() -> bool:
    lhs = substitute_square(laguerre_reference(3, AlphaParam.half(10).value)) * -48
    rhs = IntPoly([-15, 0, 2]) * IntPoly([1035, 0, -132, 0, 4])
    return lhs.to_intpoly() == (1, rhs)


def verify_galois(n_sweep: int = 130, n_large: int = 1000) -> SweepReport:
    if n_sweep < 40:
        raise ValueError("n_sweep must be >= 40")
    report = SweepReport("galois", {"n_sweep": n_sweep, "n_large": n_large, "u_floor": 45})
    res = residual_pairs(n_sweep)
    large = [t for t in res if t[1] >= 40]
    alt = len(residual_pairs(n_sweep, n_min=2))
    report.summary["residual_pairs"] = len(res)
    report.summary["residual_pairs_n_ge_2"] = alt
    report.summary["residual_with_n_ge_40"] = len(large)
    if len(res) != 619:
        report.mismatches.append({"kind": "residual-count", "got": len(res), "want": 619})
    if large:
        report.mismatches.append({"kind": "residual-large-n", "pairs": large})
    bad = [n for n in range(n_sweep + 1, n_large + 1) if not galois_large_n_check(n)]
    report.summary["large_n_checked"] = n_large - n_sweep
    if bad:
        report.mismatches.append({"kind": "large-n", "n": bad})
    sq = bsq_scan(45, 200)
    report.summary["square_b_pairs"] = len(sq)
    if any(n != 1 for _, n in sq):
        report.mismatches.append({"kind": "square-b", "pairs": [t for t in sq if t[1] != 1]})
    ident = ten_three_identity()
    report.summary["ten_three_identity"] = ident
    if not ident:
        report.mismatches.append({"kind": "identity"})
    gap = max(max_gap_in_residue_class(157, 1, 4), max_gap_in_residue_class(157, 3, 4))
    report.summary["residue_gap_157"] = gap
    if gap != 24:
        report.mismatches.append({"kind": "gap", "got": gap})
    report.verdicts = [{"u": u, "n": n, "status": "residual"} for u, n in res]
    return report


__all__ = [
    "SweepReport", "verify_theorem1", "verify_theorem2", "verify_tables", "verify_galois",
    "power_of_two_single_edge", "quartic_oracle_sweep", "residual_pairs", "exclude_degree",
    "half_irred_primes", "half_irred_degrees", "filaseta_window", "n1_reducible_cases",
    "ten_three_identity", "half_quadratic_witness", "search_half_quadratic",
]
