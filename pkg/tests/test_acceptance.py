"""Acceptance criteria 1-10. Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or as a script.
"""

import random
import sys
import time

import pytest

from lagsieve import campaign
from lagsieve.arith import (
    interval_coverage_failures,
    legendre_val_factorial,
    max_gap_in_residue_class,
    primes_up_to,
    val_p,
)
from lagsieve.criteria import bsq_scan
from lagsieve.dioph import (
    ALPHA49_EQ,
    SUNIT_CAPS,
    alpha24_equation_n_values,
    alpha24_system_n_values,
    capped_solutions,
    solve_exp_equation,
    sunit_solutions,
)
from lagsieve.polygon import newton_polygon
from lagsieve.polys import AlphaParam, IntPoly, build_g
from lagsieve.witness import linear_root_exclusion, linear_witness

NP_GOLDENS = {
    (12, 43, 3): [(0, 0), (9, 5), (12, 7)],
    (40, 24, 2): [(0, 0), (32, 32), (40, 41)],
    (40, 24, 3): [(0, 0), (1, 0), (10, 4), (37, 17), (40, 20)],
    (40, 24, 5): [(0, 0), (10, 2), (35, 8), (39, 9), (40, 10)],
    (60, 24, 7): [(0, 0), (7, 1), (56, 9), (60, 10)],
    (1920, 24, 2): [(0, 0), (128, 127), (384, 382), (896, 893), (1920, 1916)],
    (14, 12, 7): [(0, 0), (14, 2)],
    (16, 12, 2): [(0, 0), (16, 15)],
}


@pytest.fixture
def line(capsys):
    """Print a criterion verdict to the terminal, then assert it."""

    def emit(num: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {title}"
                  + (f" ({detail})" if detail else ""))
        assert ok, detail

    return emit


def test_criterion_01_newton_polygon_goldens(line):
    wrong = []
    t1920 = None
    for (n, alpha, p), want in NP_GOLDENS.items():
        t = time.perf_counter()
        got = list(newton_polygon(build_g(n, AlphaParam(alpha)), p).vertices)
        if n == 1920:
            t1920 = time.perf_counter() - t
        if got != want:
            wrong.append(((n, alpha, p), got))
    ok = not wrong and t1920 < 60
    line(1, "Newton polygon goldens", ok, f"mismatches={wrong}, 1920 case {t1920:.1f}s")


def test_criterion_02_power_of_two_single_edge(line):
    bad = campaign.power_of_two_single_edge(range(6, 12), range(11, 51))
    line(2, "n=2^r single 2-adic edge for r=6..11", not bad, f"exceptions={bad}")


def test_criterion_03_tables(line):
    rep = campaign.verify_tables()
    s = rep.summary
    ok = (
        rep.ok
        and s.get("linear:True") == 22
        and s.get("half-quadratic:True") == 19
        and s.get("half-quadratic:scope-exceeded") == 1
    )
    line(3, "table witnesses verified", ok, f"summary={s}, mismatches={rep.mismatches}")


def test_criterion_04_theorem1_sweep(line):
    rep = campaign.verify_theorem1(130)
    ok = (
        rep.ok
        and campaign.exclude_degree(120, AlphaParam(24), 1) is None
        and campaign.exclude_degree(96, AlphaParam(44), 1) is not None
    )
    line(4, "integer-alpha sweep n<=130", ok,
         f"flagged={rep.summary.get('flagged')}, mismatches={rep.mismatches}")


def test_criterion_05_theorem2_sweep(line):
    rep = campaign.verify_theorem2(130)
    oracle = campaign.quartic_oracle_sweep(38, 10**4)
    ok = rep.ok and not oracle
    line(5, "half-integer sweep n<=130 and (38,2) oracle", ok,
         f"flagged={rep.summary.get('flagged')}, mismatches={rep.mismatches}, oracle hits={oracle[:5]}")


def test_criterion_06_no_linear_factor_3_24(line):
    A = AlphaParam(24)
    excluded, cands = linear_root_exclusion(3, A)
    witnesses = [b for b in cands or () if linear_witness(3, A, b) is not None]
    ok = excluded and cands is not None and all(17550 % abs(b) == 0 for b in cands) and not witnesses
    line(6, "(3,24) has no linear factor", ok, f"candidates={cands}, witnesses={witnesses}")


def test_criterion_07_galois(line):
    rep = campaign.verify_galois(130, 1000)
    s = rep.summary
    bsq = bsq_scan(45, 200)
    ok = (
        rep.ok
        and s["residual_pairs"] == 619
        and s["residual_with_n_ge_40"] == 0
        and s["ten_three_identity"]
        and all(n == 1 for _, n in bsq)
    )
    line(7, "Galois campaign", ok, f"summary={s}, mismatches={rep.mismatches}")


def test_criterion_08_legendre_and_edge_union(line):
    legendre_bad = []
    for p in primes_up_to(97):
        direct = 0
        for l in range(0, 5001):
            if l:
                direct += val_p(l, p)
            if legendre_val_factorial(l, p) != direct:
                legendre_bad.append((l, p))
    rng = random.Random(20260101)
    union_bad = []
    for p in (2, 3, 5, 7):
        for _ in range(500):
            f, g = (_random_poly(rng) for _ in range(2))
            want = dict(newton_polygon(f, p).slope_lengths())
            for s, l in newton_polygon(g, p).slope_lengths().items():
                want[s] = want.get(s, 0) + l
            if newton_polygon(f * g, p).slope_lengths() != want:
                union_bad.append((p, f.coeffs, g.coeffs))
    ok = not legendre_bad and not union_bad
    line(8, "Legendre formula and polygon edge union", ok,
         f"legendre violations={len(legendre_bad)}, union violations={len(union_bad)}")


def _random_poly(rng: random.Random) -> IntPoly:
    deg = rng.randint(1, 6)
    lead = rng.choice([1, -1, 2, 3, 5, 7, 9, 25])
    const = rng.choice([v for v in range(-200, 201) if v != 0])
    mid = [rng.choice([0, rng.randint(-200, 200), rng.choice([2, 3, 5, 7]) ** rng.randint(1, 6)])
           for _ in range(deg - 1)]
    return IntPoly([const, *mid, lead])


def test_criterion_09_diophantine(line):
    want = {3, 6, 12, 24, 30, 120, 1920}
    got = alpha24_equation_n_values()
    part_a = got == want
    part_b = solve_exp_equation(ALPHA49_EQ) == []
    triples = sunit_solutions(13, 10**8)
    capped = capped_solutions(triples, SUNIT_CAPS)
    part_c = (
        any((t.x, t.y, t.z) == (1, 80, 81) for t in triples)
        and all(t.valid(13) and t.within_caps(SUNIT_CAPS) for t in capped)
        and len(capped) <= 514
    )
    line(9, "exponential equations and S-unit search", part_a and part_b and part_c,
         f"(a) equation n-values={sorted(got)} vs {sorted(want)}, "
         f"full 5-smooth system={sorted(alpha24_system_n_values())}; "
         f"(b) {part_b}; (c) {part_c}, {len(triples)} triples, {len(capped)} within caps")


def test_criterion_10_prime_intervals(line):
    mod4 = interval_coverage_failures(887, 10**6, "1.048", ((1, 4), (3, 4)))
    gap = max(max_gap_in_residue_class(157, 1, 4), max_gap_in_residue_class(157, 3, 4))
    open_interval = interval_coverage_failures(213, 10**6, "1.05", closed=False)
    ok = not mod4 and gap == 24 and not open_interval
    line(10, "prime interval coverage and residue gaps", ok,
         f"mod 4 failures={mod4[:5]}, gap={gap}, (m,1.05m) failures={open_interval[:5]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", *sys.argv[1:]]))
