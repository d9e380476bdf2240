import random

import pytest
import sympy

from conftest import X, to_sympy
from lagsieve.polys import AlphaParam, IntPoly, build_psi, substitute_square
from lagsieve.tables import TABLE1, TABLE2
from lagsieve.witness import (
    ScopeExceeded,
    bounded_quadratic_factors,
    brute_force_factor_oracle,
    even_quartic_exclusion,
    linear_root_exclusion,
    linear_witness,
    mirror_witness,
    quadratic_witness,
    rational_roots,
    solve_linear_small,
)


def test_solve_linear_small():
    x = solve_linear_small([6, 10, 15], 7)
    assert sum(a * b for a, b in zip(x, [6, 10, 15])) == 7
    assert solve_linear_small([4, 6], 3) is None
    assert solve_linear_small([0, 0], 0) == [0, 0]


def test_linear_witness_forty_twenty_four():
    w = linear_witness(40, AlphaParam(24), 30, 1, 1)
    assert w is not None and w.verified
    assert w.factor.coeffs == (30, 1)
    assert w.polynomial.divides(IntPoly([30, 1]))
    m = mirror_witness(w)
    assert m.factor.coeffs == (-30, 1)
    assert m.polynomial(30) == 0


def test_no_linear_witness_for_three_24():
    ok, cands = linear_root_exclusion(3, AlphaParam(24))
    assert ok
    assert sorted(set(abs(c) for c in cands)) == [3, 15, 75]
    assert linear_witness(3, AlphaParam(24), 30) is None


@pytest.mark.parametrize("b,n,alpha", [(b, n, a) for b, ps in TABLE1.items() for n, a in ps])
def test_table1_rows(b, n, alpha):
    w = linear_witness(n, AlphaParam(alpha), b)
    assert w is not None
    assert abs(w.coeffs[0]) == abs(w.coeffs[-1]) == 1
    assert mirror_witness(w).verified


def test_quadratic_witness_sixteen_24():
    w = quadratic_witness(16, AlphaParam(24), 780)
    assert w.verified and w.factor.coeffs == (780, 0, 1)
    assert quadratic_witness(16, AlphaParam(24), -780).verified


def test_quadratic_witness_scope():
    with pytest.raises(ScopeExceeded):
        quadratic_witness(2**12, AlphaParam.half(44), 3)


@pytest.mark.parametrize("b,u,n", [(b, u, n) for b, ps in TABLE2.items() for u, n in ps if n <= 200])
def test_table2_rows_small(b, u, n):
    w = linear_witness(n, AlphaParam.half(u), b)
    assert w is not None
    G = substitute_square(w.polynomial)
    assert G.divides(IntPoly([b, 0, 1]))
    assert substitute_square(mirror_witness(w).polynomial).divides(IntPoly([-b, 0, 1]))


def test_rational_roots():
    assert rational_roots(IntPoly([-6, 11, -6, 1])) == [1, 2, 3]
    L = build_psi(3, AlphaParam.half(10), [1, 1, 1, 1])
    # 48 L_3^(21/2)(y) vanishes at 15/2, so script-L_3^(10) vanishes at -15
    assert -15 in rational_roots(L)
    with pytest.raises(ValueError):
        rational_roots(IntPoly([1, 2]))


def test_bounded_quadratic_factors():
    p = IntPoly([3, 0, 1]) * IntPoly([5, 0, 1])
    assert bounded_quadratic_factors(p) == [IntPoly([3, 0, 1]), IntPoly([5, 0, 1])]
    q = p * IntPoly([7, 1, 0, 1])
    assert bounded_quadratic_factors(q) == [IntPoly([3, 0, 1]), IntPoly([5, 0, 1])]
    for a in (-3, 0, 1, 7, 200):
        P = substitute_square(build_psi(2, AlphaParam.half(38), [1, a, 1]))
        assert bounded_quadratic_factors(P) == []


def _sympy_quadratics(p):
    _, facs = sympy.factor_list(to_sympy(p), X)
    irreducible = [(sympy.Poly(f, X), e) for f, e in facs]
    out = set()
    for f, e in irreducible:
        if f.degree() == 2:
            out.add(tuple(int(c) for c in f.monic().all_coeffs()[::-1]))
    lin = [f for f, e in irreducible for _ in range(e) if f.degree() == 1]
    for i in range(len(lin)):
        for j in range(i + 1, len(lin)):
            out.add(tuple(int(c) for c in (lin[i] * lin[j]).monic().all_coeffs()[::-1]))
    return out


def test_quartic_route_matches_generic_and_sympy():
    rng = random.Random(7)
    for _ in range(150):
        a = IntPoly([rng.randint(-9, 9) or 1, rng.randint(-5, 5), 1])
        b = IntPoly([rng.randint(-9, 9) or 1, rng.randint(-5, 5), 1])
        p = a * b
        quartic = set(q.coeffs for q in bounded_quadratic_factors(p))
        assert tuple(a.coeffs) in quartic and tuple(b.coeffs) in quartic
        assert quartic == _sympy_quadratics(p)
        sextic = p * IntPoly([rng.choice([2, 3, 5, 7]), 0, 0, 1])
        assert set(q.coeffs for q in bounded_quadratic_factors(sextic)) >= quartic


def test_brute_force_oracle():
    p = IntPoly([-1, 1]) * IntPoly([2, 0, 1]) * IntPoly([3, 1, 0, 1])
    out = brute_force_factor_oracle(p, 3)
    assert out[1] == [IntPoly([-1, 1])]
    assert IntPoly([2, 0, 1]) in out[2]
    assert IntPoly([3, 1, 0, 1]) in out[3]
    with pytest.raises(ScopeExceeded):
        brute_force_factor_oracle(IntPoly([1] * 20), 3)


def test_even_quartic_exclusion():
    # x^4 + a*162 x^2 +- 6399 never factors
    assert even_quartic_exclusion(162, 6399) == (True, True)
    # x^4 - 5x^2 + 4 = (x^2-1)(x^2-4) has all factor types
    assert even_quartic_exclusion(5, 4) == (False, False)
    # x^4 - 7x^2 + 9 = (x^2+x-3)(x^2-x-3), but no linear factor for any twist
    assert even_quartic_exclusion(7, 9) == (True, False)
