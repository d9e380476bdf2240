import pytest

from lagsieve.dioph import (
    ALPHA26_EQ,
    ALPHA44_EQ,
    ALPHA48_EQ,
    ALPHA49_EQ,
    ExpEquation,
    SolutionTriple,
    alpha24_equation_n_values,
    alpha24_five_n_values,
    alpha24_system_n_values,
    alpha44_n_values,
    capped_solutions,
    s_m_set,
    smooth_numbers,
    solve_exp_equation,
    sunit_solutions,
)


def test_smooth_numbers():
    assert smooth_numbers(5, 30) == [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30]
    assert smooth_numbers(13, 1) == [1]
    assert smooth_numbers(2, 17) == [1, 2, 4, 8, 16]
    with pytest.raises(ValueError):
        smooth_numbers(4, 10)


def test_smooth_numbers_against_scan():
    from lagsieve.arith import largest_prime_factor

    assert smooth_numbers(7, 5000) == [m for m in range(1, 5001) if largest_prime_factor(m) <= 7]


def test_sunit_small_limit():
    sols = sunit_solutions(13, 100)
    assert SolutionTriple(81, 1, 80) in sols
    assert SolutionTriple(3, 1, 2) in sols
    assert sols == sorted(sols)
    assert all(t.valid() for t in sols)


def test_sunit_prefix_monotone():
    small = sunit_solutions(13, 10**4)
    big = sunit_solutions(13, 10**5)
    assert big[: len(small)] == small


def test_triple_validation():
    with pytest.raises(ValueError):
        SolutionTriple(10, 2, 8)
    with pytest.raises(ValueError):
        SolutionTriple(17 + 1, 1, 17)


def test_exp_equation_alpha24():
    sols = solve_exp_equation(ExpEquation(lhs={3: 7, 5: 5}, rhs={2: 12}, target=1))
    assert [(s.lhs_dict(), s.rhs_dict()) for s in sols] == [
        ({3: 0, 5: 1}, {2: 2}),
        ({3: 1, 5: 0}, {2: 1}),
        ({3: 2, 5: 0}, {2: 3}),
    ]
    assert alpha24_equation_n_values() == {48, 96, 192}
    assert alpha24_five_n_values() == {1920}
    assert alpha24_system_n_values() == {3, 6, 12, 24, 30, 48, 96, 120, 192, 1920}


def test_exp_equations_alpha26_to_49():
    (s,) = solve_exp_equation(ALPHA26_EQ)
    assert s.lhs_dict() == {5: 2} and s.rhs_dict() == {2: 2, 3: 1}
    assert alpha44_n_values() == {96}
    assert solve_exp_equation(ALPHA48_EQ) == []
    assert solve_exp_equation(ALPHA49_EQ) == []


def test_exp_solutions_reevaluate():
    for eq in (ALPHA26_EQ, ALPHA44_EQ):
        for s in solve_exp_equation(eq):
            assert eq.evaluate(s.lhs_dict(), s.rhs_dict()) == eq.target


def test_s_m_set():
    assert s_m_set(2, 100) == {1}
    assert s_m_set(3, 100) == {1, 2, 3, 8}
    assert max(s_m_set(5, 10**5)) == 80


def test_capped_subset():
    sols = sunit_solutions(13, 10**5)
    assert set(capped_solutions(sols)) <= set(sols)
