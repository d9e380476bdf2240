import math

import pytest

from lagsieve.arith import (
    INFINITY,
    digit_sum,
    factorize,
    interval_coverage_failures,
    is_prime,
    largest_prime_factor,
    legendre_val_factorial,
    max_gap_in_residue_class,
    primes_in_ap_interval,
    primes_up_to,
    residue_class_primes,
    sieve,
    val_p,
    valuation,
)


def _naive_val(m, p):
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def test_val_p_examples():
    assert val_p(17550, 3) == 3
    assert val_p(17550, 2) == 1
    assert val_p(17550, 5) == 2
    assert val_p(-96, 2) == 5
    assert val_p(2**521 - 1, 2) == 0


def test_val_p_rejects_zero_and_composite():
    with pytest.raises(ValueError):
        val_p(0, 3)
    with pytest.raises(ValueError):
        val_p(12, 4)
    assert valuation(0, 7) is INFINITY
    assert INFINITY > 10**100


def test_val_p_big_power():
    assert val_p(3**400 * 7, 3) == 400


def test_legendre_small():
    assert legendre_val_factorial(10, 2) == 8
    assert legendre_val_factorial(100, 5) == 24
    assert legendre_val_factorial(0, 3) == 0
    assert digit_sum(10, 2) == 2


def test_legendre_against_direct_factorial():
    for l in range(0, 200):
        f = math.factorial(l)
        for p in (2, 3, 5, 7, 11):
            assert legendre_val_factorial(l, p) == _naive_val(f, p)


def test_power_of_two_specialisation():
    # nu_2(n!) - nu_2(j!) = (n - 1) - (j - s_2(j)) for n = 2^r
    for r in range(1, 12):
        n = 1 << r
        for j in range(0, n + 1, max(1, n // 16)):
            lhs = legendre_val_factorial(n, 2) - legendre_val_factorial(j, 2)
            assert lhs == (n - 1) - (j - digit_sum(j, 2))


def test_sieve_basics():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    s = sieve(1000)
    assert 997 in s and 999 not in s
    assert s.between(10, 20) == [11, 13, 17, 19]
    assert len(sieve(10**6).between(1, 10**6)) == 78498


def test_factorize_and_lpf():
    assert factorize(17550) == {2: 1, 3: 3, 5: 2, 13: 1}
    assert largest_prime_factor(1) == 1
    assert largest_prime_factor(6399) == 79
    for m in range(1, 500):
        assert math.prod(p**e for p, e in factorize(m).items()) == m
        assert all(is_prime(p) for p in factorize(m))


def test_primes_in_ap_interval_exact_ratio():
    ps = primes_in_ap_interval(1000, "1.048", 1, 4)
    assert ps == [p for p in primes_up_to(1048) if p > 1000 and p % 4 == 1]
    with pytest.raises(ValueError):
        primes_in_ap_interval(10, "1.5", 2, 4)


def test_residue_gap_up_to_157():
    assert max_gap_in_residue_class(157, 1, 4) == 24
    assert max_gap_in_residue_class(157, 3, 4) == 20
    assert list(residue_class_primes(30, 3, 4)) == [3, 7, 11, 19, 23]


def test_interval_coverage_thresholds():
    four = ((1, 4), (3, 4))
    assert interval_coverage_failures(880, 900, "1.048", four) == [881, 882, 883, 884, 885, 886]
    assert interval_coverage_failures(200, 220, "1.05", closed=False) == [200, 211, 212]
