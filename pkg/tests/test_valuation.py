import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from triadic.valuation import (
    INFINITY,
    binomial,
    congruent_mod_power,
    generalized_binomial,
    nu,
    nu_binomial,
    nu_factorial,
    residue_mod_power,
)


def slow_nu(p, x):
    """Repeated exact division; shares nothing with the fast path."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    e = 0
    while x.numerator % p == 0:
        x /= p
        e += 1
    while x.denominator % p == 0:
        x *= p
        e -= 1
    return e


def pascal(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


def test_nu_examples():
    assert nu(3, 9) == 2
    assert nu(3, 0) == INFINITY
    assert nu(3, Fraction(20, 27)) == -3


@pytest.mark.parametrize("p", [2, 1, 9, -3, 15])
def test_nu_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        nu(p, 5)


def test_nu_factorial_examples():
    assert nu_factorial(3, 0) == 0
    assert nu_factorial(3, 9) == 4
    assert nu_factorial(3, 27) == 13


def test_nu_binomial_examples():
    assert nu_binomial(3, 6, 3) == 0
    # 27 + 27 = 2000 in base 3: no carries, so C(54, 27) is prime to 3
    assert nu_binomial(3, 54, 27) == 0 == nu(3, math.comb(54, 27))
    assert nu_binomial(3, 4, 7) == INFINITY
    assert nu_binomial(3, 4, -1) == INFINITY


@pytest.mark.parametrize("p", [3, 5, 7])
def test_nu_factorial_matches_factorial(p):
    for n in range(0, 200):
        assert nu_factorial(p, n) == slow_nu(p, math.factorial(n))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_kummer_matches_legendre(p):
    for n in range(0, 501):
        for k in range(0, n + 1):
            assert nu_binomial(p, n, k) == nu_factorial(p, n) - nu_factorial(p, k) - nu_factorial(p, n - k)


def test_binomial_examples():
    assert binomial(6, 3) == 20
    assert all(binomial(n, 0) == 1 for n in range(-5, 6))
    assert binomial(-1, 2) == 1
    assert binomial(-3, 3) == -10  # (-3)(-4)(-5)/6


def test_binomial_pascal():
    rows = pascal(200)
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k) == rows[n][k]


def test_generalized_binomial():
    assert generalized_binomial(Fraction(-1, 2), 1) == Fraction(-1, 2)
    assert generalized_binomial(Fraction(-1, 2), 2) == Fraction(3, 8)
    for k in range(0, 101):
        assert generalized_binomial(Fraction(-1, 2), k) * (-4) ** k == math.comb(2 * k, k)
    # integer argument agrees with the integer binomial
    assert all(generalized_binomial(-7, k) == binomial(-7, k) for k in range(10))


def test_congruent_mod_power_examples():
    assert congruent_mod_power(3, 2, 10, 1)
    # the difference is -1, of order 0
    assert not congruent_mod_power(3, 1, Fraction(1, 3), Fraction(4, 3))
    assert congruent_mod_power(3, 0, Fraction(1, 3), Fraction(4, 3))
    assert congruent_mod_power(3, INFINITY, Fraction(2, 7), Fraction(2, 7))
    assert congruent_mod_power(3, -1, Fraction(1, 3), 0)
    assert not congruent_mod_power(3, -1, Fraction(1, 9), 0)


def test_residue_mod_power():
    assert residue_mod_power(3, 2, Fraction(1, 2)) == 5
    with pytest.raises(ValueError):
        residue_mod_power(3, 2, Fraction(1, 3))


nonzero_rationals = st.fractions(max_denominator=10**6).filter(lambda x: x != 0)
rationals = st.fractions(max_denominator=10**6)


@given(nonzero_rationals, nonzero_rationals, st.sampled_from([3, 5, 7]))
def test_valuation_is_multiplicative_and_ultrametric(x, y, p):
    assert nu(p, x * y) == nu(p, x) + nu(p, y)
    if x + y != 0:
        assert nu(p, x + y) >= min(nu(p, x), nu(p, y))
        if nu(p, x) != nu(p, y):
            assert nu(p, x + y) == min(nu(p, x), nu(p, y))
    assert nu(p, x) == slow_nu(p, x)


@given(rationals, rationals, rationals, st.integers(-3, 6))
def test_congruence_is_an_equivalence(a, b, c, t):
    assert congruent_mod_power(3, t, a, a)
    assert congruent_mod_power(3, t, a, b) == congruent_mod_power(3, t, b, a)
    if congruent_mod_power(3, t, a, b) and congruent_mod_power(3, t, b, c):
        assert congruent_mod_power(3, t, a, c)
