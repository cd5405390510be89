import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from triadic import sums
from triadic.claims import DomainError
from triadic.lucas import LucasParams, lucas_u
from triadic.padic import TruncatedPadic
from triadic.valuation import generalized_binomial, nu, nu_binomial

F = Fraction


def naive_scaled(m, n):
    return sum((F(math.comb(2 * k, k), m**k) for k in range(n)), F(0))


def naive_alt(m, n):
    return sum((F((-1) ** k * math.comb(2 * k, k) * math.comb(n - 1, k), m**k) for k in range(n)), F(0))


def test_central_binomials_incremental():
    assert sums.central_binomials(300) == [math.comb(2 * k, k) for k in range(300)]


def test_central_sum():
    assert sums.central_sum(1) == 1
    assert sums.central_sum(3) == 9
    assert nu(3, sums.central_sum(3)) == 2 == 2 * nu(3, 3) + nu(3, math.comb(6, 3))


def test_scaled_sum():
    assert all(sums.scaled_sum(m, 1) == 1 for m in (-3, 1, 4, 99))
    assert sums.scaled_sum(4, 2) == F(3, 2)
    for m in (-7, -1, 2, 4, 7, 10):
        for n in range(1, 40):
            assert sums.scaled_sum(m, n) == naive_scaled(m, n)


def test_quarter_power_closed_form():
    for k in range(1, 201):
        assert sums.scaled_sum(4, k) * 2 ** (2 * k - 1) == k * math.comb(2 * k, k)
    assert all(sums.check_quarter_power(k) for k in range(1, 60))


def test_half_binomial_chain():
    for k in range(1, 101):
        left = sum(((-1) ** l * generalized_binomial(F(-1, 2), l) for l in range(k)), F(0))
        assert left == (-1) ** (k - 1) * generalized_binomial(F(-3, 2), k - 1)


def test_alt_sum():
    assert all(sums.alt_sum(m, 1) == 1 for m in (-3, 1, 4, 99))
    assert sums.alt_sum(1, 3) == 3
    assert nu(3, sums.alt_sum(1, 3)) == 1 >= 2 * nu(3, 3) - 1
    for m in (-7, -1, 2, 4, 7, 10):
        for n in range(1, 40):
            assert sums.alt_sum(m, n) == naive_alt(m, n)


def test_sumspec_dispatch():
    assert sums.SumSpec(sums.Family.CENTRAL, 3).evaluate() == 9
    assert sums.SumSpec(sums.Family.SCALED, 2, 4).evaluate() == F(3, 2)
    assert sums.SumSpec(sums.Family.ALTERNATING, 3, 1).evaluate() == 3
    assert sums.SumSpec(sums.Family.SUN_TAURASO_RHS, 2, 4).evaluate() == 6
    assert sums.SumSpec(sums.Family.SUN32_RHS, 3, 4).evaluate() == sums.alt_sum(4, 3) / 3
    with pytest.raises(ValueError):
        sums.SumSpec(sums.Family.SCALED, 3, 0)


def test_sun_tauraso():
    # m=4, n=2: 4 * 3/2 = 6 = C(4,0) u_2 + C(4,1) u_1 = 2 + 4
    assert sums.sun_tauraso_rhs(4, 2) == 6 == 4 * sums.scaled_sum(4, 2)
    assert sums.check_sun_tauraso(1, 1)


def test_rewrite_identity():
    assert sums.check_rewrite_identity(1, 0)
    assert F(1, 5) == F(2 * 1 - 1, 5) and sums.check_rewrite_identity(5, 0)
    assert all(sums.check_rewrite_identity(n, k) for n in range(1, 201) for k in range(n))
    with pytest.raises(ValueError):
        sums.check_rewrite_identity(3, 3)


def test_st2_and_sun32_examples():
    assert sums.check_st2(4, 1)
    assert sums.check_st2(7, 3)
    assert sums.check_sun32(1, 1)
    assert sums.check_sun32(4, 3)


@pytest.mark.parametrize("m", [m for m in range(-10, 21) if m])
def test_identity_chain(m):
    """Sun-Tauraso and the rewrite identity together imply the rewritten form; all three hold."""
    for n in range(1, 41):
        assert sums.check_sun_tauraso(m, n)
        assert sums.check_st2(m, n)
        assert sums.check_sun32(m, n)


def test_convolution_examples():
    assert sums.convolution_sides(0, F(7, 3)) == (1, 1)
    assert sums.convolution_sides(1, 1) == (-1, -1)
    for n in range(0, 61):
        assert sums.convolution_sides(n, 0) == (1, 1)
        assert sum(math.comb(2 * j, j) * math.comb(2 * (n - j), n - j) for j in range(n + 1)) == 4**n


def test_convolution_is_a_polynomial_identity():
    """Both sides are degree-n polynomials in x; n+1 agreeing points certify equality."""
    for n in range(0, 8):
        for i in range(n + 1):
            x = F(i, 3) - 1
            lhs, rhs = sums.convolution_sides(n, x)
            assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 30), st.fractions(max_denominator=50))
def test_convolution_random_points(n, x):
    lhs, rhs = sums.convolution_sides(n, x)
    assert lhs == rhs


def test_x1_specialization():
    assert sums.check_x1_specialization(1)
    assert F(1 * 6 - 3 * 2 * 2 + 9 * 6 * 1, 16) == 3
    assert sums.check_x1_specialization(3)
    assert all(sums.check_x1_specialization(n) for n in range(1, 120))


def test_f_of_a():
    assert sums.f_of_a(2, 7)[1] == 2
    assert sums.f_of_a(3, 7)[1] == 2
    assert {sums.f_of_a(2, m)[1] for m in (7, 10, 13, -2)} == {2}
    value, residue = sums.f_of_a(2, 7)
    assert value.denominator % 3 != 0
    assert (value.numerator - residue * value.denominator) % 3 == 0


def test_f_of_a_domain():
    with pytest.raises(DomainError):
        sums.f_of_a(2, 6)
    with pytest.raises(DomainError):
        sums.f_of_a(1, 7)


def test_triple_block_range_convention():
    """Brute force: the block sum is 0 mod 3 for 3 not dividing k, and matches the binomial otherwise.

    k = 1 is the deciding case: the block over l in [0, 0] with 3 | 1 - l is empty.
    """
    assert sums.triple_block_sum(1) == 0
    assert sums.triple_block_target(1) == 0
    for k in range(1, 501):
        block = sums.triple_block_sum(k)
        if k % 3:
            assert block % 3 == 0
        else:
            kp = k
            while kp % 3 == 0:
                kp //= 3
            assert (block - math.comb(2 * kp - 1, kp - 1)) % 3 == 0
        # including l = k adds 2 C(2k-1, k) - C(2k, k) = 0, so that reading is the same
        assert 2 * math.comb(2 * k - 1, k) - math.comb(2 * k, k) == 0
    assert sums.check_triple_block(3)
    assert all(sums.check_triple_block(k) for k in range(1, 501))


def test_row_facts():
    assert [math.comb(2, k) for k in range(3)] == [1, 2, 1]
    assert sum(math.comb(3, k) for k in range(3)) == 7
    assert all(sums.check_row_facts(a) for a in range(1, 7))
    for a in range(1, 6):
        top = 3**a
        assert sums.row_sum_closed(a) == sum(math.comb(2 * top - 3, k) for k in range(top))


# -- truncated path ---------------------------------------------------------


def embed(x, digits=40):
    return TruncatedPadic.from_rational(x, 3, digits)


@pytest.mark.parametrize("m", [1, 4, 7, -5, 82])
def test_truncated_sums_match_exact(m):
    for n in list(range(1, 30)) + [81, 200]:
        assert (sums.scaled_sum_truncated(m, n, 20) - embed(sums.scaled_sum(m, n))).is_zero_to(20)
        assert (sums.alt_sum_truncated(m, n, 20) - embed(sums.alt_sum(m, n))).is_zero_to(20)


def test_batch_alt_matches_single():
    batch = sums.alt_sums_truncated(7, 300, 18)
    for n in range(1, 301):
        assert (batch[n - 1] - sums.alt_sum_truncated(7, n, 18)).is_zero_to(18)


def test_truncated_other_prime():
    for n in range(1, 40):
        got = sums.alt_sum_truncated(9, n, 10, p=5)
        assert (got - TruncatedPadic.from_rational(sums.alt_sum(9, n), 5, 20)).is_zero_to(10)


def test_truncated_requires_unit_m():
    with pytest.raises(DomainError):
        sums.scaled_sum_truncated(6, 5, 10)


def test_central_binomials_padic():
    units, exps = sums.central_binomials_padic(200, 3, 12)
    for k in range(200):
        c = math.comb(2 * k, k)
        assert exps[k] == nu_binomial(3, 2 * k, k)
        assert (c // 3 ** exps[k] - units[k]) % 3**12 == 0


def test_lucas_table_matches_recurrence():
    assert sums._lucas_table(9, 30) == [lucas_u(LucasParams(7), n) for n in range(31)]
