import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from triadic.claims import PrecisionError
from triadic.padic import (
    QuadExt,
    TruncatedPadic,
    cube_root_check,
    lemma42_closed_form_check,
    lemma42_partial,
    lemma42_tail_bound,
    log_difference_series,
    log_omega_vanishes,
    log_tail_bound,
    log_terms_needed,
    odd_power_series,
    omega,
    padic_log,
)
from triadic.valuation import INFINITY, nu

F = Fraction
T = TruncatedPadic.from_rational

three_integral = st.fractions(max_denominator=1000).filter(lambda x: x.denominator % 3 != 0)
nonzero_ti = three_integral.filter(lambda x: x != 0)


def agree(x: TruncatedPadic, r: Fraction, digits) -> bool:
    """``x`` equals the exact rational ``r`` modulo ``3**digits``."""
    return nu(3, x.lift() - r) >= digits and x.absprec >= digits


def test_embedding_and_lift():
    x = T(F(20, 27), 3, 10)
    assert (x.exponent, x.precision) == (-3, 10)
    assert nu(3, x.lift() - F(20, 27)) >= 7
    z = T(0, 3, 5)
    assert z.is_zero and z.exponent == INFINITY


def test_residue():
    x = T(F(1, 2), 3, 5)
    assert x.residue(2) == 5
    with pytest.raises(PrecisionError):
        x.residue(6)


def test_addition_can_lose_valuation_but_not_soundness():
    x = T(1, 3, 4)
    y = T(-1 + 81 * 5, 3, 6)
    s = x + y
    assert s.is_zero and s.exponent == 4  # only 4 digits were known
    s2 = T(1, 3, 8) + T(-1 + 81 * 5, 3, 8)
    assert s2.exponent == 4 and agree(s2, F(81 * 5), 8)


@settings(max_examples=80, deadline=None)
@given(three_integral, three_integral, three_integral, st.integers(1, 60))
def test_embedding_is_a_ring_homomorphism(r, s, u, N):
    er, es, eu = T(r, 3, N), T(s, 3, N), T(u, 3, N)
    assert agree(er + es, r + s, min(er.absprec, es.absprec))
    assert agree(er * es, r * s, (er * es).absprec)
    assert ((er + es) + eu - (er + (es + eu))).is_zero
    assert (er * (es + eu) - (er * es + er * eu)).is_zero
    if r * s != 0:
        assert (er * es).absprec >= min(N + nu(3, r) + nu(3, s), INFINITY)


@settings(max_examples=40, deadline=None)
@given(nonzero_ti, st.integers(1, 40))
def test_inverse(r, N):
    x = T(r, 3, N)
    assert (x * x.inverse() - 1).is_zero_to(N)


def test_padic_log_zero():
    assert padic_log(T(1, 3, 10), 5).is_zero


def test_padic_log_matches_exact_partial_sum():
    x = T(4, 3, 40)
    got = padic_log(x, 30)
    oracle = sum((F((-1) ** (n + 1) * 3**n, n) for n in range(1, 31)), F(0))
    assert got.absprec >= 20
    assert agree(got, oracle, got.absprec)
    # and the truncation bound is honest: the omitted terms are below it
    for n in range(31, 200):
        assert n - nu(3, n) >= log_tail_bound(30, 1)


def test_padic_log_rejects_divergent_and_short():
    with pytest.raises(ValueError):
        padic_log(T(2, 3, 10), 10)
    with pytest.raises(PrecisionError):
        padic_log(T(4, 3, 40), 5, target=20)


def test_tail_bound_is_a_lower_bound():
    for v, scale in ((1, 1), (2, 1), (1, 2), (3, 2)):
        for terms in range(1, 120):
            bound = log_tail_bound(terms, v, 3, scale)
            brute = min(n * v - scale * nu(3, n) for n in range(terms + 1, 30 * terms + 100))
            assert bound <= brute


@settings(max_examples=20, deadline=None)
@given(three_integral, three_integral)
def test_log_is_multiplicative_on_principal_units(r, s):
    N = 30
    terms = log_terms_needed(1, N)
    work = N + 6
    x, y = T(1 + 3 * r, 3, work), T(1 + 3 * s, 3, work)
    lhs = padic_log(x * y, terms)
    rhs = padic_log(x, terms) + padic_log(y, terms)
    assert min(lhs.absprec, rhs.absprec) >= N
    assert (lhs - rhs).is_zero_to(N)


# -- the quadratic extension ------------------------------------------------


def exact_quad(a, b, c, d):
    return a * c - 3 * b * d, a * d + b * c


@settings(max_examples=50, deadline=None)
@given(three_integral, three_integral, three_integral, three_integral)
def test_quad_multiplication(a, b, c, d):
    N = 20
    x, y = QuadExt.from_rationals(a, b, N), QuadExt.from_rationals(c, d, N)
    p = x * y
    ea, eb = exact_quad(a, b, c, d)
    assert agree(p.a, ea, p.a.absprec) or (ea == 0 and p.a.is_zero)
    assert agree(p.b, eb, p.b.absprec) or (eb == 0 and p.b.is_zero)


@settings(max_examples=50, deadline=None)
@given(three_integral, three_integral)
def test_norm_valuation(a, b):
    if a == 0 and b == 0:
        return
    x = QuadExt.from_rationals(a, b, 20)
    # ord_3(a^2 + 3b^2) = ord_pi(x), since the norm is x times its conjugate
    assert x.norm().valuation == x.valuation
    assert x.valuation == min(2 * nu(3, a), 2 * nu(3, b) + 1)


def test_pi_shifts():
    x = QuadExt.from_rationals(F(1, 2), 5, 10)
    assert x.times_pi().valuation == x.valuation + 1
    y = x.times_pi().over_pi()
    assert (y - x).is_zero_to(18)


def test_cube_root_of_unity():
    assert cube_root_check(1)
    assert cube_root_check(20)
    assert cube_root_check(40)
    w = omega(20)
    assert not (w - 1).is_zero
    assert not (w * w - 1).is_zero
    assert (w * w + w + 1).is_zero_to(40)


def test_log_omega_vanishes():
    assert log_omega_vanishes(40)
    # 1 + pi = -2 omega^2, so its log is half of log 4: purely rational, order 2 in pi units
    lg = padic_log(QuadExt.from_rationals(1, 1, 50), 120)
    assert lg.b.is_zero_to(40)
    half_log4 = padic_log(T(4, 3, 50), 120).scale(F(1, 2))
    assert (lg.a - half_log4).is_zero_to(40)
    assert lg.valuation == 2
    # 1 + 3 pi is no root of unity times a rational: nonzero log of order 3
    lg = padic_log(QuadExt.from_rationals(1, 3, 50), 60)
    assert not lg.is_zero and lg.valuation == 3 and not lg.b.is_zero


def test_lemma42_partial_sums():
    assert lemma42_partial(1) == 1
    assert lemma42_partial(2) == 0


def test_lemma42_tail_bound_brute_force():
    # every term with k >= K has order at least the bound, so the partial sum
    # of a vanishing series inherits it
    for K in range(3, 81):
        bound = lemma42_tail_bound(K)
        assert bound == K - math.ceil(math.log(2 * K + 1, 3) - 1e-12)
        assert all(k - nu(3, 2 * k + 1) >= bound for k in range(K, K + 2000))
        assert nu(3, lemma42_partial(K)) >= bound


def test_lemma42_partial_orders_are_unbounded():
    K0 = next(K for K in range(3, 200) if lemma42_tail_bound(K) > 20)
    assert all(nu(3, lemma42_partial(K)) > 20 for K in range(K0, 100))


def test_lemma42_closed_form():
    assert lemma42_closed_form_check(5, 20)
    assert lemma42_closed_form_check(20, 60)
    with pytest.raises(PrecisionError):
        lemma42_closed_form_check(20, 10)


def test_lemma42_routes_cross_check():
    """The exact partial sum, embedded, equals the extension-field odd-power sum."""
    for K in (5, 12, 30):
        direct = odd_power_series(K, 30)
        exact = lemma42_partial(K)
        assert agree(direct.a, exact, 25)
        assert direct.b.is_zero
    via_log = log_difference_series(60, 30)
    assert via_log.is_zero_to(40)
