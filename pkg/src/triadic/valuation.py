"""Exact integer/rational helpers: p-adic orders, binomials, rational congruences.

Rationals are plain :class:`fractions.Fraction` values. The order of ``0`` is
``INFINITY`` (``math.inf``), which compares above every integer and absorbs
addition, so ``nu(p, x * y) == nu(p, x) + nu(p, y)`` holds without special
cases.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

INFINITY = math.inf

Rational = Union[int, Fraction]
Valuation = Union[int, float]  # an int, or INFINITY


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p!r}")


def nu_int(p: int, n: int) -> Valuation:
    """Order of ``p`` in the integer ``n`` (no primality check)."""
    if n == 0:
        return INFINITY
    n = abs(n)
    e = 0
    # strip large powers first; big sums can carry dozens of factors
    pk, k = p, 1
    while n % pk == 0:
        n //= pk
        e += k
        pk, k = pk * pk, 2 * k
    while n % p == 0:
        n //= p
        e += 1
    return e


def nu(p: int, x: Rational) -> Valuation:
    """p-adic order of a rational; ``INFINITY`` for zero."""
    check_odd_prime(p)
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return nu_int(p, x.numerator) - nu_int(p, x.denominator)


def split_unit(p: int, n: int) -> tuple[int, int]:
    """Write a nonzero integer as ``(u, e)`` with ``n == u * p**e`` and ``p`` not dividing ``u``."""
    if n == 0:
        raise ValueError("zero has no unit part")
    e = nu_int(p, n)
    return n // p**e, e


def digit_sum(n: int, p: int) -> int:
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def nu_factorial(p: int, n: int) -> int:
    """Legendre's formula for the order of ``p`` in ``n!``."""
    check_odd_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n - digit_sum(n, p)) // (p - 1)


def nu_binomial(p: int, n: int, k: int) -> Valuation:
    """Order of ``p`` in ``binomial(n, k)`` via Kummer's carry count.

    Returns ``INFINITY`` when ``k`` is outside ``[0, n]`` (the binomial is 0).
    """
    check_odd_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return INFINITY
    a, b = k, n - k
    carries = carry = 0
    while a or b or carry:
        carry = 1 if (a % p + b % p + carry) >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def binomial(n: int, k: int) -> int:
    """``n(n-1)...(n-k+1)/k!`` for any integer ``n`` and ``k >= 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n >= 0:
        return math.comb(n, k)
    # falling factorial of a negative top; never use reflection
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def generalized_binomial(alpha: Rational, k: int) -> Fraction:
    if k < 0:
        raise ValueError("k must be nonnegative")
    alpha = Fraction(alpha)
    out = Fraction(1)
    for i in range(k):
        out *= alpha - i
    return out / math.factorial(k)


def congruent_mod_power(p: int, t: Valuation, a: Rational, b: Rational) -> bool:
    """Rational congruence ``a = b (mod p^t)``, defined as ``nu_p(a - b) >= t``.

    ``t`` may be zero, negative or ``INFINITY`` (the last meaning equality).
    """
    return nu(p, Fraction(a) - Fraction(b)) >= t


def residue_mod_power(p: int, t: int, x: Rational) -> int:
    """Representative of ``x`` in ``[0, p^t)``; ``x`` must be p-integral."""
    check_odd_prime(p)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not {p}-integral")
    mod = p**t
    return x.numerator * pow(x.denominator, -1, mod) % mod if t > 0 else 0
