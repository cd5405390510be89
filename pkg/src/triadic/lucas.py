"""Lucas sequences u_n(A, B) and the mod-3 comparison of u_n(m-2, 1)/n with u_n(-1, 1)/n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .claims import ClaimId, ClaimResult, DomainError, Measured, Mode, Required
from .valuation import binomial, nu


@dataclass(frozen=True)
class LucasParams:
    A: int
    B: int = 1

    @property
    def discriminant(self) -> int:
        return self.A * self.A - 4 * self.B


def lucas_u(params: LucasParams, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    A, B = params.A, params.B
    prev, cur = 0, 1
    if n == 0:
        return 0
    for _ in range(n - 1):
        prev, cur = cur, A * cur - B * prev
    return cur


def lucas_u_closed(m: int, n: int) -> int:
    """u_n(m-2, 1) from the binomial expansion over odd k.

    Evaluated with rationals; a non-integral result means the formula or the
    arithmetic is broken, so it raises rather than returning a fraction.
    """
    if n < 1:
        raise ValueError("n must be positive")
    delta = m * (m - 4)
    total = Fraction(0)
    for k in range(1, n + 1, 2):
        total += Fraction(n, k) * binomial(n - 1, k - 1) * (m - 2) ** (n - k) * delta ** ((k - 1) // 2)
    total /= 2 ** (n - 1)
    if total.denominator != 1:
        raise ArithmeticError(f"closed form gave non-integer {total} for m={m}, n={n}")
    return total.numerator


_NEG11 = (0, 1, -1)


def u_neg11_fast(n: int) -> int:
    """u_n(-1, 1), which has period 3: 0, 1, -1, 0, 1, -1, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _NEG11[n % 3]


def _bound_part(label: str, params: dict, diff: Fraction, bound) -> ClaimResult:
    measured = nu(3, diff)
    return ClaimResult(
        ClaimId.LEMMA21,
        {**params, "part": label},
        Measured("valuation", measured),
        Required("valuation_at_least", bound),
        Mode.EXACT,
        vacuous=bound <= 0 and diff.denominator % 3 != 0,
    )


def check_lemma21(m: int, n: int) -> ClaimResult:
    """Check the three congruences relating u_n(m-2,1)/n to u_n(-1,1)/n.

    Parts, each reported separately:

    * ``"corrected"`` (m != 4): the difference minus ((m-1)/3)*C(n-1, 2) has order
      at least ord_3(m-1);
    * ``"m4"`` (m == 4): the plain difference has order at least 1;
    * ``"uniform"`` (always): the plain difference has order at least
      ord_3(m-1) - 1. For m = 4 that bound is 0 and the part is vacuous.

    The m = 4 part fails whenever 3 divides n, since then u_n(2,1)/n = 1 while
    u_n(-1,1) = 0; the result records that rather than hiding it.
    """
    if m % 3 != 1:
        raise DomainError(f"m must be 1 mod 3, got {m}")
    if n < 1:
        raise DomainError("n must be positive")
    t = nu(3, m - 1)
    params = {"m": m, "n": n}
    diff = Fraction(lucas_u(LucasParams(m - 2), n), n) - Fraction(u_neg11_fast(n), n)
    parts = []
    if m != 4:
        parts.append(_bound_part("corrected", params, diff - Fraction(m - 1, 3) * binomial(n - 1, 2), t))
    else:
        parts.append(_bound_part("m4", params, diff, 1))
    parts.append(_bound_part("uniform", params, diff, t - 1))
    return ClaimResult.combine(ClaimId.LEMMA21, params, parts)
