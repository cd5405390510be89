"""Finite-precision p-adic numbers and the ramified extension Q_3(sqrt(-3)).

A :class:`TruncatedPadic` stores ``unit * p**exponent`` where ``unit`` is only
known modulo ``p**precision``; its *absolute precision* is
``exponent + precision``. A value that is congruent to 0 modulo the known
digits is a *zero marker*: ``unit == 0``, ``precision == 0`` and ``exponent``
holds the absolute precision (``INFINITY`` for an exact zero).

Precision is tracked pessimistically: sums keep the smaller absolute precision,
products the smaller relative precision, and scaling by an exact rational
shifts the exponent without inventing digits.

:class:`QuadExt` is ``a + b*pi`` with ``pi = sqrt(-3)`` and ``a, b`` 3-adic.
Its valuations and precisions are counted in powers of ``pi``, so
``ord(3) == 2`` in those units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .claims import PrecisionError
from .valuation import INFINITY, check_odd_prime, nu_int, split_unit

LOG_GUARD = 4


def _floor_log(p: int, n: int) -> int:
    j = 0
    while n >= p:
        n //= p
        j += 1
    return j


@dataclass(frozen=True, slots=True)
class TruncatedPadic:
    p: int
    unit: int
    exponent: Union[int, float]
    precision: int

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls, p: int, absprec=INFINITY) -> "TruncatedPadic":
        return cls(p, 0, absprec, 0)

    @classmethod
    def from_rational(cls, x, p: int, precision: int) -> "TruncatedPadic":
        """Embed an exact rational with ``precision`` known relative digits."""
        check_odd_prime(p)
        if precision < 1:
            raise ValueError("precision must be positive")
        x = Fraction(x)
        if x == 0:
            return cls.zero(p)
        un, en = split_unit(p, x.numerator)
        ud, ed = split_unit(p, x.denominator)
        mod = p**precision
        return cls(p, un * pow(ud, -1, mod) % mod, en - ed, precision)

    @classmethod
    def from_parts(cls, p: int, value: int, shift, absprec) -> "TruncatedPadic":
        """Normalise the integer ``value * p**shift`` known modulo ``p**absprec``."""
        if absprec == INFINITY:
            raise ValueError("from_parts needs a finite absolute precision")
        room = absprec - shift
        if room <= 0:
            return cls.zero(p, absprec)
        value %= p**room
        if value == 0:
            return cls.zero(p, absprec)
        u, e = split_unit(p, value)
        return cls(p, u, shift + e, room - e)

    # -- inspection ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def absprec(self):
        return self.exponent + self.precision

    @property
    def valuation(self):
        """Order of the value; for a zero marker, the certified lower bound."""
        return self.exponent

    def lift(self) -> Fraction:
        """The canonical rational representative ``unit * p**exponent``."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.exponent

    def residue(self, t: int) -> int:
        """The value modulo ``p**t`` as an integer in ``[0, p**t)``."""
        if t <= 0:
            return 0
        if self.absprec < t:
            raise PrecisionError(f"only {self.absprec} digits known, {t} requested")
        if self.is_zero:
            return 0
        if self.exponent < 0:
            raise ValueError("value is not p-integral")
        mod = self.p**t
        return self.unit * pow(self.p, self.exponent, mod) % mod if self.exponent < t else 0

    def truncate(self, absprec) -> "TruncatedPadic":
        """Forget every digit at or beyond ``p**absprec``."""
        if absprec >= self.absprec:
            return self
        if self.is_zero or absprec <= self.exponent:
            return TruncatedPadic.zero(self.p, absprec)
        n = absprec - self.exponent
        return TruncatedPadic(self.p, self.unit % self.p**n, self.exponent, n)

    def is_zero_to(self, absprec) -> bool:
        """True iff the value is certified to vanish modulo ``p**absprec``."""
        return self.is_zero and self.exponent >= absprec

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "TruncatedPadic":
        if isinstance(other, TruncatedPadic):
            if other.p != self.p:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TruncatedPadic.zero(self.p)
            if self.absprec == INFINITY:
                raise ValueError("cannot size an embedding against an exact zero")
            rel = max(1, self.absprec - nu_int(self.p, Fraction(other).numerator)
                      + nu_int(self.p, Fraction(other).denominator))
            return TruncatedPadic.from_rational(other, self.p, rel)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        A = min(self.absprec, other.absprec)
        live = [x for x in (self, other) if not x.is_zero]
        if not live:
            return TruncatedPadic.zero(self.p, A)
        if A == INFINITY:
            raise ValueError("exact nonzero values cannot arise here")
        lo = min(x.exponent for x in live)
        value = sum(x.unit * self.p ** (x.exponent - lo) for x in live)
        return TruncatedPadic.from_parts(self.p, value, lo, A)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return TruncatedPadic(self.p, -self.unit % self.p**self.precision, self.exponent, self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedPadic):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return TruncatedPadic.zero(self.p, self.exponent + other.exponent)
        n = min(self.precision, other.precision)
        return TruncatedPadic(self.p, self.unit * other.unit % self.p**n, self.exponent + other.exponent, n)

    __rmul__ = __mul__

    def scale(self, r) -> "TruncatedPadic":
        """Multiply by an exact nonzero rational; relative precision is unchanged."""
        r = Fraction(r)
        if r == 0:
            return TruncatedPadic.zero(self.p)
        un, en = split_unit(self.p, r.numerator)
        ud, ed = split_unit(self.p, r.denominator)
        if self.is_zero:
            return TruncatedPadic.zero(self.p, self.exponent + en - ed)
        mod = self.p**self.precision
        return TruncatedPadic(self.p, self.unit * un * pow(ud, -1, mod) % mod,
                              self.exponent + en - ed, self.precision)

    def inverse(self) -> "TruncatedPadic":
        if self.is_zero:
            raise ZeroDivisionError("inverse of a p-adic zero marker")
        mod = self.p**self.precision
        return TruncatedPadic(self.p, pow(self.unit, -1, mod), -self.exponent, self.precision)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if not isinstance(other, TruncatedPadic):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedPadic.from_rational(1, self.p, max(self.precision, 1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


class QuadExt:
    """``a + b*sqrt(-3)`` over truncated 3-adic coefficients."""

    __slots__ = ("a", "b")

    def __init__(self, a: TruncatedPadic, b: TruncatedPadic):
        if a.p != 3 or b.p != 3:
            raise ValueError("QuadExt is defined over Q_3 only")
        self.a = a
        self.b = b

    @classmethod
    def from_rationals(cls, a, b, precision: int) -> "QuadExt":
        return cls(TruncatedPadic.from_rational(a, 3, precision),
                   TruncatedPadic.from_rational(b, 3, precision))

    def __repr__(self) -> str:
        return f"QuadExt({self.a!r}, {self.b!r})"

    @property
    def absprec(self):
        """Known digits, counted in powers of sqrt(-3)."""
        return min(2 * self.a.absprec, 2 * self.b.absprec + 1)

    @property
    def valuation(self):
        """Order in powers of sqrt(-3); a lower bound when the value is a zero marker.

        The two components contribute orders of different parity, so no
        cancellation can occur between them.
        """
        cands = []
        if not self.a.is_zero:
            cands.append(2 * self.a.exponent)
        if not self.b.is_zero:
            cands.append(2 * self.b.exponent + 1)
        v = min(cands, default=INFINITY)
        return min(v, self.absprec)

    @property
    def is_zero(self) -> bool:
        return self.valuation >= self.absprec

    def is_zero_to(self, absprec) -> bool:
        return self.is_zero and self.absprec >= absprec

    def truncate(self, absprec) -> "QuadExt":
        if absprec == INFINITY:
            return self
        return QuadExt(self.a.truncate(math.ceil(absprec / 2)),
                       self.b.truncate(math.ceil((absprec - 1) / 2)))

    def norm(self) -> TruncatedPadic:
        return self.a * self.a + (self.b * self.b).scale(3)

    def __add__(self, other):
        other = self._coerce(other)
        return QuadExt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadExt(a * c - (b * d).scale(3), a * d + b * c)

    __rmul__ = __mul__

    def scale(self, r) -> "QuadExt":
        return QuadExt(self.a.scale(r), self.b.scale(r))

    def times_pi(self) -> "QuadExt":
        # (a + b pi) pi = -3b + a pi
        return QuadExt(self.b.scale(-3), self.a)

    def over_pi(self) -> "QuadExt":
        # (a + b pi) / pi = b + (-a/3) pi
        return QuadExt(self.b, self.a.scale(Fraction(-1, 3)))

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, TruncatedPadic):
            return QuadExt(other, TruncatedPadic.zero(3))
        if isinstance(other, (int, Fraction)):
            ref = self.a if self.a.absprec != INFINITY else self.b
            return QuadExt(ref._coerce(other), TruncatedPadic.zero(3))
        raise TypeError(f"cannot combine QuadExt with {type(other).__name__}")


Element = Union[TruncatedPadic, QuadExt]


def _units(x: Element) -> tuple[int, int]:
    """(prime, ord of the prime) in the units ``x`` uses for valuations."""
    if isinstance(x, QuadExt):
        return 3, 2
    return x.p, 1


def log_tail_bound(terms: int, v, p: int = 3, scale: int = 1):
    """Lower bound on the order of every log-series term ``y**n / n`` with ``n > terms``.

    ``v`` is the order of ``y`` and ``scale`` the order of ``p`` in the same
    units. Uses ``ord(n) <= floor(log_p n)``; within the block
    ``p**j <= n < p**(j+1)`` the bound is smallest at the first index, and
    block minima increase from the second block on, so two blocks suffice.
    """
    n0 = terms + 1
    j = _floor_log(p, n0)
    first = n0 * v - scale * j
    second = p ** (j + 1) * v - scale * (j + 1)
    return min(first, second)


def log_terms_needed(v, target, p: int = 3, scale: int = 1) -> int:
    """Fewest terms whose tail bound clears ``target`` by the guard margin."""
    if v <= 0:
        raise ValueError("log series diverges for ord(y) <= 0")
    terms = 1
    while log_tail_bound(terms, v, p, scale) < target + LOG_GUARD * scale:
        terms += 1
    return terms


def padic_log(x: Element, terms: int, target=None) -> Element:
    """``log(x) = sum_{n>=1} (-1)**(n+1) y**n / n`` with ``y = x - 1``.

    The result is truncated to what the computation certifies: the absolute
    precision of the partial sum (divisions by ``n`` already shifted it) and
    the tail bound of the omitted terms. With ``target`` given, raises
    :class:`PrecisionError` unless ``terms`` certifies ``target`` digits (in
    the element's own valuation units) plus the guard.
    """
    if terms < 1:
        raise ValueError("terms must be positive")
    p, scale = _units(x)
    y = x - 1
    v = y.valuation
    if y.is_zero:
        return y
    if v <= 0:
        raise ValueError(f"log series diverges: ord(x - 1) = {v}")
    tail = log_tail_bound(terms, v, p, scale)
    if target is not None and tail < target + LOG_GUARD * scale:
        raise PrecisionError(f"{terms} terms certify only {tail} digits, need {target}")
    power = y
    total = y
    for n in range(2, terms + 1):
        power = power * y
        term = power.scale(Fraction(1, n))
        total = total - term if n % 2 == 0 else total + term
    return total.truncate(tail)


def omega(precision: int) -> QuadExt:
    """The primitive cube root of unity ``(-1 + sqrt(-3)) / 2``."""
    return QuadExt.from_rationals(Fraction(-1, 2), Fraction(1, 2), precision)


def cube_root_check(precision: int) -> bool:
    """omega**3 == 1 to ``precision`` 3-adic digits."""
    if precision < 1:
        raise ValueError("precision must be positive")
    w = omega(precision)
    return (w * w * w - 1).is_zero_to(2 * precision)


def log_omega_vanishes(precision: int) -> bool:
    """log(omega) is 0 to ``precision`` 3-adic digits."""
    target = 2 * precision
    terms = log_terms_needed(1, target, 3, 2)
    working = precision + _floor_log(3, terms) + 2
    return padic_log(omega(working), terms, target).is_zero_to(target)


def lemma42_partial(K: int) -> Fraction:
    """Exact partial sum ``sum_{k<K} (-3)**k / (2k+1)``."""
    if K < 1:
        raise ValueError("K must be positive")
    return sum((Fraction((-3) ** k, 2 * k + 1) for k in range(K)), Fraction(0))


def lemma42_tail_bound(K: int) -> int:
    """``K - ceil(log_3(2K+1))``: lower bound on the order of every term with ``k >= K``."""
    return K - _ceil_log3(2 * K + 1)


def _ceil_log3(n: int) -> int:
    j, q = 0, 1
    while q < n:
        q *= 3
        j += 1
    return j


def odd_power_series(terms: int, precision: int) -> QuadExt:
    """``(1/pi) * sum_{k<terms} pi**(2k+1) / (2k+1)`` evaluated in the extension."""
    pi = QuadExt.from_rationals(0, 1, precision)
    pi_sq = pi * pi
    power = pi
    total = QuadExt(TruncatedPadic.zero(3), TruncatedPadic.zero(3))
    for k in range(terms):
        total = total + power.scale(Fraction(1, 2 * k + 1))
        power = power * pi_sq
    return total.over_pi()


def log_difference_series(terms: int, precision: int) -> QuadExt:
    """``(log(1 + pi) - log(1 - pi)) / (2 pi)`` from two truncated log series."""
    one_plus = QuadExt.from_rationals(1, 1, precision)
    one_minus = QuadExt.from_rationals(1, -1, precision)
    diff = padic_log(one_plus, terms) - padic_log(one_minus, terms)
    return diff.over_pi().scale(Fraction(1, 2))


def lemma42_closed_form_check(precision: int, terms: int) -> bool:
    """Both evaluations of ``sum (-3)**k/(2k+1)`` agree and vanish to ``precision`` digits.

    Route one sums the odd powers of sqrt(-3) directly; route two takes the
    difference of the logarithms of ``1 +- sqrt(-3)``. ``terms`` is the number
    of log-series terms (route one uses the matching ``(terms + 1) // 2`` odd
    powers).
    """
    target = 2 * precision
    # dividing by pi costs one pi-digit
    if log_tail_bound(terms, 1, 3, 2) - 1 < target:
        raise PrecisionError(f"{terms} terms cannot certify {precision} digits")
    working = precision + _floor_log(3, 2 * terms + 1) + 2
    direct = odd_power_series((terms + 1) // 2, working).truncate(log_tail_bound(terms, 1, 3, 2) - 1)
    via_log = log_difference_series(terms, working)
    return (direct.is_zero_to(target) and via_log.is_zero_to(target)
            and (direct - via_log).is_zero_to(target))
