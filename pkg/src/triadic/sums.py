"""Central binomial sums, the exact identities linking them, and their truncated 3-adic evaluation.

Exact evaluators return :class:`~fractions.Fraction` (or ``int``) values and
the ``check_*`` functions compare both sides of an identity exactly; there is
no tolerance anywhere.

The ``*_truncated`` evaluators compute the same sums modulo ``p**absprec``
by carrying every binomial as ``unit * p**e``, so division by ``k + 1`` never
needs an inverse of ``p``. They return :class:`~triadic.padic.TruncatedPadic`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .claims import DomainError
from .lucas import LucasParams
from .padic import TruncatedPadic
from .valuation import binomial, check_odd_prime, generalized_binomial, nu_int

# ---------------------------------------------------------------------------
# central binomials


_CENTRAL = [1]


def central_binomials(count: int) -> list[int]:
    """``[C(0,0), C(2,1), ..., C(2(count-1), count-1)]``.

    Grown with ``C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)``; the shared
    list only ever gets longer, so readers never see different values.
    """
    while len(_CENTRAL) < count:
        k = len(_CENTRAL) - 1
        q, r = divmod(_CENTRAL[k] * 2 * (2 * k + 1), k + 1)
        assert r == 0
        _CENTRAL.append(q)
    return _CENTRAL[:count]


class Family(enum.Enum):
    CENTRAL = "central"
    SCALED = "scaled"
    ALTERNATING = "alternating"
    SUN_TAURASO_RHS = "sun_tauraso_rhs"
    SUN32_RHS = "sun32_rhs"


@dataclass(frozen=True)
class SumSpec:
    family: Family
    n: int
    m: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.family is not Family.CENTRAL and self.m == 0:
            raise ValueError("m must be nonzero")

    def evaluate(self) -> Fraction:
        if self.family is Family.CENTRAL:
            return Fraction(central_sum(self.n))
        if self.family is Family.SCALED:
            return scaled_sum(self.m, self.n)
        if self.family is Family.ALTERNATING:
            return alt_sum(self.m, self.n)
        if self.family is Family.SUN_TAURASO_RHS:
            return Fraction(sun_tauraso_rhs(self.m, self.n))
        return sun32_rhs(self.m, self.n)


def _check_mn(m: int, n: int) -> None:
    if m == 0:
        raise ValueError("m must be nonzero")
    if n < 1:
        raise ValueError("n must be positive")


def central_sum(n: int) -> int:
    """``sum_{k<n} C(2k, k)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(central_binomials(n))


def scaled_sum(m: int, n: int) -> Fraction:
    """``sum_{k<n} C(2k, k) / m**k``."""
    _check_mn(m, n)
    acc = 0
    for c in central_binomials(n):
        # Horner in m: numerator over m**(n-1)
        acc = acc * m + c
    return Fraction(acc, m ** (n - 1))


def alt_sum(m: int, n: int) -> Fraction:
    """``sum_{k<n} (-1)**k C(2k, k) C(n-1, k) / m**k``."""
    _check_mn(m, n)
    acc = 0
    row = 1  # C(n-1, k)
    for k, c in enumerate(central_binomials(n)):
        acc = acc * m + (row * c if k % 2 == 0 else -row * c)
        row = row * (n - 1 - k) // (k + 1)
    return Fraction(acc, m ** (n - 1))


def _lucas_table(m: int, n: int) -> list[int]:
    """``[u_0, ..., u_n]`` for ``(A, B) = (m - 2, 1)``."""
    A = LucasParams(m - 2).A
    u = [0, 1]
    while len(u) <= n:
        u.append(A * u[-1] - u[-2])
    return u[: n + 1]


def sun_tauraso_rhs(m: int, n: int) -> int:
    """``sum_{k<n} C(2n, k) u_{n-k}(m-2, 1)``."""
    _check_mn(m, n)
    u = _lucas_table(m, n)
    return sum(binomial(2 * n, k) * u[n - k] for k in range(n))


def check_sun_tauraso(m: int, n: int) -> bool:
    return m ** (n - 1) * scaled_sum(m, n) == sun_tauraso_rhs(m, n)


def check_rewrite_identity(n: int, k: int) -> bool:
    """``C(2n, k)/n == (2 C(2n-1, k) - C(2n, k)) / (n - k)`` for ``0 <= k < n``."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    lhs = Fraction(binomial(2 * n, k), n)
    rhs = Fraction(2 * binomial(2 * n - 1, k) - binomial(2 * n, k), n - k)
    return lhs == rhs


def check_st2(m: int, n: int) -> bool:
    _check_mn(m, n)
    u = _lucas_table(m, n)
    lhs = Fraction(m ** (n - 1), n) * scaled_sum(m, n)
    rhs = sum(
        (Fraction((2 * binomial(2 * n - 1, k) - binomial(2 * n, k)) * u[n - k], n - k) for k in range(n)),
        Fraction(0),
    )
    return lhs == rhs


def sun32_rhs(m: int, n: int) -> Fraction:
    """``sum_{k=1}^{n} (-1)**(k-1)/k * C(n-1, k-1) * scaled_sum(m, k)``."""
    _check_mn(m, n)
    total = Fraction(0)
    prefix = Fraction(0)
    inv_m = Fraction(1, m)
    for k, c in enumerate(central_binomials(n), start=1):
        prefix += c * inv_m ** (k - 1)
        term = Fraction(binomial(n - 1, k - 1), k) * prefix
        total += term if k % 2 == 1 else -term
    return total


def check_sun32(m: int, n: int) -> bool:
    return alt_sum(m, n) / n == sun32_rhs(m, n)


def convolution_sides(n: int, x) -> tuple[Fraction, Fraction]:
    """Both sides of the central-binomial convolution identity.

    Left: ``sum_{k<=n} C(2k,k) C(n,k) (-x)**k``.
    Right: ``4**-n sum_{j<=n} C(2j,j) C(2(n-j), n-j) (1-4x)**j``. The printed
    source indexes the power by ``k`` inside a sum over ``j``; ``j`` is meant.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    c = central_binomials(n + 1)
    lhs = sum((c[k] * binomial(n, k) * (-x) ** k for k in range(n + 1)), Fraction(0))
    y = 1 - 4 * x
    rhs = sum((c[j] * c[n - j] * y**j for j in range(n + 1)), Fraction(0)) / 4**n
    return lhs, rhs


def check_x1_specialization(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    c = central_binomials(n)
    lhs = sum((-1) ** k * c[k] * binomial(n - 1, k) for k in range(n))
    rhs = Fraction(sum((-3) ** k * c[k] * c[n - 1 - k] for k in range(n)), 4 ** (n - 1))
    return lhs == rhs


def check_quarter_power(k: int) -> bool:
    """``sum_{l<k} C(2l,l)/4**l == k C(2k,k) / 2**(2k-1)``, both directly and through ``C(-1/2, l)``."""
    if k < 1:
        raise ValueError("k must be positive")
    closed = Fraction(k * binomial(2 * k, k), 2 ** (2 * k - 1))
    via_general = sum(((-1) ** l * generalized_binomial(Fraction(-1, 2), l) for l in range(k)), Fraction(0))
    chain = (-1) ** (k - 1) * generalized_binomial(Fraction(-3, 2), k - 1)
    return scaled_sum(4, k) == closed == via_general == chain


def f_of_a(a: int, m: int) -> tuple[Fraction, int]:
    """The auxiliary double sum used for the alternating congruence, and its residue mod 3.

    ``sum_{k=1}^{3^a} (-1)**(k-1)/m**(k-1) C(3^a-1, k-1)
    sum_{l<k} (2 C(2k-1, l) - C(2k, l)) C(k-l-1, 2)`` where ``C(j, 2)`` is
    zero for ``j < 2``. The residue is well defined because 3 does not
    divide ``m``.
    """
    if a < 2:
        raise DomainError("a must be at least 2")
    if m % 3 != 1:
        raise DomainError(f"m must be 1 mod 3, got {m}")
    top = 3**a
    numer = 0  # over m**(top - 1)
    for k in range(1, top + 1):
        inner = sum(
            (2 * binomial(2 * k - 1, l) - binomial(2 * k, l)) * binomial(k - l - 1, 2)
            for l in range(k - 2)  # C(k-l-1, 2) vanishes for l >= k-2
        )
        term = binomial(top - 1, k - 1) * inner * m ** (top - k)
        numer += term if k % 2 == 1 else -term
    value = Fraction(numer, m ** (top - 1))
    return value, value.numerator * pow(value.denominator, -1, 3) % 3


def triple_block_sum(k: int) -> int:
    """``sum (2 C(2k-1, l) - C(2k, l))`` over ``0 <= l <= k-1`` with ``3 | k - l``."""
    return sum(2 * binomial(2 * k - 1, l) - binomial(2 * k, l) for l in range(k % 3, k, 3))


def triple_block_target(k: int) -> int:
    """``C(2k'-1, k'-1)`` with ``k' = k / 3**ord_3(k)`` when ``3 | k``; 0 otherwise.

    For ``3`` not dividing ``k`` the block sum is 0 mod 3 (``k = 1`` gives
    the empty sum), so the quoted binomial only applies to multiples of 3;
    that is also the only case the double sum above ever uses.
    """
    if k % 3:
        return 0
    kp = k // 3 ** nu_int(3, k)
    return binomial(2 * kp - 1, kp - 1)


def check_triple_block(k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return (triple_block_sum(k) - triple_block_target(k)) % 3 == 0


def check_row_facts(a: int) -> bool:
    """``C(3^a-1, k) = (-1)**k`` mod 3 for all ``k < 3^a``, and ``sum_{k<3^a} C(2*3^a-3, k) = 1`` mod 3."""
    if a < 1:
        raise ValueError("a must be positive")
    top = 3**a
    row = 1
    for k in range(top):
        if (row - (-1) ** k) % 3:
            return False
        row = row * (top - 1 - k) // (k + 1)
    return sum(binomial(2 * top - 3, k) for k in range(top)) % 3 == 1


def row_sum_closed(a: int) -> int:
    """``sum_{k<3^a} C(2*3^a-3, k)`` in closed form: half the row plus the middle-right entry."""
    top = 3**a
    return 2 ** (2 * top - 4) + binomial(2 * top - 3, top - 1)


# ---------------------------------------------------------------------------
# truncated evaluation


@lru_cache(maxsize=64)
def _split_table(p: int, width: int, count: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """For ``j < count``: unit of ``j`` mod ``p**width``, its inverse, and ``ord_p(j)`` (``j = 0`` unused)."""
    mod = p**width
    units, invs, vals = [1], [1], [0]
    for j in range(1, count):
        e = nu_int(p, j)
        u = j // p**e % mod
        units.append(u)
        invs.append(pow(u, -1, mod))
        vals.append(e)
    return tuple(units), tuple(invs), tuple(vals)


_CENTRAL_PADIC: dict[tuple[int, int], tuple[list[int], list[int]]] = {}


def central_binomials_padic(count: int, p: int, width: int) -> tuple[list[int], list[int]]:
    """Units mod ``p**width`` and ``p``-orders of ``C(2k, k)`` for ``k < count``."""
    units, exps = _CENTRAL_PADIC.setdefault((p, width), ([1], [0]))
    if len(units) < count:
        mod = p**width
        su, si, sv = _split_table(p, width, 2 * count + 2)
        u, e = units[-1], exps[-1]
        for k in range(len(units) - 1, count - 1):
            # C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)
            u = u * 2 * su[2 * k + 1] * si[k + 1] % mod
            e += sv[2 * k + 1] - sv[k + 1]
            units.append(u)
            exps.append(e)
    return units[:count], exps[:count]


def _check_unit(m: int, p: int) -> None:
    check_odd_prime(p)
    if m % p == 0:
        raise DomainError(f"{p} divides m={m}; the sum is not {p}-integral")


def central_sum_truncated(n: int, absprec: int, p: int = 3) -> TruncatedPadic:
    return scaled_sum_truncated(1, n, absprec, p)


def scaled_sum_truncated(m: int, n: int, absprec: int, p: int = 3) -> TruncatedPadic:
    return scaled_prefix_truncated(m, n, absprec, p)[-1]


def scaled_prefix_truncated(m: int, n_max: int, absprec: int, p: int = 3) -> list[TruncatedPadic]:
    """``scaled_sum(m, n) mod p**absprec`` for ``n = 1..n_max`` in one pass."""
    _check_mn(m, n_max)
    _check_unit(m, p)
    mod = p**absprec
    units, exps = central_binomials_padic(n_max, p, absprec)
    inv_m = pow(m, -1, mod)
    scale = 1
    acc = 0
    out = []
    for k in range(n_max):
        e = exps[k]
        if e < absprec:
            acc = (acc + units[k] * scale * p**e) % mod
        scale = scale * inv_m % mod
        out.append(TruncatedPadic.from_parts(p, acc, 0, absprec))
    return out


def alt_sum_truncated(m: int, n: int, absprec: int, p: int = 3) -> TruncatedPadic:
    """``alt_sum(m, n) mod p**absprec``."""
    _check_mn(m, n)
    _check_unit(m, p)
    mod = p**absprec
    cu, ce = central_binomials_padic(n, p, absprec)
    su, si, sv = _split_table(p, absprec, n + 1)
    inv_m = pow(-m, -1, mod)  # folds in the (-1)**k sign
    scale = 1
    ru, re = 1, 0  # C(n-1, k) as unit * p**re
    acc = 0
    top = n - 1
    for k in range(n):
        e = ce[k] + re
        if e < absprec:
            acc += cu[k] * ru * scale * p**e
        if k < top:
            ru = ru * su[top - k] * si[k + 1] % mod
            re += sv[top - k] - sv[k + 1]
        scale = scale * inv_m % mod
    return TruncatedPadic.from_parts(p, acc, 0, absprec)


def alt_sums_truncated(m: int, n_max: int, absprec: int, p: int = 3) -> list[TruncatedPadic]:
    """``alt_sum(m, n) mod p**absprec`` for every ``n = 1..n_max``.

    Walks ``k`` once and updates the whole column of ``C(n-1, k)`` values at
    each step, so the cost is one vectorised pass instead of a loop per ``n``.
    """
    _check_mn(m, n_max)
    _check_unit(m, p)
    mod = p**absprec
    cu, ce = central_binomials_padic(n_max, p, absprec)
    su, si, sv = _split_table(p, absprec, n_max + 1)
    su = np.array(su, dtype=object)
    sv = np.array(sv, dtype=np.int64)
    pw = np.array([p**i for i in range(absprec)] + [0], dtype=object)
    tops = np.arange(n_max)  # N = n - 1
    ru = np.ones(n_max, dtype=object)
    re = np.zeros(n_max, dtype=np.int64)
    acc = np.zeros(n_max, dtype=object)
    inv_m = pow(-m, -1, mod)
    scale = 1
    for k in range(n_max):
        # live columns are N >= k
        coeff = cu[k] * scale % mod
        e = np.minimum(re[k:] + ce[k], absprec)
        acc[k:] += coeff * ru[k:] * pw[e]
        if k + 1 < n_max:
            nxt = slice(k + 1, n_max)
            ru[nxt] = ru[nxt] * su[tops[nxt] - k] * si[k + 1] % mod
            re[nxt] += sv[tops[nxt] - k] - sv[k + 1]
        scale = scale * inv_m % mod
    return [TruncatedPadic.from_parts(p, int(a), 0, absprec) for a in acc]
